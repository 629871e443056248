#include "tradeoff/domain_adaptation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tradeoff/numeric.hpp"

namespace tradeoff {

DaInstance DaInstance::make(DiscreteDistribution source, DiscreteDistribution target,
                            std::vector<std::uint8_t> error_mask) {
    detail::require_same_support(source, target);
    if (error_mask.size() != source.size()) {
        throw std::invalid_argument("error mask length must match the support size");
    }
    return DaInstance(std::move(source), std::move(target), std::move(error_mask));
}

std::pair<double, double> source_target_errors(const DaInstance& inst) {
    StableSum ep, eq;
    for (std::size_t i = 0; i < inst.source().size(); ++i) {
        if (inst.error_mask()[i]) {
            ep.add(inst.source()[i]);
            eq.add(inst.target()[i]);
        }
    }
    return {ep.value(), eq.value()};
}

double bound_tv(const DaInstance& inst) {
    const auto [eps_p, eps_q] = source_target_errors(inst);
    (void)eps_q;
    return eps_p + total_variation(inst.source(), inst.target());
}

double bound_lorenz(const DaInstance& inst, const LorenzCurve& curve) {
    const auto [eps_p, eps_q] = source_target_errors(inst);
    (void)eps_q;
    return 1.0 - lorenz_eval(curve, 1.0 - eps_p);
}

namespace {

double gain(const DaInstance& inst, double eps_p, double lambda) {
    return pr_point_direct(inst.source(), inst.target(), lambda).alpha - lambda * eps_p;
}

}  // namespace

PrBound bound_pr_optimal(const DaInstance& inst, const PrCurve& pr) {
    const auto [eps_p, eps_q] = source_target_errors(inst);
    (void)eps_q;

    // Candidate lambdas: the curve grid plus the instance's likelihood
    // ratios (alpha_lambda is piecewise linear with breakpoints there) and 0.
    std::vector<double> candidates{0.0};
    for (const auto& pt : pr.points()) {
        if (!std::isinf(pt.lambda) && pt.lambda > 0.0) candidates.push_back(pt.lambda);
    }
    const auto& p = inst.source();
    const auto& q = inst.target();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0 && q[i] > 0.0) candidates.push_back(q[i] / p[i]);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    double best_lambda = 0.0;
    double best_gain = -kInf;
    std::size_t best_index = 0;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const double g = gain(inst, eps_p, candidates[k]);
        if (g > best_gain) {
            best_gain = g;
            best_lambda = candidates[k];
            best_index = k;
        }
    }

    // Golden-section polish between the seed's neighbors, run on
    // theta = arctan(lambda) so the unbounded domain stays a unit-scale
    // interval.
    const double lo_lambda = best_index > 0 ? candidates[best_index - 1] : 0.0;
    const double hi_lambda = best_index + 1 < candidates.size()
                                 ? candidates[best_index + 1]
                                 : std::max(2.0 * best_lambda + 1.0, 1.0);
    double a = std::atan(lo_lambda);
    double b = std::atan(hi_lambda);
    const auto objective = [&](double theta) { return gain(inst, eps_p, std::tan(theta)); };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = objective(c), fd = objective(d);
    while (b - a > 1e-8) {
        if (fc >= fd) {  // maximize
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d);
        }
    }
    // The maximizer of the piecewise-linear gain sits at a candidate, so the
    // polish can only confirm it; switch only on a genuine improvement, not
    // last-ulp noise.
    const double polished = std::tan(0.5 * (a + b));
    const double polished_gain = gain(inst, eps_p, polished);
    if (polished_gain > best_gain + 1e-12 * (1.0 + std::abs(best_gain))) {
        best_gain = polished_gain;
        best_lambda = polished;
    }

    return {best_lambda * eps_p +
                (1.0 - pr_point_direct(inst.source(), inst.target(), best_lambda).alpha),
            best_lambda};
}

DaReport bound_report(const DaInstance& inst) {
    DaReport report;
    const auto [eps_p, eps_q] = source_target_errors(inst);
    report.eps_p = eps_p;
    report.eps_q = eps_q;

    report.bound_tv_raw = bound_tv(inst);
    report.bound_tv_clipped = std::clamp(report.bound_tv_raw, 0.0, 1.0);

    const LorenzCurve curve = lorenz_curve(inst.source(), inst.target());
    report.bound_lorenz = bound_lorenz(inst, curve);

    const PrCurve pr = pr_curve(inst.source(), inst.target(), default_lambda_grid());
    const PrBound opt = bound_pr_optimal(inst, pr);
    report.bound_pr = opt.bound;
    report.lambda_star = opt.lambda_star;

    const double alpha_1 = pr_point_direct(inst.source(), inst.target(), 1.0).alpha;
    report.bound_pr_at_lambda_one = eps_p + (1.0 - alpha_1);

    report.informative_tv = report.bound_tv_raw < 1.0;
    report.informative_lorenz = report.bound_lorenz < 1.0;
    report.informative_pr = report.bound_pr < 1.0;

    constexpr double slack = 1e-12;
    report.valid = eps_q <= report.bound_tv_raw + slack &&
                   eps_q <= report.bound_lorenz + slack && eps_q <= report.bound_pr + slack;
    return report;
}

}  // namespace tradeoff
