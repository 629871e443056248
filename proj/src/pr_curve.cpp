#include "tradeoff/pr_curve.hpp"

#include <cmath>
#include <stdexcept>

#include "tradeoff/numeric.hpp"

namespace tradeoff {

PrCurve::PrCurve(std::vector<PrPoint> points) : points_(std::move(points)) {
    if (points_.size() < 2) {
        throw std::invalid_argument("a PR curve needs the two endpoints at least");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (!(points_[i - 1].lambda < points_[i].lambda)) {
            throw std::invalid_argument("PR curve points must be strictly increasing in lambda");
        }
    }
}

std::vector<double> default_lambda_grid(std::size_t m) {
    if (m == 0) throw std::invalid_argument("empty lambda grid");
    std::vector<double> grid(m);
    const double pi = std::acos(-1.0);
    for (std::size_t k = 1; k <= m; ++k) {
        grid[k - 1] = std::tan(static_cast<double>(k) * pi / (2.0 * static_cast<double>(m + 1)));
    }
    return grid;
}

PrPoint pr_point_direct(const DiscreteDistribution& p, const DiscreteDistribution& q,
                        double lambda) {
    detail::require_same_support(p, q);
    if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be in [0, +inf]");
    PrPoint pt;
    pt.lambda = lambda;
    if (lambda == 0.0) {
        pt.alpha = 0.0;
        pt.beta = measure_min(kInf, q, p);  // P(supp Q)
    } else if (std::isinf(lambda)) {
        pt.alpha = measure_min(kInf, p, q);  // Q(supp P)
        pt.beta = 0.0;
    } else {
        pt.alpha = measure_min(lambda, p, q);
        pt.beta = measure_min(1.0 / lambda, q, p);
    }
    return pt;
}

PrPoint pr_point_via_sets(const DiscreteDistribution& p, const DiscreteDistribution& q,
                          double lambda) {
    detail::require_same_support(p, q);
    if (!(lambda > 0.0) || std::isinf(lambda)) {
        throw std::invalid_argument("the set formulation needs finite positive lambda");
    }
    const std::size_t n = p.size();
    std::vector<std::uint8_t> mask(n, 0);
    StableSum p_out, q_in;  // P(complement of A), Q(A)
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i] == 0.0 && q[i] == 0.0) continue;  // inert atom
        if (q[i] <= lambda * p[i]) {
            mask[i] = 1;
            q_in.add(q[i]);
        } else {
            p_out.add(p[i]);
        }
    }
    PrPoint pt;
    pt.lambda = lambda;
    const double pc = p_out.value();
    const double qa = q_in.value();
    pt.alpha = lambda * pc + qa;
    pt.beta = pc + qa / lambda;
    pt.set_mask = std::move(mask);
    return pt;
}

namespace {

PrCurve build_curve(const DiscreteDistribution& p, const DiscreteDistribution& q,
                    const std::vector<double>& grid, bool parallel) {
    if (grid.empty()) throw std::invalid_argument("empty lambda grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0) || std::isinf(grid[i])) {
            throw std::invalid_argument("lambda grid entries must be finite and positive");
        }
        if (i > 0 && !(grid[i - 1] < grid[i])) {
            throw std::invalid_argument("lambda grid must be strictly increasing");
        }
    }
    std::vector<PrPoint> points(grid.size() + 2);
    points.front() = pr_point_direct(p, q, 0.0);
    points.back() = pr_point_direct(p, q, kInf);
    const auto m = static_cast<long long>(grid.size());
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (long long k = 0; k < m; ++k) {
            points[static_cast<std::size_t>(k) + 1] =
                pr_point_direct(p, q, grid[static_cast<std::size_t>(k)]);
        }
    } else {
        for (long long k = 0; k < m; ++k) {
            points[static_cast<std::size_t>(k) + 1] =
                pr_point_direct(p, q, grid[static_cast<std::size_t>(k)]);
        }
    }
    return PrCurve(std::move(points));
}

}  // namespace

PrCurve pr_curve(const DiscreteDistribution& p, const DiscreteDistribution& q,
                 const std::vector<double>& lambda_grid) {
    return build_curve(p, q, lambda_grid, true);
}

PrCurve pr_curve_serial(const DiscreteDistribution& p, const DiscreteDistribution& q,
                        const std::vector<double>& lambda_grid) {
    return build_curve(p, q, lambda_grid, false);
}

bool prd_membership(const DiscreteDistribution& p, const DiscreteDistribution& q, double alpha,
                    double beta) {
    if (!(alpha >= 0.0) || !(beta >= 0.0)) {
        throw std::invalid_argument("membership is defined for nonnegative (alpha, beta)");
    }
    if (alpha == 0.0 && beta == 0.0) return true;
    const double lambda = beta == 0.0 ? kInf : alpha / beta;
    const PrPoint pt = pr_point_direct(p, q, lambda);
    // Slack absorbs the rounding of lambda = alpha/beta for points sitting
    // exactly on the frontier.
    constexpr double tol = 1e-12;
    return alpha <= pt.alpha + tol && beta <= pt.beta + tol;
}

SlopeInterval alpha_subdifferential(const DiscreteDistribution& p, const DiscreteDistribution& q,
                                    double lambda) {
    detail::require_same_support(p, q);
    if (!(lambda >= 0.0) || std::isinf(lambda)) {
        throw std::invalid_argument("lambda must be finite and nonnegative");
    }
    StableSum strictly_above, weakly_above;  // P(q > lambda p), P(q >= lambda p)
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0 && q[i] == 0.0) continue;
        const double lp = lambda * p[i];
        // Boundary atoms reached through a rounded ratio q_i/p_i must still
        // count as ties, so compare with a relative slack.
        const double slack = 1e-12 * std::max(q[i], lp);
        if (q[i] > lp + slack) strictly_above.add(p[i]);
        if (q[i] >= lp - slack) weakly_above.add(p[i]);
    }
    return {strictly_above.value(), weakly_above.value()};
}

}  // namespace tradeoff
