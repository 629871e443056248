#include "tradeoff/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tradeoff/numeric.hpp"

namespace tradeoff {

DiscreteDistribution DiscreteDistribution::normalized(std::vector<double> weights, double tol) {
    if (weights.empty()) {
        throw std::invalid_argument("distribution needs at least one atom");
    }
    StableSum total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double w = weights[i];
        if (!(w >= 0.0)) {  // catches negatives and NaN
            throw std::invalid_argument("negative or non-finite weight at atom " +
                                        std::to_string(i));
        }
        total.add(w);
    }
    const double mass = total.value();
    // A hair of headroom keeps decimal inputs sitting exactly on the
    // tolerance (0.999999 against 1e-6) on the accepted side.
    if (std::abs(mass - 1.0) > tol * (1.0 + 1e-9)) {
        throw std::invalid_argument("weights sum to " + std::to_string(mass) +
                                    ", outside 1 +/- " + std::to_string(tol));
    }
    for (double& w : weights) w /= mass;
    return DiscreteDistribution(std::move(weights));
}

GmmSpec GmmSpec::make(std::vector<GaussianComponent> components, double tol) {
    if (components.empty()) {
        throw std::invalid_argument("mixture needs at least one component");
    }
    StableSum total;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& c = components[i];
        if (!(c.weight > 0.0) || c.weight > 1.0) {
            throw std::invalid_argument("component " + std::to_string(i) +
                                        " weight must lie in (0, 1]");
        }
        if (!(c.std_dev > 0.0) || !std::isfinite(c.std_dev) || !std::isfinite(c.mean)) {
            throw std::invalid_argument("component " + std::to_string(i) +
                                        " needs finite mean and std > 0");
        }
        total.add(c.weight);
    }
    const double mass = total.value();
    if (std::abs(mass - 1.0) > tol) {
        throw std::invalid_argument("component weights sum to " + std::to_string(mass));
    }
    for (auto& c : components) c.weight /= mass;
    return GmmSpec(std::move(components));
}

namespace detail {
void require_same_support(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("distributions live on different support sizes (" +
                                    std::to_string(p.size()) + " vs " +
                                    std::to_string(q.size()) + ")");
    }
}
}  // namespace detail

double measure_min(double scale, const DiscreteDistribution& p, const DiscreteDistribution& q) {
    detail::require_same_support(p, q);
    if (!(scale >= 0.0)) {
        throw std::invalid_argument("scale must be nonnegative");
    }
    StableSum acc;
    if (std::isinf(scale)) {
        // inf * 0 = 0: atoms outside supp(P) contribute nothing.
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] > 0.0) acc.add(q[i]);
        }
        return acc.value();
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc.add(std::min(scale * p[i], q[i]));
    }
    return acc.value();
}

double total_variation(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    detail::require_same_support(p, q);
    StableSum acc;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc.add(std::abs(p[i] - q[i]));
    }
    return acc.value();
}

LikelihoodRatioProfile ratio_profile(const DiscreteDistribution& p,
                                     const DiscreteDistribution& q) {
    detail::require_same_support(p, q);
    const std::size_t n = p.size();
    LikelihoodRatioProfile out;
    out.dp.resize(n);
    out.dq.resize(n);
    out.ratio.resize(n);
    out.inert.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double total = p[i] + q[i];
        if (total == 0.0) {
            out.dp[i] = 0.0;
            out.dq[i] = 0.0;
            out.ratio[i] = 0.0;  // 0/0 = 0
            out.inert[i] = 1;
            continue;
        }
        out.dp[i] = p[i] / total;
        out.dq[i] = q[i] / total;
        out.ratio[i] = p[i] > 0.0 ? q[i] / p[i] : kInf;
        out.inert[i] = 0;
    }
    return out;
}

namespace {

double truncated_gaussian_density(const GmmSpec& spec, double x, double span) {
    double density = 0.0;
    for (const auto& c : spec.components()) {
        const double z = (x - c.mean) / c.std_dev;
        if (std::abs(z) > span) continue;
        density += c.weight * std::exp(-0.5 * z * z) / c.std_dev;
    }
    return density;  // unnormalized: the 1/sqrt(2 pi) cancels in renormalization
}

}  // namespace

std::pair<DiscreteDistribution, DiscreteDistribution> discretize_gmm(const GmmSpec& spec_p,
                                                                     const GmmSpec& spec_q,
                                                                     std::size_t grid_points,
                                                                     double sigma_span) {
    if (grid_points < 2) {
        throw std::invalid_argument("grid needs at least two points");
    }
    if (!(sigma_span > 0.0)) {
        throw std::invalid_argument("sigma span must be positive");
    }
    double lo = kInf, hi = -kInf, max_std = 0.0;
    for (const auto* spec : {&spec_p, &spec_q}) {
        for (const auto& c : spec->components()) {
            lo = std::min(lo, c.mean);
            hi = std::max(hi, c.mean);
            max_std = std::max(max_std, c.std_dev);
        }
    }
    lo -= sigma_span * max_std;
    hi += sigma_span * max_std;
    if (!(hi > lo)) {
        throw std::invalid_argument("degenerate grid: zero width");
    }

    const std::size_t n = grid_points;
    const double step = (hi - lo) / static_cast<double>(n - 1);
    std::vector<double> wp(n), wq(n);
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        const double x = lo + step * static_cast<double>(i);
        wp[i] = truncated_gaussian_density(spec_p, x, sigma_span);
        wq[i] = truncated_gaussian_density(spec_q, x, sigma_span);
    }

    StableSum sp, sq;
    for (std::size_t i = 0; i < n; ++i) {
        sp.add(wp[i]);
        sq.add(wq[i]);
    }
    const double mp = sp.value(), mq = sq.value();
    if (!(mp > 0.0) || !(mq > 0.0)) {
        throw std::invalid_argument("mixture has no mass on the grid");
    }
    for (std::size_t i = 0; i < n; ++i) {
        wp[i] /= mp;
        wq[i] /= mq;
    }
    return {DiscreteDistribution::normalized(std::move(wp)),
            DiscreteDistribution::normalized(std::move(wq))};
}

}  // namespace tradeoff
