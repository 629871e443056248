#include "tradeoff/lorenz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tradeoff/numeric.hpp"

namespace tradeoff {

LorenzCurve::LorenzCurve(std::vector<LorenzBreakpoint> breakpoints,
                         std::vector<double> segment_slopes)
    : breakpoints_(std::move(breakpoints)), slopes_(std::move(segment_slopes)) {
    if (breakpoints_.size() < 2 || slopes_.size() + 1 != breakpoints_.size()) {
        throw std::invalid_argument("malformed Lorenz curve");
    }
    if (breakpoints_.front().t != 0.0 || breakpoints_.front().f != 0.0) {
        throw std::invalid_argument("Lorenz curve must start at (0, 0)");
    }
    for (std::size_t k = 1; k < slopes_.size(); ++k) {
        if (slopes_[k] < slopes_[k - 1]) {
            throw std::invalid_argument("Lorenz segment slopes must be nondecreasing");
        }
    }
}

LorenzCurve lorenz_curve(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    detail::require_same_support(p, q);
    // Only supp(P) participates: f = 0 elsewhere raises coverage constraints
    // nowhere while keeping the Q cost minimal. Every supp(P) atom has a
    // finite ratio, so the curve reaches t = 1 with finite slope.
    std::vector<std::size_t> order;
    order.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double ra = q[a] / p[a], rb = q[b] / p[b];
        return ra != rb ? ra < rb : a < b;  // index tie-break keeps merges canonical
    });

    std::vector<LorenzBreakpoint> breaks{{0.0, 0.0}};
    std::vector<double> slopes;
    StableSum cum_p, cum_q;
    std::size_t i = 0;
    while (i < order.size()) {
        const double ratio = q[order[i]] / p[order[i]];
        std::size_t j = i;
        while (j < order.size() && q[order[j]] / p[order[j]] == ratio) {
            cum_p.add(p[order[j]]);
            cum_q.add(q[order[j]]);
            ++j;
        }
        breaks.push_back({cum_p.value(), cum_q.value()});
        slopes.push_back(ratio);
        i = j;
    }
    // P is normalized, so the accumulated supp(P) mass is 1 up to rounding.
    if (std::abs(breaks.back().t - 1.0) > 1e-9) {
        throw std::invalid_argument("P mass does not accumulate to 1");
    }
    breaks.back().t = 1.0;
    return LorenzCurve(std::move(breaks), std::move(slopes));
}

namespace {

// Index of the segment [t_k, t_{k+1}] containing t (the left one at interior
// breakpoints; callers that care about breakpoint intervals handle them).
std::size_t segment_index(const std::vector<LorenzBreakpoint>& bp, double t) {
    const auto it = std::upper_bound(bp.begin(), bp.end(), t,
                                     [](double v, const LorenzBreakpoint& b) { return v < b.t; });
    std::size_t k = static_cast<std::size_t>(it - bp.begin());
    if (k == 0) return 0;                      // t == 0
    if (k >= bp.size()) return bp.size() - 2;  // t == 1
    return k - 1;
}

}  // namespace

double lorenz_eval(const LorenzCurve& curve, double t) {
    if (!(t >= 0.0) || t > 1.0) {
        throw std::invalid_argument("t must lie in [0, 1]");
    }
    const auto& bp = curve.breakpoints();
    const std::size_t k = segment_index(bp, t);
    const auto& a = bp[k];
    const auto& b = bp[k + 1];
    if (t <= a.t) return a.f;
    if (t >= b.t) return b.f;
    // Interpolating with the chord (not the stored ratio) keeps evaluation
    // exact at both breakpoints.
    return a.f + (t - a.t) * (b.f - a.f) / (b.t - a.t);
}

SlopeInterval lorenz_subdifferential(const LorenzCurve& curve, double t) {
    if (!(t >= 0.0) || t > 1.0) {
        throw std::invalid_argument("t must lie in [0, 1]");
    }
    // A supporting-line parameter t_lambda = P(A_lambda) is reproduced from
    // sums rounded independently of the breakpoint table; snap to the
    // breakpoint interval within this slack.
    constexpr double snap = 1e-12;
    const auto& bp = curve.breakpoints();
    const auto& slopes = curve.slopes();
    if (t <= bp.front().t + snap) return {0.0, slopes.front()};
    if (t >= bp.back().t - snap) return {slopes.back(), kInf};
    const std::size_t k = segment_index(bp, t);
    if (std::abs(t - bp[k].t) <= snap && k > 0) return {slopes[k - 1], slopes[k]};
    if (std::abs(t - bp[k + 1].t) <= snap) return {slopes[k], slopes[k + 1]};
    return {slopes[k], slopes[k]};
}

std::vector<RocPoint> roc_curve(const LorenzCurve& curve) {
    std::vector<RocPoint> out;
    out.reserve(curve.breakpoints().size());
    for (const auto& b : curve.breakpoints()) {
        out.push_back({b.f, b.t});
    }
    return out;
}

}  // namespace tradeoff
