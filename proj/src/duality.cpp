#include "tradeoff/duality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tradeoff/numeric.hpp"

namespace tradeoff {

ConjugateCurve::ConjugateCurve(std::vector<Knot> knots, double final_slope)
    : knots_(std::move(knots)), final_slope_(final_slope) {
    if (knots_.empty()) throw std::invalid_argument("conjugate curve needs knots");
    for (std::size_t k = 1; k < knots_.size(); ++k) {
        if (!(knots_[k - 1].lambda < knots_[k].lambda)) {
            throw std::invalid_argument("conjugate knots must be strictly increasing");
        }
    }
}

double ConjugateCurve::eval(double lambda) const {
    if (!(lambda >= 0.0) || std::isinf(lambda)) {
        throw std::invalid_argument("lambda must be finite and nonnegative");
    }
    if (lambda <= knots_.front().lambda) return knots_.front().value;  // flat at 0
    const auto it = std::upper_bound(
        knots_.begin(), knots_.end(), lambda,
        [](double v, const Knot& k) { return v < k.lambda; });
    const std::size_t k = static_cast<std::size_t>(it - knots_.begin()) - 1;
    if (k + 1 == knots_.size()) {
        return knots_.back().value + (lambda - knots_.back().lambda) * final_slope_;
    }
    const auto& a = knots_[k];
    const auto& b = knots_[k + 1];
    return a.value + (lambda - a.lambda) * (b.value - a.value) / (b.lambda - a.lambda);
}

ConjugateCurve conjugate_curve(const LorenzCurve& curve) {
    const auto& bp = curve.breakpoints();
    const auto& slopes = curve.slopes();
    std::vector<ConjugateCurve::Knot> knots;
    knots.reserve(slopes.size());
    for (std::size_t k = 0; k < slopes.size(); ++k) {
        // At lambda = s_k the sup is attained at breakpoint k (left end of
        // the segment carrying that slope).
        knots.push_back({slopes[k], slopes[k] * bp[k].t - bp[k].f});
    }
    return ConjugateCurve(std::move(knots), bp.back().t);
}

double legendre(const LorenzCurve& curve, double lambda) {
    if (!(lambda >= 0.0) || std::isinf(lambda)) {
        throw std::invalid_argument("lambda must be finite and nonnegative");
    }
    double best = -kInf;
    for (const auto& b : curve.breakpoints()) {
        best = std::max(best, lambda * b.t - b.f);
    }
    return best;
}

double alpha_from_lorenz(const LorenzCurve& curve, double lambda) {
    return lambda - legendre(curve, lambda);
}

double alpha_from_lorenz_bisection(const LorenzCurve& curve, double lambda) {
    if (!(lambda >= 0.0) || std::isinf(lambda)) {
        throw std::invalid_argument("lambda must be finite and nonnegative");
    }
    const auto& bp = curve.breakpoints();
    const auto& slopes = curve.slopes();
    // G(t) = F(t) + lambda (1 - t) has segment slope s_k - lambda: bisect for
    // the first segment with s_k >= lambda; its left breakpoint minimizes G.
    std::size_t lo = 0, hi = slopes.size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (slopes[mid] >= lambda) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    const auto& opt = bp[lo];  // lo == slopes.size() lands on t = 1
    return opt.f + lambda * (1.0 - opt.t);
}

double alpha_from_lorenz_golden(const LorenzCurve& curve, double lambda, double tol) {
    if (!(lambda >= 0.0) || std::isinf(lambda)) {
        throw std::invalid_argument("lambda must be finite and nonnegative");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const auto objective = [&](double t) { return lorenz_eval(curve, t) + lambda * (1.0 - t); };

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0, b = 1.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = objective(c), fd = objective(d);
    while (b - a > tol) {
        if (fc <= fd) {
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
    // The minimizer never leaves the bracket; since G is piecewise linear the
    // minimum inside [a, b] sits at a bracket end or a trapped breakpoint.
    double best = std::min(objective(a), objective(b));
    for (const auto& bpt : curve.breakpoints()) {
        if (bpt.t > a && bpt.t < b) best = std::min(best, objective(bpt.t));
    }
    return best;
}

BiconjugateValue lorenz_from_pr(const PrCurve& pr, double t) {
    if (!(t >= 0.0) || t > 1.0) throw std::invalid_argument("t must lie in [0, 1]");
    BiconjugateValue out{-kInf, 0.0};
    for (const auto& pt : pr.points()) {
        double value;
        if (std::isinf(pt.lambda)) {
            // lim alpha_lambda + lambda (t - 1) is -inf for t < 1, alpha_inf at 1.
            if (t < 1.0) continue;
            value = pt.alpha;
        } else {
            value = pt.alpha + pt.lambda * (t - 1.0);
        }
        if (value > out.value) {
            out.value = value;
            out.lambda = pt.lambda;
        }
    }
    return out;
}

SlopeInterval lambda_from_t(const LorenzCurve& curve, double t) {
    // t_lambda = P(A_lambda) and lambda in dF(t_lambda): the subdifferential
    // carries the parameter the Lorenz curve does not store explicitly.
    return lorenz_subdifferential(curve, t);
}

}  // namespace tradeoff
