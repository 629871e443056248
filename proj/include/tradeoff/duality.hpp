#pragma once

#include <vector>

#include "tradeoff/lorenz.hpp"
#include "tradeoff/pr_curve.hpp"

namespace tradeoff {

/// The Legendre transform F*(lambda) = sup_t lambda t - F(t) of a
/// piecewise-linear Lorenz curve, stored in closed form: between
/// consecutive segment slopes the sup sits at one breakpoint, so F* is
/// itself piecewise linear in lambda with slope t there.
class ConjugateCurve {
public:
    struct Knot {
        double lambda;  // a segment slope of F
        double value;   // F*(lambda)
    };

    ConjugateCurve(std::vector<Knot> knots, double final_slope);

    double eval(double lambda) const;
    const std::vector<Knot>& knots() const { return knots_; }

private:
    std::vector<Knot> knots_;
    double final_slope_;  // slope of F* beyond the last knot (= 1)
};

ConjugateCurve conjugate_curve(const LorenzCurve& curve);

/// Direct evaluation of F*(lambda) as the max of lambda t_k - F_k over
/// breakpoints; exact for piecewise-linear F.
double legendre(const LorenzCurve& curve, double lambda);

/// alpha_lambda = lambda - F*(lambda), the convex-duality route to the
/// PR curve.
double alpha_from_lorenz(const LorenzCurve& curve, double lambda);

/// Same quantity through the 1-D convex problem
/// min_t F(t) + lambda (1 - t), solved by bisection on the
/// subdifferential condition lambda in dF(t); exact on breakpoints.
double alpha_from_lorenz_bisection(const LorenzCurve& curve, double lambda);

/// Same problem solved derivative-free: golden-section search on t with
/// the given tolerance, followed by an exact pass over the breakpoints
/// trapped in the final bracket (the minimizer never leaves it).
double alpha_from_lorenz_golden(const LorenzCurve& curve, double lambda, double tol = 1e-8);

struct BiconjugateValue {
    double value;   // sup over the curve's grid of alpha_lambda + lambda (t - 1)
    double lambda;  // smallest maximizing lambda
};

/// F(t) recovered from a PR curve as the biconjugate
/// sup_lambda alpha_lambda + lambda (t - 1). A lower approximation that is
/// exact once the grid contains every segment slope; the lambda = inf
/// endpoint contributes only at t = 1 (alpha_inf) and is handled
/// symbolically.
BiconjugateValue lorenz_from_pr(const PrCurve& pr, double t);

/// Duality-facing alias of the Lorenz subdifferential: the supporting
/// slopes at t are exactly the lambdas with P(A_lambda) = t.
SlopeInterval lambda_from_t(const LorenzCurve& curve, double t);

}  // namespace tradeoff
