#pragma once

#include <utility>
#include <vector>

#include "tradeoff/distribution.hpp"
#include "tradeoff/pr_curve.hpp"

namespace tradeoff {

/// A point of the infinite-order divergence frontier: pi = D_inf(mu || Q),
/// rho = D_inf(mu || P), tagged with the PR parameter it came from.
struct FrontierPoint {
    double lambda = 0.0;
    double pi = 0.0;
    double rho = 0.0;
};

/// Renyi divergence D_a(mu || nu) for orders a in [0, +inf]. a = 1 is the
/// KL limit; a = inf the log essential supremum of the density ratio. When
/// mu is not absolutely continuous w.r.t. nu the value is +inf for a >= 1;
/// for a < 1 the sum restricted to supp(mu) still applies.
double renyi_divergence(const DiscreteDistribution& mu, const DiscreteDistribution& nu,
                        double order);

/// sup over nonempty measurable A of mu(A)/nu(A); equals the atomwise
/// max of mu_i/nu_i over supp(mu) (+inf when absolute continuity fails).
double sup_ratio(const DiscreteDistribution& mu, const DiscreteDistribution& nu);

/// mu_i > 0 implies p_i > 0 and q_i > 0: the common-component condition.
bool in_ac(const DiscreteDistribution& mu, const DiscreteDistribution& p,
           const DiscreteDistribution& q);

/// Coordinatewise (-log alpha, -log beta) image of the PR curve; zero
/// coordinates map to +inf, matching the empty-region convention.
std::vector<FrontierPoint> frontier_from_pr(const PrCurve& pr);

/// The largest PR pair witnessed by mu: (e^{-D_inf(mu||Q)}, e^{-D_inf(mu||P)}).
/// Requires mu in AC(P, Q).
std::pair<double, double> pr_pair_for_mu(const DiscreteDistribution& mu,
                                         const DiscreteDistribution& p,
                                         const DiscreteDistribution& q);

}  // namespace tradeoff
