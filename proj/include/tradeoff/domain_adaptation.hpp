#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tradeoff/distribution.hpp"
#include "tradeoff/lorenz.hpp"
#include "tradeoff/pr_curve.hpp"

namespace tradeoff {

/// Source/target marginals plus the per-atom error indicator of a fixed
/// classifier under the covariate-shift encoding: labels are folded into
/// the mask, so eps_P and eps_Q are exact mask-weighted sums.
class DaInstance {
public:
    static DaInstance make(DiscreteDistribution source, DiscreteDistribution target,
                           std::vector<std::uint8_t> error_mask);

    const DiscreteDistribution& source() const { return source_; }
    const DiscreteDistribution& target() const { return target_; }
    const std::vector<std::uint8_t>& error_mask() const { return mask_; }

private:
    DaInstance(DiscreteDistribution s, DiscreteDistribution t, std::vector<std::uint8_t> m)
        : source_(std::move(s)), target_(std::move(t)), mask_(std::move(m)) {}
    DiscreteDistribution source_;
    DiscreteDistribution target_;
    std::vector<std::uint8_t> mask_;
};

/// (eps_P, eps_Q): the classifier's error mass under source and target.
std::pair<double, double> source_target_errors(const DaInstance& inst);

/// Baseline bound eps_P + TV(P, Q), returned raw; it may exceed 1 and is
/// then non-informative.
double bound_tv(const DaInstance& inst);

/// Lorenz-curve bound 1 - F(1 - eps_P).
double bound_lorenz(const DaInstance& inst, const LorenzCurve& curve);

struct PrBound {
    double bound;
    double lambda_star;
};

/// Optimized PR bound: min over lambda of lambda eps_P + (1 - alpha_lambda),
/// found by maximizing the concave g(lambda) = alpha_lambda - lambda eps_P.
/// The search seeds golden-section (in theta = arctan lambda, tolerance 1e-8)
/// with the best of the curve's grid augmented by the instance's exact
/// likelihood ratios, where the maximizer of a piecewise-linear g must sit.
/// Agrees with bound_lorenz by Legendre duality.
PrBound bound_pr_optimal(const DaInstance& inst, const PrCurve& pr);

/// Everything side by side, with informativeness and validity flags.
struct DaReport {
    double eps_p = 0.0;
    double eps_q = 0.0;
    double bound_tv_raw = 0.0;
    double bound_tv_clipped = 0.0;
    double bound_lorenz = 0.0;
    double bound_pr = 0.0;
    double lambda_star = 0.0;
    double bound_pr_at_lambda_one = 0.0;  // eps_P + (1 - alpha_1) = eps_P + TV/2
    bool informative_tv = false;
    bool informative_lorenz = false;
    bool informative_pr = false;
    bool valid = false;  // eps_Q <= every bound
};

DaReport bound_report(const DaInstance& inst);

}  // namespace tradeoff
