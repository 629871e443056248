#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tradeoff {

/// Probability weights on a shared finite indexed support. Two
/// distributions are comparable only when they index the same support,
/// which turns absolute continuity into a per-atom zero test.
///
/// Construction validates (weights nonnegative, mass within `tol` of 1)
/// and renormalizes, so downstream code can assume unit mass.
class DiscreteDistribution {
public:
    static DiscreteDistribution normalized(std::vector<double> weights, double tol = 1e-9);

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }

    auto begin() const { return weights_.begin(); }
    auto end() const { return weights_.end(); }

private:
    explicit DiscreteDistribution(std::vector<double> w) : weights_(std::move(w)) {}
    std::vector<double> weights_;
};

/// Per-atom densities of P and Q with respect to P+Q, and the raw ratio
/// q/p under the 0/0 = 0 and q/0 = +inf conventions. Atoms carrying no
/// mass in either marginal are flagged inert.
struct LikelihoodRatioProfile {
    std::vector<double> dp;             // dP/d(P+Q)
    std::vector<double> dq;             // dQ/d(P+Q)
    std::vector<double> ratio;          // q_i / p_i
    std::vector<std::uint8_t> inert;    // p_i == q_i == 0
};

struct GaussianComponent {
    double weight;
    double mean;
    double std_dev;
};

/// Mixture-of-Gaussians specification; the vehicle for the synthetic
/// mode-dropping / invention / reweighting scenarios.
class GmmSpec {
public:
    static GmmSpec make(std::vector<GaussianComponent> components, double tol = 1e-9);

    const std::vector<GaussianComponent>& components() const { return components_; }

private:
    explicit GmmSpec(std::vector<GaussianComponent> c) : components_(std::move(c)) {}
    std::vector<GaussianComponent> components_;
};

/// ((scale * P) ^ Q)(Omega) = sum_i min(scale * p_i, q_i).
/// scale = +inf follows the 0 * inf = 0 convention and yields Q(supp P).
double measure_min(double scale, const DiscreteDistribution& p, const DiscreteDistribution& q);

/// Full-mass total variation sum |p_i - q_i|, range [0, 2].
double total_variation(const DiscreteDistribution& p, const DiscreteDistribution& q);

LikelihoodRatioProfile ratio_profile(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// Evaluates both mixtures on one uniform grid spanning
/// [min mean - span * max std, max mean + span * max std] across the two
/// specs and renormalizes each to unit mass. Component contributions are
/// truncated at `sigma_span` standard deviations so that far tails are
/// exactly zero; mass beyond 6 sigma is below 1e-8, but the exact zeros
/// are what give discretized mixtures honest disjoint-support regions.
std::pair<DiscreteDistribution, DiscreteDistribution> discretize_gmm(
    const GmmSpec& spec_p, const GmmSpec& spec_q, std::size_t grid_points, double sigma_span);

namespace detail {
void require_same_support(const DiscreteDistribution& p, const DiscreteDistribution& q);
}

}  // namespace tradeoff
