#include "tradeoff/renyi.hpp"

#include <cmath>
#include <stdexcept>

#include "tradeoff/numeric.hpp"

namespace tradeoff {

namespace {

bool absolutely_continuous(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] > 0.0 && nu[i] == 0.0) return false;
    }
    return true;
}

}  // namespace

double renyi_divergence(const DiscreteDistribution& mu, const DiscreteDistribution& nu,
                        double order) {
    detail::require_same_support(mu, nu);
    if (!(order >= 0.0)) throw std::invalid_argument("Renyi order must be in [0, +inf]");

    if (std::isinf(order)) return std::log(sup_ratio(mu, nu));

    const bool ac = absolutely_continuous(mu, nu);
    if (order == 1.0) {  // KL branch, never the generic formula
        if (!ac) return kInf;
        StableSum acc;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            if (mu[i] > 0.0) acc.add(mu[i] * std::log(mu[i] / nu[i]));
        }
        return acc.value();
    }
    if (order >= 1.0 && !ac) return kInf;

    StableSum acc;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] > 0.0) {
            // mu^a nu^(1-a); for a < 1 atoms with nu = 0 contribute 0.
            acc.add(std::pow(mu[i], order) * std::pow(nu[i], 1.0 - order));
        }
    }
    const double sum = acc.value();
    if (sum <= 0.0) return kInf;  // disjoint supports at a < 1
    return std::log(sum) / (order - 1.0);
}

double sup_ratio(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
    detail::require_same_support(mu, nu);
    double best = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] == 0.0) continue;  // 0/0 = 0 convention
        if (nu[i] == 0.0) return kInf;
        best = std::max(best, mu[i] / nu[i]);
    }
    return best;
}

bool in_ac(const DiscreteDistribution& mu, const DiscreteDistribution& p,
           const DiscreteDistribution& q) {
    detail::require_same_support(mu, p);
    detail::require_same_support(mu, q);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] > 0.0 && (p[i] == 0.0 || q[i] == 0.0)) return false;
    }
    return true;
}

std::vector<FrontierPoint> frontier_from_pr(const PrCurve& pr) {
    std::vector<FrontierPoint> out;
    out.reserve(pr.size());
    for (const auto& pt : pr.points()) {
        FrontierPoint fp;
        fp.lambda = pt.lambda;
        // + 0.0 turns -log(1) = -0.0 into a plain zero.
        fp.pi = pt.alpha > 0.0 ? -std::log(pt.alpha) + 0.0 : kInf;
        fp.rho = pt.beta > 0.0 ? -std::log(pt.beta) + 0.0 : kInf;
        out.push_back(fp);
    }
    return out;
}

std::pair<double, double> pr_pair_for_mu(const DiscreteDistribution& mu,
                                         const DiscreteDistribution& p,
                                         const DiscreteDistribution& q) {
    if (!in_ac(mu, p, q)) {
        throw std::invalid_argument("mu must be absolutely continuous w.r.t. both P and Q");
    }
    const double alpha = std::exp(-renyi_divergence(mu, q, kInf));
    const double beta = std::exp(-renyi_divergence(mu, p, kInf));
    return {alpha, beta};
}

}  // namespace tradeoff
