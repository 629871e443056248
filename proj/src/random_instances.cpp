#include "tradeoff/random_instances.hpp"

#include <cmath>

#include "tradeoff/numeric.hpp"

namespace tradeoff {

std::vector<double> InstanceGenerator::dirichlet(std::size_t n) {
    // Dirichlet(1, ..., 1) = normalized unit exponentials.
    std::vector<double> w(n);
    double total = 0.0;
    for (auto& x : w) {
        x = -std::log(1.0 - rng_.uniform());
        total += x;
    }
    if (total <= 0.0) {
        w.assign(n, 1.0);
        total = static_cast<double>(n);
    }
    for (auto& x : w) x /= total;
    return w;
}

InstancePair InstanceGenerator::random_pair(std::size_t min_support, std::size_t max_support) {
    for (;;) {
        const auto n = static_cast<std::size_t>(rng_.uniform_int(min_support, max_support));
        auto wp = dirichlet(n);
        auto wq = dirichlet(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rng_.uniform() < 0.1) {
                (rng_.uniform() < 0.5 ? wp[i] : wq[i]) = 0.0;
            }
        }
        StableSum sp, sq;
        for (std::size_t i = 0; i < n; ++i) {
            sp.add(wp[i]);
            sq.add(wq[i]);
        }
        if (!(sp.value() > 0.0) || !(sq.value() > 0.0)) continue;  // all atoms zeroed; redraw
        for (std::size_t i = 0; i < n; ++i) {
            wp[i] /= sp.value();
            wq[i] /= sq.value();
        }
        return {"random", DiscreteDistribution::normalized(std::move(wp)),
                DiscreteDistribution::normalized(std::move(wq))};
    }
}

std::vector<std::uint8_t> InstanceGenerator::random_mask(std::size_t n) {
    std::vector<std::uint8_t> mask(n);
    for (auto& m : mask) m = rng_.uniform() < 0.5 ? 1 : 0;
    return mask;
}

std::optional<DiscreteDistribution> InstanceGenerator::random_mu_in_ac(
    const DiscreteDistribution& p, const DiscreteDistribution& q) {
    const std::size_t n = p.size();
    std::vector<double> w(n, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i] > 0.0 && q[i] > 0.0) {
            w[i] = 0.05 + rng_.uniform();  // bounded away from 0 to stay in AC
            total += w[i];
        }
    }
    if (total <= 0.0) return std::nullopt;
    for (auto& x : w) x /= total;
    return DiscreteDistribution::normalized(std::move(w));
}

std::vector<InstancePair> InstanceGenerator::adversarial_fixtures() {
    const auto dist = [](std::vector<double> w) {
        return DiscreteDistribution::normalized(std::move(w));
    };
    std::vector<InstancePair> fixtures;
    fixtures.push_back({"identical", dist({0.5, 0.5}), dist({0.5, 0.5})});
    fixtures.push_back({"identical-skewed", dist({0.9, 0.07, 0.03}), dist({0.9, 0.07, 0.03})});
    fixtures.push_back({"singular", dist({1.0, 0.0}), dist({0.0, 1.0})});
    fixtures.push_back(
        {"singular-wide", dist({0.5, 0.5, 0.0, 0.0}), dist({0.0, 0.0, 0.5, 0.5})});
    fixtures.push_back(
        {"one-atom-overlap", dist({0.5, 0.5, 0.0}), dist({0.0, 0.5, 0.5})});
    fixtures.push_back(
        {"partial-overlap", dist({0.5, 0.5, 0.0}), dist({0.25, 0.25, 0.5})});
    fixtures.push_back({"point-vs-uniform", dist({1.0, 0.0}), dist({0.5, 0.5})});
    return fixtures;
}

}  // namespace tradeoff
