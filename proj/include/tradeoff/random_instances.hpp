#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tradeoff/distribution.hpp"

namespace tradeoff {

/// Deterministic 64-bit generator (splitmix64). Hand-rolled so that seeded
/// runs are reproducible independently of the standard library build.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi].
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        return lo + next() % (hi - lo + 1);
    }

private:
    std::uint64_t state_;
};

struct InstancePair {
    std::string name;
    DiscreteDistribution p;
    DiscreteDistribution q;
};

/// Random (P, Q) pairs for property trials and verification runs: supports
/// drawn uniformly from a size range, weights from a symmetric Dirichlet(1),
/// and roughly 10% of atoms zeroed in one marginal to exercise the
/// partial-overlap endpoint conventions.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

    InstancePair random_pair(std::size_t min_support = 2, std::size_t max_support = 12);

    /// Random error mask (each atom flagged with probability 1/2).
    std::vector<std::uint8_t> random_mask(std::size_t n);

    /// Random distribution supported on {p > 0} and {q > 0}; empty when the
    /// common support carries no mass (mutually singular pairs).
    std::optional<DiscreteDistribution> random_mu_in_ac(const DiscreteDistribution& p,
                                                        const DiscreteDistribution& q);

    SplitMix64& rng() { return rng_; }

    /// Degenerate geometry the random sampler rarely hits: identical pairs,
    /// singular pairs, one-atom overlaps, and the three-atom partial overlap.
    static std::vector<InstancePair> adversarial_fixtures();

private:
    std::vector<double> dirichlet(std::size_t n);
    SplitMix64 rng_;
};

}  // namespace tradeoff
