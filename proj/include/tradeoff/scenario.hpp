#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tradeoff/distribution.hpp"
#include "tradeoff/lorenz.hpp"
#include "tradeoff/pr_curve.hpp"
#include "tradeoff/renyi.hpp"

namespace tradeoff {

/// Run-wide knobs. Defaults follow the library conventions: a 201-point
/// angular lambda grid, 2001 grid atoms per mixture, 6 sigma of tail.
struct RunConfig {
    std::size_t lambda_grid_size = 201;
    std::size_t gmm_grid_points = 2001;
    double sigma_span = 6.0;
    std::uint64_t seed = 0;
};

/// A named, deterministic (P, Q) pair: either a Gaussian-mixture pair to
/// discretize or a literal discrete pair. The stock scenarios reproduce
/// the canonical deviation modes between two distributions: mode dropping,
/// mode invention, mode reweighting, the aggregate "fig2-like" case, plus
/// the identical and mutually singular extremes.
struct ScenarioSpec {
    std::string name;
    std::variant<std::pair<GmmSpec, GmmSpec>,
                 std::pair<DiscreteDistribution, DiscreteDistribution>>
        params;
};

const std::vector<std::string>& scenario_names();
ScenarioSpec scenario_by_name(const std::string& name);

struct ScenarioResult {
    std::string name;
    DiscreteDistribution p;
    DiscreteDistribution q;
    PrCurve pr;
    LorenzCurve lorenz;
    std::vector<RocPoint> roc;
    std::vector<FrontierPoint> frontier;
    double alpha_1;
    double tv;
    double alpha_inf;  // Q(supp P)
    double beta_0;     // P(supp Q)
    /// Named signature checks in a fixed order; all must hold for `pass`.
    std::vector<std::pair<std::string, bool>> checks;
    bool pass;
};

ScenarioResult run_scenario(const ScenarioSpec& spec, const RunConfig& cfg);

}  // namespace tradeoff
