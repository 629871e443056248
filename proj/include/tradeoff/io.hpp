#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "tradeoff/distribution.hpp"
#include "tradeoff/domain_adaptation.hpp"
#include "tradeoff/lorenz.hpp"
#include "tradeoff/pr_curve.hpp"
#include "tradeoff/renyi.hpp"
#include "tradeoff/scenario.hpp"

namespace tradeoff::io {

/// Paired schema {"atoms": [{"p": ..., "q": ...}, ...]}: one file carries
/// both marginals on the shared support. Sums outside 1 +/- 1e-6 are
/// rejected; within tolerance they are renormalized.
std::pair<DiscreteDistribution, DiscreteDistribution> parse_distribution(
    const std::filesystem::path& path);

/// {"components": [{"weight": w, "mean": m, "std": s}, ...]}
GmmSpec parse_gmm(const std::filesystem::path& path);

/// {"error_atoms": [indices]} expanded against a support of size n.
std::vector<std::uint8_t> parse_error_mask(const std::filesystem::path& path, std::size_t n);

std::string pr_csv(const PrCurve& pr);
std::string lorenz_csv(const LorenzCurve& curve);
std::string roc_csv(const std::vector<RocPoint>& roc);
std::string frontier_csv(const std::vector<FrontierPoint>& frontier);
std::string distribution_json(const DiscreteDistribution& p, const DiscreteDistribution& q);
std::string summary_json(const ScenarioResult& result);
std::string da_report_json(const DaReport& report);

PrCurve read_pr_csv(const std::filesystem::path& path);
LorenzCurve read_lorenz_csv(const std::filesystem::path& path);

/// Writes bytes as-is; parent directories are created on demand.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace tradeoff::io
