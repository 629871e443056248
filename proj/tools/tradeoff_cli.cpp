// Command-line surface for the trade-off curve library: computes PR /
// Lorenz / ROC / divergence-frontier curves for discrete or mixture
// inputs, converts between the PR and Lorenz representations through
// convex duality, evaluates domain-adaptation bounds, emits the stock
// scenarios, and runs the brute-force verification suite.
//
// Exit codes: 0 success, 1 validation failure, 2 property/oracle violation.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tradeoff/distribution.hpp"
#include "tradeoff/domain_adaptation.hpp"
#include "tradeoff/duality.hpp"
#include "tradeoff/io.hpp"
#include "tradeoff/lorenz.hpp"
#include "tradeoff/numeric.hpp"
#include "tradeoff/oracle.hpp"
#include "tradeoff/pr_curve.hpp"
#include "tradeoff/random_instances.hpp"
#include "tradeoff/renyi.hpp"
#include "tradeoff/scenario.hpp"

namespace {

using tradeoff::DiscreteDistribution;

struct PropertyViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputOptions {
    std::string p_path;
    std::string q_path;
    std::string gmm_p_path;
    std::string gmm_q_path;
    std::size_t gmm_grid_points = 2001;
    double sigma_span = 6.0;
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--p", in.p_path, "paired distribution JSON providing P and Q");
    cmd->add_option("--q", in.q_path,
                    "optional second paired JSON; its q column replaces Q");
    cmd->add_option("--gmm-p", in.gmm_p_path, "Gaussian mixture JSON for P");
    cmd->add_option("--gmm-q", in.gmm_q_path, "Gaussian mixture JSON for Q");
    cmd->add_option("--grid", in.gmm_grid_points, "mixture discretization grid points");
    cmd->add_option("--span", in.sigma_span, "mixture grid extent in standard deviations");
}

std::pair<DiscreteDistribution, DiscreteDistribution> load_pair(const InputOptions& in) {
    const bool has_dist = !in.p_path.empty();
    const bool has_gmm = !in.gmm_p_path.empty() || !in.gmm_q_path.empty();
    if (has_dist && has_gmm) {
        throw std::invalid_argument("--p/--q and --gmm-p/--gmm-q are mutually exclusive");
    }
    if (has_gmm) {
        if (in.gmm_p_path.empty() || in.gmm_q_path.empty()) {
            throw std::invalid_argument("mixture input needs both --gmm-p and --gmm-q");
        }
        return tradeoff::discretize_gmm(tradeoff::io::parse_gmm(in.gmm_p_path),
                                        tradeoff::io::parse_gmm(in.gmm_q_path),
                                        in.gmm_grid_points, in.sigma_span);
    }
    if (!has_dist) {
        throw std::invalid_argument("no input: pass --p or --gmm-p/--gmm-q");
    }
    auto pair = tradeoff::io::parse_distribution(in.p_path);
    if (!in.q_path.empty()) {
        auto other = tradeoff::io::parse_distribution(in.q_path);
        if (other.second.size() != pair.first.size()) {
            throw std::invalid_argument("--p and --q supports differ in size");
        }
        pair.second = std::move(other.second);
    }
    return pair;
}

void emit(const std::string& out_dir, const std::string& filename, const std::string& content) {
    if (out_dir.empty()) {
        std::cout << content;
    } else {
        tradeoff::io::write_file(std::filesystem::path(out_dir) / filename, content);
    }
}

nlohmann::json json_real(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

std::string curve_points_json(const tradeoff::PrCurve& pr) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& pt : pr.points()) {
        rows.push_back({{"lambda", json_real(pt.lambda)},
                        {"alpha", json_real(pt.alpha)},
                        {"beta", json_real(pt.beta)}});
    }
    return nlohmann::json{{"points", rows}}.dump(2) + "\n";
}

int run_curve_command(const std::string& which, const InputOptions& in, std::size_t lambdas,
                      const std::string& out_dir, const std::string& format) {
    const auto [p, q] = load_pair(in);
    if (which == "pr") {
        const auto pr = tradeoff::pr_curve(p, q, tradeoff::default_lambda_grid(lambdas));
        if (format == "json") {
            emit(out_dir, "pr.json", curve_points_json(pr));
        } else {
            emit(out_dir, "pr.csv", tradeoff::io::pr_csv(pr));
        }
        return 0;
    }
    const auto curve = tradeoff::lorenz_curve(p, q);
    if (which == "lorenz") {
        if (format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& b : curve.breakpoints()) rows.push_back({{"t", b.t}, {"F", b.f}});
            emit(out_dir, "lorenz.json",
                 nlohmann::json{{"breakpoints", rows}}.dump(2) + "\n");
        } else {
            emit(out_dir, "lorenz.csv", tradeoff::io::lorenz_csv(curve));
        }
        return 0;
    }
    if (which == "roc") {
        const auto roc = tradeoff::roc_curve(curve);
        if (format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& pt : roc) rows.push_back({{"x", pt.x}, {"y", pt.y}});
            emit(out_dir, "roc.json", nlohmann::json{{"points", rows}}.dump(2) + "\n");
        } else {
            emit(out_dir, "roc.csv", tradeoff::io::roc_csv(roc));
        }
        return 0;
    }
    // frontier
    const auto pr = tradeoff::pr_curve(p, q, tradeoff::default_lambda_grid(lambdas));
    const auto frontier = tradeoff::frontier_from_pr(pr);
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& pt : frontier) {
            rows.push_back({{"lambda", json_real(pt.lambda)},
                            {"pi", json_real(pt.pi)},
                            {"rho", json_real(pt.rho)}});
        }
        emit(out_dir, "frontier.json", nlohmann::json{{"points", rows}}.dump(2) + "\n");
    } else {
        emit(out_dir, "frontier.csv", tradeoff::io::frontier_csv(frontier));
    }
    return 0;
}

int run_convert(const std::string& direction, const std::string& in_path, std::size_t lambdas,
                std::size_t tpoints, const std::string& out_dir) {
    if (direction == "pr-to-lorenz") {
        const auto pr = tradeoff::io::read_pr_csv(in_path);
        std::string out = "t,F\n";
        for (std::size_t k = 0; k < tpoints; ++k) {
            const double t = static_cast<double>(k) / static_cast<double>(tpoints - 1);
            const auto rec = tradeoff::lorenz_from_pr(pr, t);
            out += tradeoff::format_real17(t) + ',' + tradeoff::format_real17(rec.value) + '\n';
        }
        emit(out_dir, "lorenz.csv", out);
        return 0;
    }
    if (direction == "lorenz-to-pr") {
        const auto curve = tradeoff::io::read_lorenz_csv(in_path);
        auto grid = tradeoff::default_lambda_grid(lambdas);
        for (double s : curve.slopes()) {
            if (s > 0.0 && std::isfinite(s)) grid.push_back(s);
        }
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

        // beta_0 = P(supp Q) = 1 minus the extent of the initial zero-slope
        // segment; alpha_inf = F(1) = Q(supp P).
        const double beta0 = curve.slopes().front() == 0.0
                                 ? 1.0 - curve.breakpoints()[1].t
                                 : 1.0;
        std::vector<tradeoff::PrPoint> points;
        points.push_back({0.0, 0.0, beta0, std::nullopt});
        for (double lambda : grid) {
            const double alpha = tradeoff::alpha_from_lorenz(curve, lambda);
            points.push_back({lambda, alpha, alpha / lambda, std::nullopt});
        }
        points.push_back({tradeoff::kInf, curve.breakpoints().back().f, 0.0, std::nullopt});
        emit(out_dir, "pr.csv", tradeoff::io::pr_csv(tradeoff::PrCurve(std::move(points))));
        return 0;
    }
    throw std::invalid_argument("direction must be pr-to-lorenz or lorenz-to-pr");
}

int run_da_bound(const InputOptions& in, const std::string& mask_path,
                 const std::string& out_dir) {
    const auto [p, q] = load_pair(in);
    if (mask_path.empty()) throw std::invalid_argument("da-bound needs --mask");
    auto mask = tradeoff::io::parse_error_mask(mask_path, p.size());
    const auto inst = tradeoff::DaInstance::make(p, q, std::move(mask));
    const auto report = tradeoff::bound_report(inst);
    const std::string text = tradeoff::io::da_report_json(report);
    std::cout << text;
    if (!out_dir.empty()) {
        tradeoff::io::write_file(std::filesystem::path(out_dir) / "da_report.json", text);
    }
    if (!report.valid) {
        throw PropertyViolation("a bound fell below the realized target error");
    }
    return 0;
}

int run_scenario_command(const std::string& name, const tradeoff::RunConfig& cfg,
                         const std::string& mask_path, const std::string& out_dir) {
    const auto spec = tradeoff::scenario_by_name(name);
    const auto result = tradeoff::run_scenario(spec, cfg);

    const std::string dir = out_dir.empty() ? "." : out_dir;
    tradeoff::io::write_file(std::filesystem::path(dir) / "pr.csv",
                             tradeoff::io::pr_csv(result.pr));
    tradeoff::io::write_file(std::filesystem::path(dir) / "lorenz.csv",
                             tradeoff::io::lorenz_csv(result.lorenz));
    tradeoff::io::write_file(std::filesystem::path(dir) / "roc.csv",
                             tradeoff::io::roc_csv(result.roc));
    tradeoff::io::write_file(std::filesystem::path(dir) / "frontier.csv",
                             tradeoff::io::frontier_csv(result.frontier));

    std::string summary = tradeoff::io::summary_json(result);
    if (!mask_path.empty()) {
        auto mask = tradeoff::io::parse_error_mask(mask_path, result.p.size());
        const auto report =
            tradeoff::bound_report(tradeoff::DaInstance::make(result.p, result.q, std::move(mask)));
        auto j = nlohmann::json::parse(summary);
        j["da"] = nlohmann::json::parse(tradeoff::io::da_report_json(report));
        summary = j.dump(2) + "\n";
    }
    tradeoff::io::write_file(std::filesystem::path(dir) / "summary.json", summary);

    std::cout << summary;
    if (!result.pass) {
        throw PropertyViolation("scenario signature checks failed for '" + name + "'");
    }
    return 0;
}

struct VerifyStats {
    std::size_t checks = 0;
    std::size_t violations = 0;
};

void report_line(const tradeoff::OracleReport& r, double tol, VerifyStats& stats) {
    ++stats.checks;
    const bool ok = r.gap <= tol;
    if (!ok) ++stats.violations;
    std::printf("%-18s closed=%-22.15g oracle=%-22.15g gap=%-12.3g witness=%#llx %s\n",
                r.quantity.c_str(), r.closed_form, r.oracle, r.gap,
                static_cast<unsigned long long>(r.witness_mask), ok ? "ok" : "VIOLATION");
}

int run_verify(std::uint64_t seed, std::size_t instances) {
    tradeoff::InstanceGenerator gen(seed);
    VerifyStats stats;
    const std::vector<double> lambdas{0.25, 0.5, 1.0, 2.0, 4.0};
    const std::vector<double> ts{0.0, 0.25, 0.5, 0.75, 1.0};

    auto inspect = [&](const tradeoff::InstancePair& inst) {
        const std::size_t n = inst.p.size();
        for (double lambda : lambdas) {
            report_line(tradeoff::oracle_alpha(inst.p, inst.q, lambda),
                        1e-12 * static_cast<double>(n), stats);
        }
        report_line(tradeoff::oracle_sup_ratio(inst.p, inst.q), 1e-12, stats);
        for (double t : ts) {
            report_line(tradeoff::oracle_lorenz(inst.p, inst.q, t), 1e-9, stats);
        }
        report_line(tradeoff::oracle_soft_f_domination(inst.p, inst.q, 1.0, 200,
                                                       gen.rng().next()),
                    1e-12, stats);
    };

    for (const auto& fixture : tradeoff::InstanceGenerator::adversarial_fixtures()) {
        inspect(fixture);
    }
    for (std::size_t k = 0; k < instances; ++k) {
        inspect(gen.random_pair());
    }

    std::printf("verify: %zu checks, %zu violations (seed %llu)\n", stats.checks,
                stats.violations, static_cast<unsigned long long>(seed));
    if (stats.violations > 0) {
        throw PropertyViolation("oracle gaps exceeded tolerance");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trade-off curves between two distributions: PR, Lorenz, ROC, "
                 "divergence frontier, and domain-adaptation bounds"};
    app.require_subcommand(1);

    InputOptions in;
    std::size_t lambdas = 201;
    std::size_t tpoints = 201;
    std::string out_dir;
    std::string format = "csv";
    std::string mask_path;
    std::string convert_direction;
    std::string convert_in;
    std::string scenario_name;
    std::uint64_t seed = 0;
    std::size_t instances = 200;

    const auto add_common = [&](CLI::App* cmd) {
        add_input_flags(cmd, in);
        cmd->add_option("--lambdas", lambdas, "lambda grid size");
        cmd->add_option("--out", out_dir, "output directory (default: stdout)");
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--seed", seed, "random seed");
    };

    for (const char* name : {"pr", "lorenz", "roc", "frontier"}) {
        add_common(app.add_subcommand(name, std::string("compute the ") + name + " curve"));
    }

    auto* convert = app.add_subcommand("convert", "convert between PR and Lorenz curves");
    convert->add_option("direction", convert_direction, "pr-to-lorenz or lorenz-to-pr")
        ->required();
    convert->add_option("--in", convert_in, "input CSV")->required();
    convert->add_option("--lambdas", lambdas, "lambda grid size (lorenz-to-pr)");
    convert->add_option("--tpoints", tpoints, "t samples (pr-to-lorenz)");
    convert->add_option("--out", out_dir, "output directory (default: stdout)");

    auto* da = app.add_subcommand("da-bound", "domain-adaptation bound report");
    add_input_flags(da, in);
    da->add_option("--mask", mask_path, "error mask JSON {\"error_atoms\": [...]}");
    da->add_option("--lambdas", lambdas, "lambda grid size");
    da->add_option("--out", out_dir, "also write da_report.json here");

    auto* scenario = app.add_subcommand("scenario", "run a named scenario");
    scenario->add_option("name", scenario_name, "one of: identical, singular, mode-drop, "
                                                "mode-invent, mode-reweight, fig2-like")
        ->required();
    scenario->add_option("--grid", in.gmm_grid_points, "mixture grid points");
    scenario->add_option("--span", in.sigma_span, "mixture grid extent in std deviations");
    scenario->add_option("--lambdas", lambdas, "lambda grid size");
    scenario->add_option("--mask", mask_path, "optional error mask for a DA section");
    scenario->add_option("--out", out_dir, "output directory (default: current)");
    scenario->add_option("--seed", seed, "random seed (recorded only; scenarios are "
                                         "deterministic)");

    auto* verify = app.add_subcommand("verify", "brute-force oracle sweep");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--instances", instances, "number of random instances");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("convert")) {
            return run_convert(convert_direction, convert_in, lambdas, tpoints, out_dir);
        }
        if (app.got_subcommand("da-bound")) {
            return run_da_bound(in, mask_path, out_dir);
        }
        if (app.got_subcommand("scenario")) {
            tradeoff::RunConfig cfg;
            cfg.lambda_grid_size = lambdas;
            cfg.gmm_grid_points = in.gmm_grid_points;
            cfg.sigma_span = in.sigma_span;
            cfg.seed = seed;
            return run_scenario_command(scenario_name, cfg, mask_path, out_dir);
        }
        if (app.got_subcommand("verify")) {
            return run_verify(seed, instances);
        }
        for (const char* name : {"pr", "lorenz", "roc", "frontier"}) {
            if (app.got_subcommand(name)) {
                return run_curve_command(name, in, lambdas, out_dir, format);
            }
        }
        return 1;
    } catch (const PropertyViolation& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
