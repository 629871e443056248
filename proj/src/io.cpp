#include "tradeoff/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tradeoff/numeric.hpp"

namespace tradeoff::io {

namespace {

nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

double parse_real(const std::string& token, const std::string& context) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw std::invalid_argument("bad number '" + token + "' in " + context);
    return v;
}

std::vector<std::vector<double>> read_csv_rows(const std::filesystem::path& path,
                                               const std::string& expected_header) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty file " + path.string());
    if (line != expected_header) {
        throw std::invalid_argument("expected header '" + expected_header + "' in " +
                                    path.string() + ", got '" + line + "'");
    }
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            row.push_back(parse_real(cell, path.string()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::pair<DiscreteDistribution, DiscreteDistribution> parse_distribution(
    const std::filesystem::path& path) {
    const auto j = load_json(path);
    if (!j.contains("atoms") || !j["atoms"].is_array() || j["atoms"].empty()) {
        throw std::invalid_argument(path.string() + ": expected a nonempty 'atoms' array");
    }
    std::vector<double> wp, wq;
    std::size_t index = 0;
    for (const auto& atom : j["atoms"]) {
        if (!atom.contains("p") || !atom.contains("q") || !atom["p"].is_number() ||
            !atom["q"].is_number()) {
            throw std::invalid_argument(path.string() + ": atom " + std::to_string(index) +
                                        " needs numeric 'p' and 'q'");
        }
        const double p = atom["p"].get<double>();
        const double q = atom["q"].get<double>();
        if (p < 0.0 || q < 0.0) {
            throw std::invalid_argument(path.string() + ": negative weight at atom " +
                                        std::to_string(index));
        }
        wp.push_back(p);
        wq.push_back(q);
        ++index;
    }
    // CLI inputs get the looser 1e-6 gate; within it, renormalization is exact.
    return {DiscreteDistribution::normalized(std::move(wp), 1e-6),
            DiscreteDistribution::normalized(std::move(wq), 1e-6)};
}

GmmSpec parse_gmm(const std::filesystem::path& path) {
    const auto j = load_json(path);
    if (!j.contains("components") || !j["components"].is_array() || j["components"].empty()) {
        throw std::invalid_argument(path.string() + ": expected a nonempty 'components' array");
    }
    std::vector<GaussianComponent> components;
    for (const auto& c : j["components"]) {
        for (const char* key : {"weight", "mean", "std"}) {
            if (!c.contains(key) || !c[key].is_number()) {
                throw std::invalid_argument(path.string() + ": component needs numeric '" +
                                            key + "'");
            }
        }
        components.push_back(
            {c["weight"].get<double>(), c["mean"].get<double>(), c["std"].get<double>()});
    }
    return GmmSpec::make(std::move(components), 1e-6);
}

std::vector<std::uint8_t> parse_error_mask(const std::filesystem::path& path, std::size_t n) {
    const auto j = load_json(path);
    if (!j.contains("error_atoms") || !j["error_atoms"].is_array()) {
        throw std::invalid_argument(path.string() + ": expected an 'error_atoms' array");
    }
    std::vector<std::uint8_t> mask(n, 0);
    for (const auto& idx : j["error_atoms"]) {
        if (!idx.is_number_unsigned()) {
            throw std::invalid_argument(path.string() + ": error atom indices must be >= 0");
        }
        const auto i = idx.get<std::size_t>();
        if (i >= n) {
            throw std::invalid_argument(path.string() + ": error atom " + std::to_string(i) +
                                        " outside support of size " + std::to_string(n));
        }
        mask[i] = 1;
    }
    return mask;
}

std::string pr_csv(const PrCurve& pr) {
    std::string out = "lambda,alpha,beta\n";
    for (const auto& pt : pr.points()) {
        out += format_real17(pt.lambda) + ',' + format_real17(pt.alpha) + ',' +
               format_real17(pt.beta) + '\n';
    }
    return out;
}

std::string lorenz_csv(const LorenzCurve& curve) {
    std::string out = "t,F\n";
    for (const auto& b : curve.breakpoints()) {
        out += format_real17(b.t) + ',' + format_real17(b.f) + '\n';
    }
    return out;
}

std::string roc_csv(const std::vector<RocPoint>& roc) {
    std::string out = "x,y\n";
    for (const auto& pt : roc) {
        out += format_real17(pt.x) + ',' + format_real17(pt.y) + '\n';
    }
    return out;
}

std::string frontier_csv(const std::vector<FrontierPoint>& frontier) {
    std::string out = "lambda,pi,rho\n";
    for (const auto& pt : frontier) {
        out += format_real17(pt.lambda) + ',' + format_real17(pt.pi) + ',' +
               format_real17(pt.rho) + '\n';
    }
    return out;
}

std::string distribution_json(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    nlohmann::json atoms = nlohmann::json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        atoms.push_back({{"p", p[i]}, {"q", q[i]}});
    }
    return nlohmann::json{{"atoms", atoms}}.dump(2) + "\n";
}

std::string summary_json(const ScenarioResult& result) {
    nlohmann::json checks;
    for (const auto& [name, ok] : result.checks) checks[name] = ok;
    const nlohmann::json j{{"scenario", result.name},
                           {"support_size", result.p.size()},
                           {"alpha_1", result.alpha_1},
                           {"tv", result.tv},
                           {"alpha_inf", result.alpha_inf},
                           {"beta_0", result.beta_0},
                           {"checks", checks},
                           {"pass", result.pass}};
    return j.dump(2) + "\n";
}

std::string da_report_json(const DaReport& report) {
    const nlohmann::json j{
        {"eps_p", report.eps_p},
        {"eps_q", report.eps_q},
        {"bound_tv", report.bound_tv_raw},
        {"bound_tv_clipped", report.bound_tv_clipped},
        {"bound_lorenz", report.bound_lorenz},
        {"bound_pr", report.bound_pr},
        {"lambda_star", report.lambda_star},
        {"bound_pr_at_lambda_one", report.bound_pr_at_lambda_one},
        {"informative",
         {{"tv", report.informative_tv},
          {"lorenz", report.informative_lorenz},
          {"pr", report.informative_pr}}},
        {"valid", report.valid}};
    return j.dump(2) + "\n";
}

PrCurve read_pr_csv(const std::filesystem::path& path) {
    const auto rows = read_csv_rows(path, "lambda,alpha,beta");
    std::vector<PrPoint> points;
    for (const auto& row : rows) {
        if (row.size() != 3) throw std::invalid_argument(path.string() + ": expected 3 columns");
        points.push_back({row[0], row[1], row[2], std::nullopt});
    }
    return PrCurve(std::move(points));
}

LorenzCurve read_lorenz_csv(const std::filesystem::path& path) {
    const auto rows = read_csv_rows(path, "t,F");
    std::vector<LorenzBreakpoint> breaks;
    for (const auto& row : rows) {
        if (row.size() != 2) throw std::invalid_argument(path.string() + ": expected 2 columns");
        breaks.push_back({row[0], row[1]});
    }
    if (breaks.size() < 2) throw std::invalid_argument(path.string() + ": too few breakpoints");
    // Slopes are not stored in the CSV; rebuild them from the chords and
    // iron out last-ulp convexity wobble.
    std::vector<double> slopes(breaks.size() - 1);
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double dt = breaks[k + 1].t - breaks[k].t;
        if (!(dt > 0.0)) throw std::invalid_argument(path.string() + ": t must increase");
        slopes[k] = (breaks[k + 1].f - breaks[k].f) / dt;
        if (k > 0) {
            if (slopes[k] < slopes[k - 1] - 1e-9 * (1.0 + std::abs(slopes[k - 1]))) {
                throw std::invalid_argument(path.string() + ": breakpoints are not convex");
            }
            slopes[k] = std::max(slopes[k], slopes[k - 1]);
        }
    }
    return LorenzCurve(std::move(breaks), std::move(slopes));
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace tradeoff::io
