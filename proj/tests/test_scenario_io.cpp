#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tradeoff/duality.hpp"
#include "tradeoff/io.hpp"
#include "tradeoff/numeric.hpp"
#include "tradeoff/oracle.hpp"
#include "tradeoff/random_instances.hpp"
#include "tradeoff/scenario.hpp"

using namespace tradeoff;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

void put(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

// Sum consecutive atoms into at most `bins` buckets so the exponential
// oracles stay tractable on discretized scenarios.
std::pair<DiscreteDistribution, DiscreteDistribution> coarsen(const DiscreteDistribution& p,
                                                              const DiscreteDistribution& q,
                                                              std::size_t bins) {
    std::vector<double> wp(bins, 0.0), wq(bins, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const std::size_t b = i * bins / p.size();
        wp[b] += p[i];
        wq[b] += q[i];
    }
    return {DiscreteDistribution::normalized(std::move(wp), 1e-6),
            DiscreteDistribution::normalized(std::move(wq), 1e-6)};
}

}  // namespace

TEST_CASE("parse_distribution accepts, renormalizes, rejects") {
    const auto good = temp_file("tradeoff_good.json");
    put(good, R"({"atoms":[{"p":0.5,"q":0.5},{"p":0.5,"q":0.5}]})");
    const auto [p, q] = io::parse_distribution(good);
    CHECK(p[0] == 0.5);
    CHECK(q[1] == 0.5);

    const auto near = temp_file("tradeoff_near.json");
    put(near, R"({"atoms":[{"p":0.499999,"q":0.25},{"p":0.5,"q":0.749999}]})");
    const auto [p2, q2] = io::parse_distribution(near);  // within 1e-6: accepted
    CHECK(p2[0] + p2[1] == doctest::Approx(1.0).epsilon(1e-14));

    const auto negative = temp_file("tradeoff_neg.json");
    put(negative, R"({"atoms":[{"p":0.5,"q":0.5},{"p":-0.1,"q":0.5}]})");
    CHECK_THROWS_WITH_AS(io::parse_distribution(negative),
                         doctest::Contains("atom 1"), std::invalid_argument);

    const auto off = temp_file("tradeoff_off.json");
    put(off, R"({"atoms":[{"p":0.4,"q":0.5},{"p":0.5,"q":0.5}]})");
    CHECK_THROWS_AS(io::parse_distribution(off), std::invalid_argument);

    const auto garbage = temp_file("tradeoff_garbage.json");
    put(garbage, "{not json");
    CHECK_THROWS_AS(io::parse_distribution(garbage), std::invalid_argument);
}

TEST_CASE("csv serialization conventions") {
    const auto same = DiscreteDistribution::normalized({0.5, 0.5});
    const auto curve = pr_curve(same, same, {0.5, 1.0, 2.0});
    const std::string csv = io::pr_csv(curve);
    std::stringstream ss(csv);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "lambda,alpha,beta");
    std::getline(ss, line);
    CHECK(line == "0,0,1");  // the lambda = 0 endpoint
    std::getline(ss, line);
    CHECK(line == "0.5,0.5,1");
    std::getline(ss, line);
    CHECK(line == "1,1,1");
    std::getline(ss, line);
    CHECK(line == "2,1,0.5");
    std::getline(ss, line);
    CHECK(line == "inf,1,0");

    const auto p3 = DiscreteDistribution::normalized({0.5, 0.5, 0.0});
    const auto q3 = DiscreteDistribution::normalized({0.25, 0.25, 0.5});
    const std::string csv3 = io::pr_csv(pr_curve(p3, q3, {1.0}));
    CHECK(csv3.find("1,0.5,0.5\n") != std::string::npos);

    const std::string lcsv = io::lorenz_csv(lorenz_curve(p3, q3));
    CHECK(lcsv == "t,F\n0,0\n1,0.5\n");
    const std::string rcsv = io::roc_csv(roc_curve(lorenz_curve(p3, q3)));
    CHECK(rcsv == "x,y\n0,0\n0.5,1\n");

    const std::string fcsv = io::frontier_csv(
        frontier_from_pr(pr_curve(DiscreteDistribution::normalized({1.0, 0.0}),
                                  DiscreteDistribution::normalized({0.0, 1.0}), {1.0})));
    CHECK(fcsv.find("1,inf,inf\n") != std::string::npos);
}

TEST_CASE("csv round trips") {
    InstanceGenerator gen(71);
    const auto inst = gen.random_pair(4, 10);

    const auto prpath = temp_file("tradeoff_pr.csv");
    const auto pr = pr_curve(inst.p, inst.q, default_lambda_grid(31));
    io::write_file(prpath, io::pr_csv(pr));
    const auto pr2 = io::read_pr_csv(prpath);
    REQUIRE(pr2.size() == pr.size());
    for (std::size_t i = 0; i < pr.size(); ++i) {
        CHECK(pr2[i].lambda == pr[i].lambda);  // 17 digits round-trip exactly
        CHECK(pr2[i].alpha == pr[i].alpha);
        CHECK(pr2[i].beta == pr[i].beta);
    }

    const auto lpath = temp_file("tradeoff_lorenz.csv");
    const auto curve = lorenz_curve(inst.p, inst.q);
    io::write_file(lpath, io::lorenz_csv(curve));
    const auto curve2 = io::read_lorenz_csv(lpath);
    REQUIRE(curve2.breakpoints().size() == curve.breakpoints().size());
    for (std::size_t i = 0; i < curve.breakpoints().size(); ++i) {
        CHECK(curve2.breakpoints()[i].t == curve.breakpoints()[i].t);
        CHECK(curve2.breakpoints()[i].f == curve.breakpoints()[i].f);
    }

    const auto dpath = temp_file("tradeoff_dist.json");
    io::write_file(dpath, io::distribution_json(inst.p, inst.q));
    const auto [p2, q2] = io::parse_distribution(dpath);
    for (std::size_t i = 0; i < inst.p.size(); ++i) {
        CHECK(p2[i] == inst.p[i]);
        CHECK(q2[i] == inst.q[i]);
    }
}

TEST_CASE("error mask parsing") {
    const auto mpath = temp_file("tradeoff_mask.json");
    put(mpath, R"({"error_atoms":[0,2]})");
    const auto mask = io::parse_error_mask(mpath, 3);
    CHECK(mask == std::vector<std::uint8_t>{1, 0, 1});
    CHECK_THROWS_AS(io::parse_error_mask(mpath, 2), std::invalid_argument);
}

TEST_CASE("scenario signatures") {
    RunConfig cfg;
    cfg.gmm_grid_points = 801;  // keep the unit suite quick; acceptance runs 2001

    SUBCASE("identical") {
        const auto r = run_scenario(scenario_by_name("identical"), cfg);
        CHECK(r.pass);
        CHECK(r.alpha_1 == 1.0);
        CHECK(r.tv == 0.0);
        for (const auto& pt : r.pr.points()) {
            if (!std::isinf(pt.lambda)) CHECK(pt.alpha == std::min(pt.lambda, 1.0));
        }
        CHECK(lorenz_eval(r.lorenz, 0.37) == 0.37);
    }
    SUBCASE("singular") {
        const auto r = run_scenario(scenario_by_name("singular"), cfg);
        CHECK(r.pass);
        for (const auto& pt : r.pr.points()) {
            CHECK(pt.alpha == 0.0);
            CHECK(pt.beta == 0.0);
        }
        for (const auto& f : r.frontier) {
            CHECK(std::isinf(f.pi));
            CHECK(std::isinf(f.rho));
        }
    }
    SUBCASE("mode signatures") {
        CHECK(run_scenario(scenario_by_name("mode-drop"), cfg).beta_0 < 0.95);
        CHECK(run_scenario(scenario_by_name("mode-invent"), cfg).alpha_inf < 0.95);
        const auto rw = run_scenario(scenario_by_name("mode-reweight"), cfg);
        CHECK(rw.beta_0 > 0.999);
        CHECK(rw.alpha_inf > 0.999);
        CHECK(rw.alpha_1 < 0.999);
    }
    SUBCASE("fig2-like bracket") {
        const auto r = run_scenario(scenario_by_name("fig2-like"), cfg);
        CHECK(r.alpha_1 >= 0.36);
        CHECK(r.alpha_1 <= 0.40);
        CHECK(std::abs(r.tv - 2.0 * (1.0 - r.alpha_1)) <= 1e-12);
    }
    SUBCASE("unknown name") {
        CHECK_THROWS_AS(scenario_by_name("nope"), std::invalid_argument);
    }
}

TEST_CASE("scenario outputs survive the cross-module property suite") {
    RunConfig cfg;
    cfg.gmm_grid_points = 501;
    cfg.lambda_grid_size = 51;
    for (const auto& name : scenario_names()) {
        const auto r = run_scenario(scenario_by_name(name), cfg);

        // PR/Lorenz duality along the grid.
        for (const auto& pt : r.pr.points()) {
            if (pt.lambda == 0.0 || std::isinf(pt.lambda)) continue;
            CHECK(std::abs(alpha_from_lorenz(r.lorenz, pt.lambda) - pt.alpha) <= 1e-9);
        }
        // Frontier mapping inverts to the curve.
        for (std::size_t i = 0; i < r.pr.size(); ++i) {
            if (!std::isinf(r.frontier[i].pi)) {
                CHECK(std::exp(-r.frontier[i].pi) ==
                      doctest::Approx(r.pr[i].alpha).epsilon(1e-12));
            }
        }
        // Brute-force oracles on a coarsened copy.
        const auto [cp, cq] = coarsen(r.p, r.q, 10);
        for (double lambda : {0.5, 1.0, 2.0}) {
            CHECK(oracle_alpha(cp, cq, lambda).gap <= 1e-11);
        }
        CHECK(oracle_sup_ratio(cp, cq).gap <= 1e-12);
        for (double t : {0.0, 0.5, 1.0}) {
            CHECK(oracle_lorenz(cp, cq, t).gap <= 1e-9);
        }
    }
}

TEST_CASE("summary json is stable and complete") {
    RunConfig cfg;
    cfg.gmm_grid_points = 301;
    const auto r = run_scenario(scenario_by_name("mode-drop"), cfg);
    const std::string summary = io::summary_json(r);
    CHECK(summary.find("\"alpha_1\"") != std::string::npos);
    CHECK(summary.find("\"tv\"") != std::string::npos);
    CHECK(summary.find("\"alpha_inf\"") != std::string::npos);
    CHECK(summary.find("\"beta_0\"") != std::string::npos);
    CHECK(summary.find("\"recall_gap\": true") != std::string::npos);
    CHECK(io::summary_json(r) == summary);
}

TEST_CASE("fixed configuration yields byte-identical outputs") {
    RunConfig cfg;
    cfg.gmm_grid_points = 301;
    cfg.lambda_grid_size = 31;
    const auto a = run_scenario(scenario_by_name("fig2-like"), cfg);
    const auto b = run_scenario(scenario_by_name("fig2-like"), cfg);
    CHECK(io::pr_csv(a.pr) == io::pr_csv(b.pr));
    CHECK(io::lorenz_csv(a.lorenz) == io::lorenz_csv(b.lorenz));
    CHECK(io::roc_csv(a.roc) == io::roc_csv(b.roc));
    CHECK(io::frontier_csv(a.frontier) == io::frontier_csv(b.frontier));
    CHECK(io::summary_json(a) == io::summary_json(b));
}
