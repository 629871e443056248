#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "tradeoff/distribution.hpp"
#include "tradeoff/numeric.hpp"
#include "tradeoff/random_instances.hpp"

using namespace tradeoff;

namespace {
DiscreteDistribution dist(std::vector<double> w) {
    return DiscreteDistribution::normalized(std::move(w));
}
}  // namespace

TEST_CASE("normalization validates and renormalizes") {
    CHECK_THROWS_AS(dist({0.5, -0.1, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(dist({0.5, 0.4}), std::invalid_argument);  // mass 0.9
    CHECK_THROWS_AS(dist({}), std::invalid_argument);

    const auto d = DiscreteDistribution::normalized({0.5, 0.4999999999}, 1e-9);
    StableSum total;
    for (double w : d) total.add(w);
    CHECK(total.value() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("measure_min basics") {
    const auto half = dist({0.5, 0.5});
    CHECK(measure_min(1.0, half, half) == 1.0);

    const auto left = dist({1.0, 0.0});
    const auto right = dist({0.0, 1.0});
    CHECK(measure_min(1.0, left, right) == 0.0);

    // Brute-force subset minimum at lambda = 1 gives 0.5 for the
    // three-atom partial overlap.
    const auto p = dist({0.5, 0.5, 0.0});
    const auto q = dist({0.25, 0.25, 0.5});
    CHECK(measure_min(1.0, p, q) == doctest::Approx(0.5).epsilon(1e-12));

    // Symbolic endpoints: inf * 0 = 0.
    CHECK(measure_min(kInf, p, q) == doctest::Approx(0.5).epsilon(1e-12));  // Q(supp P)
    CHECK(measure_min(kInf, q, p) == doctest::Approx(1.0).epsilon(1e-12));  // P(supp Q)
    CHECK(measure_min(0.0, p, q) == 0.0);

    CHECK_THROWS_AS(measure_min(-1.0, p, q), std::invalid_argument);
    CHECK_THROWS_AS(measure_min(1.0, half, q), std::invalid_argument);
}

TEST_CASE("total variation and the alpha_1 identity") {
    const auto p = dist({0.5, 0.5, 0.0});
    const auto q = dist({0.25, 0.25, 0.5});
    CHECK(total_variation(p, p) == 0.0);
    CHECK(total_variation(dist({1.0, 0.0}), dist({0.0, 1.0})) == 2.0);
    CHECK(total_variation(p, q) == doctest::Approx(1.0).epsilon(1e-12));

    InstanceGenerator gen(20240811);
    for (int k = 0; k < 200; ++k) {
        const auto inst = gen.random_pair();
        const double tv = total_variation(inst.p, inst.q);
        const double alpha1 = measure_min(1.0, inst.p, inst.q);
        CHECK(std::abs(tv - 2.0 * (1.0 - alpha1)) <= 1e-12);
        CHECK(tv >= -1e-15);
        CHECK(tv <= 2.0 + 1e-15);
    }
}

TEST_CASE("measure_min is bounded by min(s, 1)") {
    InstanceGenerator gen(7);
    for (int k = 0; k < 200; ++k) {
        const auto inst = gen.random_pair();
        const double s = std::tan(gen.rng().uniform() * 1.5);
        CHECK(measure_min(s, inst.p, inst.q) <= std::min(s, 1.0) + 1e-12);
    }
}

TEST_CASE("ratio profile conventions") {
    const auto p = dist({0.5, 0.5, 0.0});
    const auto q = dist({0.25, 0.25, 0.5});
    const auto profile = ratio_profile(p, q);
    CHECK(profile.ratio[0] == 0.5);
    CHECK(profile.ratio[1] == 0.5);
    CHECK(std::isinf(profile.ratio[2]));
    CHECK_FALSE(profile.inert[2]);

    const auto r2 = ratio_profile(dist({1.0, 0.0}), dist({0.5, 0.5}));
    CHECK(r2.ratio[0] == 0.5);
    CHECK(std::isinf(r2.ratio[1]));

    const auto same = ratio_profile(dist({0.5, 0.5}), dist({0.5, 0.5}));
    CHECK(same.ratio[0] == 1.0);
    CHECK(same.ratio[1] == 1.0);

    // dP/d(P+Q) + dQ/d(P+Q) = 1 on the joint support.
    InstanceGenerator gen(99);
    for (int k = 0; k < 100; ++k) {
        const auto inst = gen.random_pair();
        const auto prof = ratio_profile(inst.p, inst.q);
        for (std::size_t i = 0; i < inst.p.size(); ++i) {
            if (!prof.inert[i]) {
                CHECK(prof.dp[i] + prof.dq[i] == doctest::Approx(1.0).epsilon(1e-12));
            } else {
                CHECK(prof.dp[i] == 0.0);
                CHECK(prof.dq[i] == 0.0);
            }
        }
    }
}

TEST_CASE("gmm discretization") {
    const auto gauss = [](double mean, double sigma) {
        return GmmSpec::make({{1.0, mean, sigma}});
    };

    SUBCASE("identical specs give atomwise equal outputs") {
        const auto [p, q] = discretize_gmm(gauss(0.0, 1.0), gauss(0.0, 1.0), 501, 6.0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(std::abs(p[i] - q[i]) <= 1e-12);
        }
    }

    SUBCASE("well separated gaussians share almost no mass") {
        const auto [p, q] = discretize_gmm(gauss(0.0, 1.0), gauss(20.0, 1.0), 2001, 6.0);
        CHECK(measure_min(1.0, p, q) < 1e-6);
    }

    SUBCASE("dropping a component leaves P mass outside supp(Q)") {
        const auto spec_p = GmmSpec::make(
            {{1.0 / 3, -4.0, 0.5}, {1.0 / 3, 0.0, 0.5}, {1.0 / 3, 4.0, 0.5}});
        const auto spec_q = GmmSpec::make({{0.5, -4.0, 0.5}, {0.5, 0.0, 0.5}});
        const auto [p, q] = discretize_gmm(spec_p, spec_q, 2001, 6.0);
        StableSum covered;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (q[i] > 0.0) covered.add(p[i]);
        }
        CHECK(covered.value() < 1.0 - 0.05);
    }

    SUBCASE("outputs satisfy distribution invariants") {
        const auto [p, q] = discretize_gmm(gauss(-1.0, 0.5), gauss(2.0, 2.0), 101, 6.0);
        StableSum sp, sq;
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(p[i] >= 0.0);
            CHECK(q[i] >= 0.0);
            sp.add(p[i]);
            sq.add(q[i]);
        }
        CHECK(sp.value() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(sq.value() == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("validation") {
        CHECK_THROWS_AS(discretize_gmm(gauss(0, 1), gauss(0, 1), 1, 6.0),
                        std::invalid_argument);
        CHECK_THROWS_AS(discretize_gmm(gauss(0, 1), gauss(0, 1), 100, 0.0),
                        std::invalid_argument);
        CHECK_THROWS_AS(GmmSpec::make({{1.0, 0.0, 0.0}}), std::invalid_argument);
        CHECK_THROWS_AS(GmmSpec::make({{0.5, 0.0, 1.0}}), std::invalid_argument);
    }
}
