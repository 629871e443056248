#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tradeoff/duality.hpp"
#include "tradeoff/numeric.hpp"
#include "tradeoff/random_instances.hpp"

using namespace tradeoff;

namespace {

DiscreteDistribution dist(std::vector<double> w) {
    return DiscreteDistribution::normalized(std::move(w));
}
const DiscreteDistribution kP3 = dist({0.5, 0.5, 0.0});
const DiscreteDistribution kQ3 = dist({0.25, 0.25, 0.5});

// Finite positive likelihood ratios of the pair: the segment slopes that
// make the dual grids exact.
std::vector<double> exact_ratios(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    std::vector<double> r;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0 && q[i] > 0.0) r.push_back(q[i] / p[i]);
    }
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

std::vector<double> augmented_grid(const DiscreteDistribution& p, const DiscreteDistribution& q,
                                   std::size_t m = 51) {
    auto grid = default_lambda_grid(m);
    for (double r : exact_ratios(p, q)) grid.push_back(r);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

}  // namespace

TEST_CASE("legendre transform of the reference curves") {
    const auto same = dist({0.5, 0.5});
    const auto diagonal = lorenz_curve(same, same);
    CHECK(legendre(diagonal, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(legendre(diagonal, 0.5) == 0.0);

    const auto half = lorenz_curve(kP3, kQ3);  // F(t) = 0.5 t
    CHECK(legendre(half, 2.0) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(legendre(half, 0.3) == 0.0);

    CHECK_THROWS_AS(legendre(half, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(legendre(half, kInf), std::invalid_argument);
}

TEST_CASE("conjugate curve stores the same function") {
    InstanceGenerator gen(51);
    for (int k = 0; k < 100; ++k) {
        const auto inst = gen.random_pair();
        const auto curve = lorenz_curve(inst.p, inst.q);
        const auto conj = conjugate_curve(curve);
        CHECK(conj.eval(0.0) == 0.0);  // F >= 0 and F(0) = 0
        for (double lambda : default_lambda_grid(17)) {
            CHECK(std::abs(conj.eval(lambda) - legendre(curve, lambda)) <=
                  1e-12 * (1.0 + lambda));
        }
    }
}

TEST_CASE("alpha recovered from the Lorenz curve") {
    const auto same = dist({0.5, 0.5});
    CHECK(alpha_from_lorenz(lorenz_curve(same, same), 2.0) == doctest::Approx(1.0));

    const auto half = lorenz_curve(kP3, kQ3);
    CHECK(alpha_from_lorenz(half, 2.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(alpha_from_lorenz(half, 0.3) == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("duality round trip: Lorenz reconstruction matches direct alpha") {
    InstanceGenerator gen(52);
    for (int k = 0; k < 100; ++k) {
        const auto inst = gen.random_pair(2, 64);
        const auto curve = lorenz_curve(inst.p, inst.q);
        for (double lambda : augmented_grid(inst.p, inst.q)) {
            const double direct = pr_point_direct(inst.p, inst.q, lambda).alpha;
            CHECK(std::abs(alpha_from_lorenz(curve, lambda) - direct) <= 1e-9);
        }
    }
}

TEST_CASE("solver paths agree with the closed form") {
    InstanceGenerator gen(53);
    for (int k = 0; k < 60; ++k) {
        const auto inst = gen.random_pair();
        const auto curve = lorenz_curve(inst.p, inst.q);
        for (double lambda : augmented_grid(inst.p, inst.q, 21)) {
            const double closed = alpha_from_lorenz(curve, lambda);
            CHECK(std::abs(alpha_from_lorenz_bisection(curve, lambda) - closed) <= 1e-7);
            CHECK(std::abs(alpha_from_lorenz_golden(curve, lambda) - closed) <= 1e-7);
        }
    }
}

TEST_CASE("biconjugation recovers the Lorenz curve from the PR curve") {
    SUBCASE("reference values") {
        const auto same = dist({0.5, 0.5});
        const auto pr_same = pr_curve(same, same, default_lambda_grid(201));
        const auto rec = lorenz_from_pr(pr_same, 0.5);
        CHECK(rec.value == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(rec.lambda == doctest::Approx(1.0).epsilon(0.02));

        const auto pr3 = pr_curve(kP3, kQ3, augmented_grid(kP3, kQ3));
        CHECK(lorenz_from_pr(pr3, 1.0).value == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(lorenz_from_pr(pr3, 0.4).value == doctest::Approx(0.2).epsilon(1e-12));
    }

    SUBCASE("default grid is a lower approximation within 2e-3") {
        InstanceGenerator gen(54);
        for (int k = 0; k < 40; ++k) {
            const auto inst = gen.random_pair();
            const auto curve = lorenz_curve(inst.p, inst.q);
            const auto pr = pr_curve(inst.p, inst.q, default_lambda_grid(201));
            for (const auto& b : curve.breakpoints()) {
                const auto rec = lorenz_from_pr(pr, b.t);
                CHECK(rec.value <= b.f + 1e-12);
                CHECK(rec.value >= b.f - 2e-3);
            }
        }
    }

    SUBCASE("ratio-augmented grid is exact at breakpoints") {
        InstanceGenerator gen(55);
        for (int k = 0; k < 60; ++k) {
            const auto inst = gen.random_pair();
            const auto curve = lorenz_curve(inst.p, inst.q);
            const auto pr = pr_curve(inst.p, inst.q, augmented_grid(inst.p, inst.q));
            for (const auto& b : curve.breakpoints()) {
                CHECK(std::abs(lorenz_from_pr(pr, b.t).value - b.f) <= 1e-9);
            }
        }
    }
}

TEST_CASE("Fenchel-Young inequality with equality on the subdifferential") {
    InstanceGenerator gen(56);
    for (int k = 0; k < 60; ++k) {
        const auto inst = gen.random_pair();
        const auto curve = lorenz_curve(inst.p, inst.q);
        for (double lambda : default_lambda_grid(11)) {
            for (double t : {0.0, 0.21, 0.5, 0.83, 1.0}) {
                const double slack =
                    lorenz_eval(curve, t) + legendre(curve, lambda) - lambda * t;
                CHECK(slack >= -1e-9);
                const auto sub = lorenz_subdifferential(curve, t);
                if (lambda >= sub.lo - 1e-12 && lambda <= sub.hi + 1e-12) {
                    CHECK(std::abs(slack) <= 1e-9);
                }
            }
        }
    }
}

TEST_CASE("lambda_from_t is the subdifferential correspondence") {
    const auto same = dist({0.5, 0.5});
    const auto diag = lorenz_curve(same, same);
    CHECK(lambda_from_t(diag, 0.5).lo == 1.0);
    CHECK(lambda_from_t(diag, 0.5).hi == 1.0);

    const auto half = lorenz_curve(kP3, kQ3);
    CHECK(lambda_from_t(half, 0.5).lo == 0.5);
    CHECK(lambda_from_t(half, 0.5).hi == 0.5);

    // t_lambda = P(A_lambda) supports lambda.
    InstanceGenerator gen(57);
    for (int k = 0; k < 60; ++k) {
        const auto inst = gen.random_pair();
        const auto curve = lorenz_curve(inst.p, inst.q);
        for (double lambda : default_lambda_grid(11)) {
            const auto pt = pr_point_via_sets(inst.p, inst.q, lambda);
            StableSum pa;
            for (std::size_t i = 0; i < inst.p.size(); ++i) {
                if ((*pt.set_mask)[i]) pa.add(inst.p[i]);
            }
            const auto sub = lambda_from_t(curve, std::min(pa.value(), 1.0));
            CHECK(lambda >= sub.lo - 1e-9);
            CHECK(lambda <= sub.hi + 1e-9);
        }
    }
}
