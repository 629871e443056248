// Wall-clock comparison of the OpenMP kernels against their serial
// reference implementations: PR-curve grid evaluation and the two
// subset-enumeration oracles. Results must match exactly; only the time
// may differ.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tradeoff/distribution.hpp"
#include "tradeoff/oracle.hpp"
#include "tradeoff/pr_curve.hpp"
#include "tradeoff/random_instances.hpp"

namespace {

double seconds(const std::chrono::steady_clock::time_point& a,
               const std::chrono::steady_clock::time_point& b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double time_best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, seconds(t0, t1));
    }
    return best;
}

tradeoff::DiscreteDistribution random_support(std::size_t n, std::uint64_t seed) {
    tradeoff::SplitMix64 rng(seed);
    std::vector<double> w(n);
    double total = 0.0;
    for (auto& x : w) {
        x = rng.uniform() + 1e-6;
        total += x;
    }
    for (auto& x : w) x /= total;
    return tradeoff::DiscreteDistribution::normalized(std::move(w), 1e-6);
}

void row(const char* name, double serial, double parallel, bool identical) {
    std::printf("%-28s %10.4fs %10.4fs %8.2fx  %s\n", name, serial, parallel,
                serial / parallel, identical ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled: both columns run the same serial code\n\n");
#endif
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        const auto p = random_support(20000, 1);
        const auto q = random_support(20000, 2);
        const auto grid = tradeoff::default_lambda_grid(2001);
        tradeoff::PrCurve serial_out = tradeoff::pr_curve_serial(p, q, grid);
        tradeoff::PrCurve parallel_out = tradeoff::pr_curve(p, q, grid);
        const double ts = time_best_of(3, [&] { serial_out = tradeoff::pr_curve_serial(p, q, grid); });
        const double tp = time_best_of(3, [&] { parallel_out = tradeoff::pr_curve(p, q, grid); });
        bool same = serial_out.size() == parallel_out.size();
        for (std::size_t i = 0; same && i < serial_out.size(); ++i) {
            same = serial_out[i].alpha == parallel_out[i].alpha &&
                   serial_out[i].beta == parallel_out[i].beta;
        }
        row("pr_curve n=20000 m=2001", ts, tp, same);
    }

    {
        const auto p = random_support(20, 3);
        const auto q = random_support(20, 4);
        const auto rs = oracle_alpha_serial(p, q, 0.7);
        const auto rp = oracle_alpha(p, q, 0.7);
        const double ts = time_best_of(3, [&] { (void)oracle_alpha_serial(p, q, 0.7); });
        const double tp = time_best_of(3, [&] { (void)oracle_alpha(p, q, 0.7); });
        row("oracle_alpha n=20", ts, tp,
            rs.oracle == rp.oracle && rs.witness_mask == rp.witness_mask);
    }

    {
        const auto p = random_support(20, 5);
        const auto q = random_support(20, 6);
        const auto rs = oracle_sup_ratio_serial(p, q);
        const auto rp = oracle_sup_ratio(p, q);
        const double ts = time_best_of(3, [&] { (void)oracle_sup_ratio_serial(p, q); });
        const double tp = time_best_of(3, [&] { (void)oracle_sup_ratio(p, q); });
        row("oracle_sup_ratio n=20", ts, tp,
            rs.oracle == rp.oracle && rs.witness_mask == rp.witness_mask);
    }

    return 0;
}
