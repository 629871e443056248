#include "tradeoff/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tradeoff/numeric.hpp"
#include "tradeoff/pr_curve.hpp"
#include "tradeoff/random_instances.hpp"

namespace tradeoff {

namespace {

void require_enumerable(std::size_t n, std::size_t limit) {
    if (n > limit) {
        throw std::invalid_argument("support too large for subset enumeration (n = " +
                                    std::to_string(n) + ", limit " + std::to_string(limit) + ")");
    }
}

struct Best {
    double value;
    std::uint64_t mask;
};

// (value, mask) lexicographic order; commutative merge makes the parallel
// reduction schedule-independent.
inline bool better_min(const Best& a, const Best& b) {
    return a.value < b.value || (a.value == b.value && a.mask < b.mask);
}
inline bool better_max(const Best& a, const Best& b) {
    return a.value > b.value || (a.value == b.value && a.mask < b.mask);
}

double alpha_objective(const DiscreteDistribution& p, const DiscreteDistribution& q,
                       double lambda, std::uint64_t mask) {
    double p_out = 0.0, q_in = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (mask >> i & 1) {
            q_in += q[i];
        } else {
            p_out += p[i];
        }
    }
    return lambda * p_out + q_in;
}

double ratio_objective(const DiscreteDistribution& mu, const DiscreteDistribution& nu,
                       std::uint64_t mask) {
    double m = 0.0, n = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mask >> i & 1) {
            m += mu[i];
            n += nu[i];
        }
    }
    if (m == 0.0) return 0.0;  // 0/0 = 0
    if (n == 0.0) return kInf;
    return m / n;
}

OracleReport alpha_report(const DiscreteDistribution& p, const DiscreteDistribution& q,
                          double lambda, const Best& best) {
    OracleReport report;
    report.quantity = "alpha_lambda";
    report.closed_form = pr_point_direct(p, q, lambda).alpha;
    report.oracle = best.value;
    report.gap = std::abs(report.closed_form - report.oracle);
    report.witness_mask = best.mask;
    return report;
}

OracleReport ratio_report(const DiscreteDistribution& mu, const DiscreteDistribution& nu,
                          const Best& best) {
    OracleReport report;
    report.quantity = "sup_ratio";
    double closed = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] > 0.0) {
            closed = std::max(closed, nu[i] > 0.0 ? mu[i] / nu[i] : kInf);
        }
    }
    report.closed_form = closed;
    report.oracle = best.value;
    report.gap = (std::isinf(closed) && std::isinf(best.value))
                     ? 0.0
                     : std::abs(report.closed_form - report.oracle);
    report.witness_mask = best.mask;
    return report;
}

void check_lambda_finite(double lambda) {
    if (!(lambda >= 0.0) || std::isinf(lambda)) {
        throw std::invalid_argument("oracle enumeration needs finite nonnegative lambda");
    }
}

}  // namespace

OracleReport oracle_alpha(const DiscreteDistribution& p, const DiscreteDistribution& q,
                          double lambda) {
    detail::require_same_support(p, q);
    check_lambda_finite(lambda);
    require_enumerable(p.size(), 20);
    const std::uint64_t total = 1ull << p.size();
    Best best{kInf, 0};
#pragma omp parallel
    {
        Best local{kInf, 0};
#pragma omp for schedule(static) nowait
        for (long long m = 0; m < static_cast<long long>(total); ++m) {
            const auto mask = static_cast<std::uint64_t>(m);
            const Best cand{alpha_objective(p, q, lambda, mask), mask};
            if (better_min(cand, local)) local = cand;
        }
#pragma omp critical(tradeoff_oracle_alpha)
        {
            if (better_min(local, best)) best = local;
        }
    }
    return alpha_report(p, q, lambda, best);
}

OracleReport oracle_alpha_serial(const DiscreteDistribution& p, const DiscreteDistribution& q,
                                 double lambda) {
    detail::require_same_support(p, q);
    check_lambda_finite(lambda);
    require_enumerable(p.size(), 20);
    const std::uint64_t total = 1ull << p.size();
    Best best{kInf, 0};
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const Best cand{alpha_objective(p, q, lambda, mask), mask};
        if (better_min(cand, best)) best = cand;
    }
    return alpha_report(p, q, lambda, best);
}

OracleReport oracle_sup_ratio(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
    detail::require_same_support(mu, nu);
    require_enumerable(mu.size(), 20);
    const std::uint64_t total = 1ull << mu.size();
    Best best{-kInf, 0};
#pragma omp parallel
    {
        Best local{-kInf, 0};
#pragma omp for schedule(static) nowait
        for (long long m = 1; m < static_cast<long long>(total); ++m) {
            const auto mask = static_cast<std::uint64_t>(m);
            const Best cand{ratio_objective(mu, nu, mask), mask};
            if (better_max(cand, local)) local = cand;
        }
#pragma omp critical(tradeoff_oracle_ratio)
        {
            if (better_max(local, best)) best = local;
        }
    }
    return ratio_report(mu, nu, best);
}

OracleReport oracle_sup_ratio_serial(const DiscreteDistribution& mu,
                                     const DiscreteDistribution& nu) {
    detail::require_same_support(mu, nu);
    require_enumerable(mu.size(), 20);
    const std::uint64_t total = 1ull << mu.size();
    Best best{-kInf, 0};
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        const Best cand{ratio_objective(mu, nu, mask), mask};
        if (better_max(cand, best)) best = cand;
    }
    return ratio_report(mu, nu, best);
}

OracleReport oracle_lorenz(const DiscreteDistribution& p, const DiscreteDistribution& q,
                           double t) {
    detail::require_same_support(p, q);
    require_enumerable(p.size(), 16);
    if (!(t >= 0.0) || t > 1.0) throw std::invalid_argument("t must lie in [0, 1]");
    const std::uint64_t total = 1ull << p.size();

    struct XY {
        double x, y;
    };
    std::vector<XY> pts(total);
#pragma omp parallel for schedule(static)
    for (long long m = 0; m < static_cast<long long>(total); ++m) {
        const auto mask = static_cast<std::uint64_t>(m);
        double px = 0.0, qy = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (mask >> i & 1) {
                px += p[i];
                qy += q[i];
            }
        }
        pts[static_cast<std::size_t>(m)] = {px, qy};
    }
    std::sort(pts.begin(), pts.end(),
              [](const XY& a, const XY& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    // The envelope is a function of the abscissa: only the lowest point of
    // each x-run can support it.
    std::vector<XY> filtered;
    filtered.reserve(pts.size());
    for (const auto& pt : pts) {
        if (filtered.empty() || pt.x > filtered.back().x) filtered.push_back(pt);
    }

    // Andrew's monotone chain, lower hull only.
    std::vector<XY> hull;
    for (const auto& pt : filtered) {
        while (hull.size() >= 2) {
            const XY& a = hull[hull.size() - 2];
            const XY& b = hull[hull.size() - 1];
            if ((b.x - a.x) * (pt.y - a.y) - (b.y - a.y) * (pt.x - a.x) <= 0.0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(pt);
    }

    double value;
    if (t <= hull.front().x) {
        value = hull.front().y;
    } else if (t >= hull.back().x) {
        value = hull.back().y;
    } else {
        std::size_t k = 1;
        while (hull[k].x < t) ++k;
        const XY& a = hull[k - 1];
        const XY& b = hull[k];
        value = b.x > a.x ? a.y + (t - a.x) * (b.y - a.y) / (b.x - a.x) : a.y;
    }

    OracleReport report;
    report.quantity = "lorenz_envelope";
    report.closed_form = lorenz_eval(lorenz_curve(p, q), t);
    report.oracle = value;
    report.gap = std::abs(report.closed_form - report.oracle);
    return report;
}

OracleReport oracle_soft_f_domination(const DiscreteDistribution& p,
                                      const DiscreteDistribution& q, double lambda,
                                      std::size_t trials, std::uint64_t seed) {
    detail::require_same_support(p, q);
    check_lambda_finite(lambda);
    if (trials == 0) throw std::invalid_argument("need at least one trial");
    const std::size_t n = p.size();

    const auto evaluate = [&](const std::vector<double>& f) {
        StableSum fp, fq;
        for (std::size_t i = 0; i < n; ++i) {
            fp.add(f[i] * p[i]);
            fq.add(f[i] * q[i]);
        }
        return lambda * (1.0 - fp.value()) + fq.value();
    };

    // Trial zero is the indicator of A_lambda: the optimum is attained there,
    // so the reported minimum equals alpha_lambda unless domination breaks.
    std::vector<double> indicator(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if ((p[i] > 0.0 || q[i] > 0.0) && q[i] <= lambda * p[i]) indicator[i] = 1.0;
    }
    std::vector<double> best_f = indicator;
    double best = evaluate(indicator);

    SplitMix64 rng(seed);
    std::vector<double> f(n);
    for (std::size_t trial = 1; trial < trials; ++trial) {
        for (std::size_t i = 0; i < n; ++i) f[i] = rng.uniform();
        const double value = evaluate(f);
        if (value < best) {
            best = value;
            best_f = f;
        }
    }

    OracleReport report;
    report.quantity = "soft_f_domination";
    report.closed_form = pr_point_direct(p, q, lambda).alpha;
    report.oracle = best;
    report.gap = std::abs(report.closed_form - report.oracle);
    report.witness_weights = std::move(best_f);
    return report;
}

}  // namespace tradeoff
