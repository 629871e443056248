#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tradeoff/distribution.hpp"
#include "tradeoff/lorenz.hpp"

namespace tradeoff {

/// Outcome of one exponential-time verification: the closed-form value,
/// the enumerated value, their absolute gap, and the witness that attained
/// the optimum (a subset bitmask, or per-atom weights for soft functions).
struct OracleReport {
    std::string quantity;
    double closed_form = 0.0;
    double oracle = 0.0;
    double gap = 0.0;
    std::uint64_t witness_mask = 0;
    std::vector<double> witness_weights;  // soft-function oracle only
};

/// min over all 2^n subsets A of lambda (1 - P(A)) + Q(A), compared against
/// the atomwise-minimum alpha_lambda. Ties break toward the lowest bitmask,
/// so any partition of the enumeration yields the same witness. n <= 20.
OracleReport oracle_alpha(const DiscreteDistribution& p, const DiscreteDistribution& q,
                          double lambda);
OracleReport oracle_alpha_serial(const DiscreteDistribution& p, const DiscreteDistribution& q,
                                 double lambda);

/// max over nonempty subsets of mu(A)/nu(A) (0/0 = 0), compared against the
/// essential-supremum formula. n <= 20.
OracleReport oracle_sup_ratio(const DiscreteDistribution& mu, const DiscreteDistribution& nu);
OracleReport oracle_sup_ratio_serial(const DiscreteDistribution& mu,
                                     const DiscreteDistribution& nu);

/// Lower convex envelope of the 2^n indicator points (P(A), Q(A)) evaluated
/// at t, compared against the Neyman-Pearson Lorenz curve. n <= 16.
OracleReport oracle_lorenz(const DiscreteDistribution& p, const DiscreteDistribution& q,
                           double t);

/// Samples `trials` random soft functions f in [0,1]^n (the indicator of
/// A_lambda is always trial zero) and reports the minimum of
/// lambda (1 - int f dP) + int f dQ. No soft function may beat alpha_lambda.
OracleReport oracle_soft_f_domination(const DiscreteDistribution& p,
                                      const DiscreteDistribution& q, double lambda,
                                      std::size_t trials, std::uint64_t seed);

}  // namespace tradeoff
