#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tradeoff/distribution.hpp"

namespace tradeoff {

/// One point of the precision-recall frontier: alpha = ((lambda P) ^ Q)(Omega),
/// beta = (P ^ Q/lambda)(Omega). lambda is an extended real; the endpoints
/// lambda = 0 and lambda = +inf are handled symbolically (0 * inf = 0), never
/// as large floats. `set_mask`, when present, marks the likelihood-ratio set
/// A_lambda = {q <= lambda p} that witnesses the point.
struct PrPoint {
    double lambda = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    std::optional<std::vector<std::uint8_t>> set_mask;
};

/// Frontier points sorted by lambda, endpoints included. alpha is
/// nondecreasing and beta nonincreasing along the curve; alpha at
/// lambda = inf equals Q(supp P) and beta at lambda = 0 equals P(supp Q).
class PrCurve {
public:
    explicit PrCurve(std::vector<PrPoint> points);

    const std::vector<PrPoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const PrPoint& operator[](std::size_t i) const { return points_[i]; }

private:
    std::vector<PrPoint> points_;
};

/// Angular lambda grid tan(k pi / (2(m+1))), k = 1..m: evenly covers both
/// the lambda -> 0 and lambda -> inf regimes.
std::vector<double> default_lambda_grid(std::size_t m = 201);

/// Atomwise-minimum evaluation (the measure formulation).
PrPoint pr_point_direct(const DiscreteDistribution& p, const DiscreteDistribution& q,
                        double lambda);

/// Likelihood-ratio-set evaluation: alpha = lambda (1 - P(A)) + Q(A) with
/// A = {q <= lambda p} over the joint support, boundary atoms included.
/// Requires finite positive lambda; populates set_mask.
PrPoint pr_point_via_sets(const DiscreteDistribution& p, const DiscreteDistribution& q,
                          double lambda);

/// Evaluates the curve on a strictly increasing grid of finite positive
/// lambdas and appends the symbolic endpoints. Grid points are independent,
/// so the loop parallelizes; the output order is the grid order.
PrCurve pr_curve(const DiscreteDistribution& p, const DiscreteDistribution& q,
                 const std::vector<double>& lambda_grid);

/// Serial reference for pr_curve; kept for testing the parallel kernel.
PrCurve pr_curve_serial(const DiscreteDistribution& p, const DiscreteDistribution& q,
                        const std::vector<double>& lambda_grid);

/// (alpha, beta) in PRD(P, Q) iff alpha <= alpha_lambda and beta <= beta_lambda
/// at lambda = alpha/beta. (0, 0) is a member by convention.
bool prd_membership(const DiscreteDistribution& p, const DiscreteDistribution& q, double alpha,
                    double beta);

struct SlopeInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Super-differential of the concave map lambda -> alpha_lambda:
/// [1 - P({q <= lambda p}), 1 - P({q < lambda p})].
SlopeInterval alpha_subdifferential(const DiscreteDistribution& p,
                                    const DiscreteDistribution& q, double lambda);

}  // namespace tradeoff
