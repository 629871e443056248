#pragma once

#include <vector>

#include "tradeoff/distribution.hpp"
#include "tradeoff/pr_curve.hpp"

namespace tradeoff {

struct LorenzBreakpoint {
    double t;  // cumulative P mass
    double f;  // minimal Q mass needed to cover it
};

/// Piecewise-linear convex nondecreasing F on [0, 1] built by
/// Neyman-Pearson ordering: F(t) is the least Q-mass of a soft set
/// capturing at least t of P's mass. Breakpoints start at (0, 0) and end
/// at (1, Q(supp P)); each segment's slope is the likelihood ratio q/p
/// shared by the atoms merged into it.
class LorenzCurve {
public:
    LorenzCurve(std::vector<LorenzBreakpoint> breakpoints, std::vector<double> segment_slopes);

    const std::vector<LorenzBreakpoint>& breakpoints() const { return breakpoints_; }
    /// slopes()[k] is the likelihood ratio on (breakpoints k, k+1); nondecreasing.
    const std::vector<double>& slopes() const { return slopes_; }

private:
    std::vector<LorenzBreakpoint> breakpoints_;
    std::vector<double> slopes_;
};

LorenzCurve lorenz_curve(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// Piecewise-linear interpolation between breakpoints; t in [0, 1].
double lorenz_eval(const LorenzCurve& curve, double t);

/// [left slope, right slope] of F at t; the full slope interval at a
/// breakpoint. Clamped to [0, +inf) at t = 0 and unbounded above at t = 1,
/// matching the lambda >= 0 domain it parameterizes.
SlopeInterval lorenz_subdifferential(const LorenzCurve& curve, double t);

struct RocPoint {
    double x;
    double y;
};

/// Reflection of the Lorenz breakpoints across the main diagonal; the
/// boundary of the Mode Collapse Region. Applying it twice is the identity.
std::vector<RocPoint> roc_curve(const LorenzCurve& curve);

}  // namespace tradeoff
