#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace tradeoff {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Neumaier-compensated accumulator. Grid discretizations put a few
/// thousand atoms behind every mass sum; plain accumulation would eat
/// three digits of the 1e-12 identity checks.
class StableSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Serializes a real with 17 significant digits; infinities become the
/// literal `inf` / `-inf` expected by the CSV consumers.
inline std::string format_real17(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace tradeoff
