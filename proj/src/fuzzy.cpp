#include "greyrank/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "greyrank/errors.hpp"

namespace greyrank {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw ValidationError(std::string(what) + " must be finite, got " +
                              std::to_string(v));
    }
}

}  // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    require_finite(lo, "interval endpoint");
    require_finite(hi, "interval endpoint");
    if (lo > hi) {
        throw ValidationError("interval endpoints out of order: [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

TrapezoidalFuzzy::TrapezoidalFuzzy(double y1_, double y2_, double y3_, double y4_)
    : y1(y1_), y2(y2_), y3(y3_), y4(y4_) {
    require_finite(y1, "trapezoid value");
    require_finite(y2, "trapezoid value");
    require_finite(y3, "trapezoid value");
    require_finite(y4, "trapezoid value");
    if (!(y1 <= y2 && y2 <= y3 && y3 <= y4)) {
        throw ValidationError("trapezoid values must satisfy y1 <= y2 <= y3 <= y4, got (" +
                              std::to_string(y1) + ", " + std::to_string(y2) + ", " +
                              std::to_string(y3) + ", " + std::to_string(y4) + ")");
    }
}

Interval alpha_cut(const TrapezoidalFuzzy& f, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw ValidationError("alpha must lie in [0, 1], got " + std::to_string(alpha));
    }
    return {alpha * f.y2 + (1.0 - alpha) * f.y1,
            alpha * f.y3 + (1.0 - alpha) * f.y4};
}

double interval_distance(const Interval& a, const Interval& b) {
    return std::max(std::fabs(a.lo - b.lo), std::fabs(a.hi - b.hi));
}

}  // namespace greyrank
