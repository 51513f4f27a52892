#ifndef GREYRANK_FUZZY_HPP
#define GREYRANK_FUZZY_HPP

#include <compare>

namespace greyrank {

/// Closed interval [lo, hi]. Construction rejects lo > hi and non-finite
/// endpoints; a zero-width interval represents a crisp value.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double lo, double hi);

    double width() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

/// Trapezoidal fuzzy number with monotone support y1 <= y2 <= y3 <= y4.
/// [y2, y3] is the core, [y1, y4] the support. A crisp value collapses
/// all four.
struct TrapezoidalFuzzy {
    double y1, y2, y3, y4;

    TrapezoidalFuzzy(double y1, double y2, double y3, double y4);
    static TrapezoidalFuzzy crisp(double v) { return {v, v, v, v}; }

    bool is_crisp() const { return y1 == y4; }
    bool operator==(const TrapezoidalFuzzy&) const = default;
};

/// Interval reduction at membership level alpha in [0, 1]:
///   [alpha*y2 + (1-alpha)*y1, alpha*y3 + (1-alpha)*y4].
/// alpha = 0 yields the full support, alpha = 1 the core.
Interval alpha_cut(const TrapezoidalFuzzy& f, double alpha);

/// Chebyshev distance on endpoint pairs:
///   max(|a.lo - b.lo|, |a.hi - b.hi|).
/// Symmetric, non-negative, zero iff the intervals coincide.
double interval_distance(const Interval& a, const Interval& b);

}  // namespace greyrank

#endif
