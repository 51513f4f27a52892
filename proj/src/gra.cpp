#include "greyrank/gra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "greyrank/errors.hpp"

namespace greyrank {

namespace {

constexpr double kUnitTolerance = 1e-9;

}  // namespace

ComparabilityMatrix::ComparabilityMatrix(std::vector<std::string> alternatives,
                                         std::vector<std::string> attributes,
                                         std::vector<Interval> cells)
    : alternatives_(std::move(alternatives)),
      attributes_(std::move(attributes)),
      cells_(std::move(cells)) {
    const std::size_t m = alternatives_.size();
    const std::size_t n = attributes_.size();
    if (m == 0 || n == 0) {
        throw ValidationError("comparability matrix must have at least one alternative and one attribute");
    }
    if (cells_.size() != m * n) {
        throw ValidationError("comparability matrix cell count " + std::to_string(cells_.size()) +
                              " does not match " + std::to_string(m) + "x" + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
        double col_max_hi = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const Interval& c = at(i, j);
            if (c.lo < -kUnitTolerance || c.hi > 1.0 + kUnitTolerance) {
                throw ValidationError("comparability entry (" + alternatives_[i] + ", " +
                                      attributes_[j] + ") lies outside [0, 1]");
            }
            col_max_hi = std::max(col_max_hi, c.hi);
        }
        if (std::fabs(col_max_hi - 1.0) > 1e-6) {
            throw ValidationError("comparability column '" + attributes_[j] +
                                  "' never attains 1 (max hi = " + std::to_string(col_max_hi) + ")");
        }
    }
}

std::vector<Interval> normalize(std::span<const Interval> column,
                                const AttributeSpec& spec) {
    if (column.empty()) {
        throw ValidationError("attribute '" + spec.name + "': empty column");
    }
    std::vector<Interval> out;
    out.reserve(column.size());
    if (spec.orientation == Orientation::desirable) {
        double max_hi = -std::numeric_limits<double>::infinity();
        for (const Interval& c : column) {
            if (c.lo < 0.0) {
                throw ValidationError("attribute '" + spec.name +
                                      "': desirable values must be non-negative");
            }
            max_hi = std::max(max_hi, c.hi);
        }
        if (!(max_hi > 0.0)) {
            throw ValidationError("attribute '" + spec.name +
                                  "': desirable column max is not positive, cannot normalize");
        }
        for (const Interval& c : column) {
            out.emplace_back(c.lo / max_hi, c.hi / max_hi);
        }
    } else {
        double min_lo = std::numeric_limits<double>::infinity();
        for (const Interval& c : column) {
            if (!(c.lo > 0.0)) {
                throw ValidationError("attribute '" + spec.name +
                                      "': undesirable values must be strictly positive");
            }
            min_lo = std::min(min_lo, c.lo);
        }
        // Reciprocation reverses interval order, hence the endpoint swap.
        for (const Interval& c : column) {
            out.emplace_back(min_lo / c.hi, min_lo / c.lo);
        }
    }
    return out;
}

ComparabilityMatrix build_comparability(std::vector<std::string> alternatives,
                                        const std::vector<AttributeSpec>& attributes,
                                        const std::vector<Interval>& cells) {
    const std::size_t m = alternatives.size();
    const std::size_t n = attributes.size();
    if (cells.size() != m * n) {
        throw ValidationError("raw cell count " + std::to_string(cells.size()) +
                              " does not match " + std::to_string(m) + "x" + std::to_string(n));
    }
    std::vector<Interval> normalized(cells.size());
    std::vector<Interval> column(m);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) column[i] = cells[i * n + j];
        std::vector<Interval> scaled = normalize(column, attributes[j]);
        for (std::size_t i = 0; i < m; ++i) normalized[i * n + j] = scaled[i];
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (const AttributeSpec& a : attributes) names.push_back(a.name);
    return ComparabilityMatrix(std::move(alternatives), std::move(names), std::move(normalized));
}

ReferenceSequence reference_sequence(const ComparabilityMatrix& cm) {
    const std::size_t m = cm.alternative_count();
    const std::size_t n = cm.attribute_count();
    if (m == 0) {
        throw ValidationError("reference sequence of an empty matrix");
    }
    std::vector<Interval> ideal;
    ideal.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        double lo = -std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            lo = std::max(lo, cm.at(i, j).lo);
            hi = std::max(hi, cm.at(i, j).hi);
        }
        ideal.emplace_back(lo, hi);
    }
    return {std::move(ideal)};
}

CoefficientMatrix grey_coefficients(const ComparabilityMatrix& cm,
                                    const ReferenceSequence& ref, double rho) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw ValidationError("distinguishing coefficient rho must lie in [0, 1], got " +
                              std::to_string(rho));
    }
    const std::size_t m = cm.alternative_count();
    const std::size_t n = cm.attribute_count();
    if (ref.ideal.size() != n) {
        throw ValidationError("reference sequence length " + std::to_string(ref.ideal.size()) +
                              " does not match attribute count " + std::to_string(n));
    }
    std::vector<double> dist(m * n);
    double d_min = std::numeric_limits<double>::infinity();
    double d_max = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d = interval_distance(ref.ideal[j], cm.at(i, j));
            dist[i * n + j] = d;
            d_min = std::min(d_min, d);
            d_max = std::max(d_max, d);
        }
    }
    CoefficientMatrix out;
    out.alternatives = cm.alternatives();
    out.attributes = cm.attributes();
    out.rho = rho;
    out.distance_min = d_min;
    out.distance_max = d_max;
    out.values.resize(m * n);
    if (d_max == 0.0) {
        // Every cell coincides with the reference (for instance a lone
        // alternative). The coefficient ratio tends to 1 in that limit, but
        // rho = 0 leaves it a bare 0/0 with nothing to pin it down.
        if (rho == 0.0) {
            throw NumericError("degenerate data: every alternative coincides with the reference "
                               "and rho = 0; grey relational coefficients are undefined");
        }
        std::fill(out.values.begin(), out.values.end(), 1.0);
        return out;
    }
    const double numerator = d_min + rho * d_max;
    for (std::size_t c = 0; c < m * n; ++c) {
        const double denom = dist[c] + rho * d_max;
        if (!(denom > 0.0)) {
            throw NumericError("degenerate data: rho = 0 while some cell coincides with the "
                               "reference; grey relational coefficients are undefined");
        }
        out.values[c] = numerator / denom;
    }
    return out;
}

double weighted_grade(std::span<const double> coefficients,
                      std::span<const double> weights) {
    if (coefficients.size() != weights.size()) {
        throw ValidationError("weighted grade: " + std::to_string(coefficients.size()) +
                              " coefficients vs " + std::to_string(weights.size()) + " weights");
    }
    double grade = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (weights[j] < 0.0) {
            throw ValidationError("weighted grade: negative weight at position " + std::to_string(j));
        }
        grade += weights[j] * coefficients[j];
    }
    return grade;
}

}  // namespace greyrank
