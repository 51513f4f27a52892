#ifndef GREYRANK_GRA_HPP
#define GREYRANK_GRA_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "greyrank/fuzzy.hpp"

namespace greyrank {

enum class Orientation { desirable, undesirable };

struct AttributeSpec {
    std::string name;
    Orientation orientation = Orientation::desirable;
};

/// m alternatives x n attributes of normalized intervals, every entry within
/// [0, 1] and every column attaining hi = 1 somewhere (the best attainment).
class ComparabilityMatrix {
public:
    ComparabilityMatrix() = default;
    ComparabilityMatrix(std::vector<std::string> alternatives,
                        std::vector<std::string> attributes,
                        std::vector<Interval> cells);  // row-major

    std::size_t alternative_count() const { return alternatives_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }
    const Interval& at(std::size_t i, std::size_t j) const {
        return cells_[i * attributes_.size() + j];
    }
    const std::vector<std::string>& alternatives() const { return alternatives_; }
    const std::vector<std::string>& attributes() const { return attributes_; }
    const std::vector<Interval>& cells() const { return cells_; }

private:
    std::vector<std::string> alternatives_;
    std::vector<std::string> attributes_;
    std::vector<Interval> cells_;
};

/// Per-attribute interval of the virtual ideal alternative: column-wise
/// maxima of lower and upper endpoints.
struct ReferenceSequence {
    std::vector<Interval> ideal;
};

/// Grey relational coefficients xi_ij in (0, 1], plus the distinguishing
/// coefficient and the global distance extremes that produced them.
struct CoefficientMatrix {
    std::vector<std::string> alternatives;
    std::vector<std::string> attributes;
    std::vector<double> values;  // row-major
    double rho = 0.5;
    double distance_min = 0.0;
    double distance_max = 0.0;

    std::size_t alternative_count() const { return alternatives.size(); }
    std::size_t attribute_count() const { return attributes.size(); }
    double at(std::size_t i, std::size_t j) const {
        return values[i * attributes.size() + j];
    }
    std::span<const double> row(std::size_t i) const {
        return {values.data() + i * attributes.size(), attributes.size()};
    }
};

/// Rescale one attribute column onto [0, 1].
/// Desirable: divide both endpoints by the column max of hi.
/// Undesirable: reciprocal ratio against the column min of lo; endpoints swap
/// so the result stays ordered: [min_lo / hi, min_lo / lo].
std::vector<Interval> normalize(std::span<const Interval> column,
                                const AttributeSpec& spec);

/// Normalize every column and assemble the comparability matrix.
ComparabilityMatrix build_comparability(std::vector<std::string> alternatives,
                                        const std::vector<AttributeSpec>& attributes,
                                        const std::vector<Interval>& cells);

ReferenceSequence reference_sequence(const ComparabilityMatrix& cm);

/// xi_ij = (d_min + rho * d_max) / (d_ij + rho * d_max), where d_ij is the
/// interval distance of cell (i, j) to the reference and d_min/d_max are the
/// global extremes over all cells.
CoefficientMatrix grey_coefficients(const ComparabilityMatrix& cm,
                                    const ReferenceSequence& ref, double rho);

/// Fixed-weight grey relational grade: dot product of one coefficient row
/// with non-negative attribute weights.
double weighted_grade(std::span<const double> coefficients,
                      std::span<const double> weights);

}  // namespace greyrank

#endif
