#ifndef GREYRANK_DATASET_HPP
#define GREYRANK_DATASET_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "greyrank/fuzzy.hpp"
#include "greyrank/gra.hpp"

namespace greyrank {

/// A cell is a crisp number, a trapezoid quadruple, or a pre-cut interval.
/// Kinds may differ across attributes but must be uniform within a column;
/// pre-cut interval columns bypass the alpha-cut.
using CellValue = std::variant<double, TrapezoidalFuzzy, Interval>;

enum class CellKind { crisp, trapezoid, interval };

CellKind cell_kind(const CellValue& v);
const char* to_string(CellKind k);

struct Dataset {
    std::vector<std::string> alternatives;
    std::vector<AttributeSpec> attributes;
    std::vector<CellValue> cells;  // row-major, m x n
    std::string provenance;

    std::size_t alternative_count() const { return alternatives.size(); }
    std::size_t attribute_count() const { return attributes.size(); }
    const CellValue& cell(std::size_t i, std::size_t j) const {
        return cells[i * attributes.size() + j];
    }
    CellKind column_kind(std::size_t j) const { return cell_kind(cell(0, j)); }

    /// Shape and column-uniformity checks; names the offending cell.
    void validate() const;

    /// Interval view of a cell: crisp and trapezoid cells go through the
    /// alpha-cut, pre-cut intervals pass through verbatim.
    Interval cell_interval(std::size_t i, std::size_t j, double alpha) const;
};

}  // namespace greyrank

#endif
