#include "greyrank/dataset.hpp"

#include "greyrank/errors.hpp"

namespace greyrank {

CellKind cell_kind(const CellValue& v) {
    if (std::holds_alternative<double>(v)) return CellKind::crisp;
    if (std::holds_alternative<TrapezoidalFuzzy>(v)) return CellKind::trapezoid;
    return CellKind::interval;
}

const char* to_string(CellKind k) {
    switch (k) {
        case CellKind::crisp: return "crisp";
        case CellKind::trapezoid: return "trapezoid";
        default: return "interval";
    }
}

void Dataset::validate() const {
    const std::size_t m = alternatives.size();
    const std::size_t n = attributes.size();
    if (m == 0) throw ValidationError("dataset: no alternatives");
    if (n == 0) throw ValidationError("dataset: no attributes");
    if (cells.size() != m * n)
        throw ValidationError("dataset: expected " + std::to_string(m * n) +
                              " cells, got " + std::to_string(cells.size()));
    for (std::size_t i = 0; i < m; ++i)
        if (alternatives[i].empty())
            throw ValidationError("dataset: alternative " + std::to_string(i) +
                                  " has an empty label");
    for (std::size_t j = 0; j < n; ++j)
        if (attributes[j].name.empty())
            throw ValidationError("dataset: attribute " + std::to_string(j) +
                                  " has an empty name");
    for (std::size_t j = 0; j < n; ++j) {
        const CellKind expect = cell_kind(cell(0, j));
        for (std::size_t i = 1; i < m; ++i) {
            const CellKind got = cell_kind(cell(i, j));
            if (got != expect)
                throw ValidationError(
                    "dataset: cell (" + alternatives[i] + ", " + attributes[j].name +
                    ") is " + to_string(got) + " but column is " + to_string(expect));
        }
    }
}

Interval Dataset::cell_interval(std::size_t i, std::size_t j, double alpha) const {
    const CellValue& v = cell(i, j);
    if (const double* c = std::get_if<double>(&v))
        return alpha_cut(TrapezoidalFuzzy::crisp(*c), alpha);
    if (const TrapezoidalFuzzy* f = std::get_if<TrapezoidalFuzzy>(&v))
        return alpha_cut(*f, alpha);
    return std::get<Interval>(v);
}

}  // namespace greyrank
