#include "greyrank/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "greyrank/errors.hpp"

namespace greyrank {

namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kFeasTolerance = 1e-7;
constexpr long kMaxPivots = 100000;  // Bland's rule terminates well before this

// Simplex working state over the standard-form problem
//   max c.u  s.t.  T u = rhs,  u >= 0,
// with one artificial column per row appended after the structural columns.
struct Tableau {
    std::size_t rows = 0;
    std::size_t cols = 0;       // structural columns (shifted/split + slacks)
    std::size_t total = 0;      // cols + rows artificials
    std::vector<double> t;      // rows x (total + 1), last column = rhs
    std::vector<std::size_t> basis;

    double& at(std::size_t i, std::size_t j) { return t[i * (total + 1) + j]; }
    double at(std::size_t i, std::size_t j) const { return t[i * (total + 1) + j]; }
    double& rhs(std::size_t i) { return at(i, total); }
    double rhs(std::size_t i) const { return at(i, total); }

    void pivot(std::size_t pr, std::size_t pc) {
        const double inv = 1.0 / at(pr, pc);
        for (std::size_t j = 0; j <= total; ++j) at(pr, j) *= inv;
        at(pr, pc) = 1.0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr) continue;
            const double factor = at(i, pc);
            if (factor == 0.0) continue;
            for (std::size_t j = 0; j <= total; ++j) at(i, j) -= factor * at(pr, j);
            at(i, pc) = 0.0;
        }
        basis[pr] = pc;
    }

    double reduced_cost(const std::vector<double>& cost, std::size_t j) const {
        double z = 0.0;
        for (std::size_t i = 0; i < rows; ++i) z += cost[basis[i]] * at(i, j);
        return cost[j] - z;
    }

    // Maximize cost.u, pricing only columns below `priceable`. Bland's rule:
    // lowest-index improving column enters; on ratio ties the row whose basic
    // variable has the lowest index leaves.
    LpStatus run(const std::vector<double>& cost, std::size_t priceable) {
        for (long k = 0; k < kMaxPivots; ++k) {
            std::size_t enter = total;
            for (std::size_t j = 0; j < priceable; ++j) {
                if (reduced_cost(cost, j) > kPivotTolerance) {
                    enter = j;
                    break;
                }
            }
            if (enter == total) return LpStatus::optimal;

            std::size_t leave = rows;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < rows; ++i) {
                if (at(i, enter) > kPivotTolerance) {
                    const double ratio = rhs(i) / at(i, enter);
                    if (leave == rows || ratio < best_ratio - kPivotTolerance ||
                        (ratio < best_ratio + kPivotTolerance && basis[i] < basis[leave])) {
                        best_ratio = ratio;
                        leave = i;
                    }
                }
            }
            if (leave == rows) return LpStatus::unbounded;
            pivot(leave, enter);
        }
        throw NumericError("simplex exceeded the pivot limit");
    }
};

}  // namespace

void LinearProgram::validate() const {
    const std::size_t n = objective.size();
    if (n == 0) {
        throw ValidationError("linear program has no variables");
    }
    for (double v : objective) {
        if (!std::isfinite(v)) throw ValidationError("objective coefficient is not finite");
    }
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const Constraint& row = constraints[i];
        if (row.coefficients.size() != n) {
            throw ValidationError("constraint " + std::to_string(i) + " has " +
                                  std::to_string(row.coefficients.size()) +
                                  " coefficients, expected " + std::to_string(n));
        }
        for (double v : row.coefficients) {
            if (!std::isfinite(v)) {
                throw ValidationError("constraint " + std::to_string(i) +
                                      " has a non-finite coefficient");
            }
        }
        if (!std::isfinite(row.rhs)) {
            throw ValidationError("constraint " + std::to_string(i) + " has a non-finite rhs");
        }
    }
    if (!bounds.empty() && bounds.size() != n) {
        throw ValidationError("bound count " + std::to_string(bounds.size()) +
                              " does not match variable count " + std::to_string(n));
    }
    for (const VariableBound& b : bounds) {
        if (!b.is_free && !std::isfinite(b.lower)) {
            throw ValidationError("variable lower bound is not finite");
        }
    }
}

LpSolution solve(const LinearProgram& lp) {
    lp.validate();
    const std::size_t nvars = lp.objective.size();
    const std::size_t nrows = lp.constraints.size();
    const double sense_sign = lp.sense == Sense::minimize ? -1.0 : 1.0;

    std::vector<VariableBound> bounds = lp.bounds;
    if (bounds.empty()) bounds.resize(nvars);  // default: x >= 0

    // Column layout: one column per lower-bounded variable (shifted by its
    // bound), two per free variable (positive difference pair), then one
    // slack/surplus per inequality row, then the artificials.
    std::vector<std::size_t> first_col(nvars);
    std::size_t ncols = 0;
    for (std::size_t j = 0; j < nvars; ++j) {
        first_col[j] = ncols;
        ncols += bounds[j].is_free ? 2 : 1;
    }
    const std::size_t slack_base = ncols;
    for (const Constraint& row : lp.constraints) {
        if (row.relation != Relation::equal) ++ncols;
    }

    Tableau tab;
    tab.rows = nrows;
    tab.cols = ncols;
    tab.total = ncols + nrows;
    tab.t.assign(nrows * (tab.total + 1), 0.0);
    tab.basis.resize(nrows);

    std::vector<double> cost(tab.total, 0.0);  // internal maximization objective
    double objective_shift = 0.0;
    for (std::size_t j = 0; j < nvars; ++j) {
        const double cj = sense_sign * lp.objective[j];
        cost[first_col[j]] = cj;
        if (bounds[j].is_free) {
            cost[first_col[j] + 1] = -cj;
        } else {
            objective_shift += cj * bounds[j].lower;
        }
    }

    std::vector<double> row_sign(nrows, 1.0);
    std::size_t next_slack = slack_base;
    for (std::size_t i = 0; i < nrows; ++i) {
        const Constraint& row = lp.constraints[i];
        double rhs = row.rhs;
        for (std::size_t j = 0; j < nvars; ++j) {
            const double a = row.coefficients[j];
            tab.at(i, first_col[j]) = a;
            if (bounds[j].is_free) {
                tab.at(i, first_col[j] + 1) = -a;
            } else {
                rhs -= a * bounds[j].lower;
            }
        }
        if (row.relation == Relation::less_equal) {
            tab.at(i, next_slack++) = 1.0;
        } else if (row.relation == Relation::greater_equal) {
            tab.at(i, next_slack++) = -1.0;
        }
        if (rhs < 0.0) {
            row_sign[i] = -1.0;
            for (std::size_t j = 0; j < ncols; ++j) tab.at(i, j) = -tab.at(i, j);
            rhs = -rhs;
        }
        tab.at(i, ncols + i) = 1.0;  // artificial
        tab.rhs(i) = rhs;
        tab.basis[i] = ncols + i;
    }

    LpSolution out;
    out.variables.assign(nvars, 0.0);
    out.duals.assign(nrows, 0.0);

    // Phase 1: drive the artificials to zero.
    {
        std::vector<double> phase1(tab.total, 0.0);
        for (std::size_t i = 0; i < nrows; ++i) phase1[ncols + i] = -1.0;
        if (tab.run(phase1, ncols) != LpStatus::optimal) {
            throw NumericError("phase-1 simplex cannot be unbounded");
        }
        double infeasibility = 0.0;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (tab.basis[i] >= ncols) infeasibility += tab.rhs(i);
        }
        if (infeasibility > kFeasTolerance) {
            out.status = LpStatus::infeasible;
            return out;
        }
        // Pivot leftover artificials out at zero level; a row with no
        // structural pivot candidate is redundant and keeps its artificial.
        for (std::size_t i = 0; i < nrows; ++i) {
            if (tab.basis[i] < ncols) continue;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (std::fabs(tab.at(i, j)) > kPivotTolerance) {
                    tab.pivot(i, j);
                    break;
                }
            }
        }
    }

    // Phase 2: artificial columns stay in the tableau (their reduced costs
    // carry the dual prices) but are never priced for entry.
    if (tab.run(cost, ncols) == LpStatus::unbounded) {
        out.status = LpStatus::unbounded;
        return out;
    }

    out.status = LpStatus::optimal;

    std::vector<double> u(tab.total, 0.0);
    for (std::size_t i = 0; i < nrows; ++i) u[tab.basis[i]] = tab.rhs(i);
    for (std::size_t j = 0; j < nvars; ++j) {
        if (bounds[j].is_free) {
            out.variables[j] = u[first_col[j]] - u[first_col[j] + 1];
        } else {
            out.variables[j] = bounds[j].lower + u[first_col[j]];
        }
    }
    double internal_obj = objective_shift;
    for (std::size_t j = 0; j < ncols; ++j) internal_obj += cost[j] * u[j];
    out.objective = sense_sign * internal_obj;

    // Dual of row i = value of the basic costs through the artificial column
    // of row i (its reduced cost is 0 - z), unflipped and mapped back through
    // the sense.
    for (std::size_t i = 0; i < nrows; ++i) {
        double z = 0.0;
        for (std::size_t r = 0; r < nrows; ++r) {
            z += cost[tab.basis[r]] * tab.at(r, ncols + i);
        }
        out.duals[i] = sense_sign * row_sign[i] * z;
    }
    return out;
}

}  // namespace greyrank
