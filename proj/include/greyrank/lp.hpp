#ifndef GREYRANK_LP_HPP
#define GREYRANK_LP_HPP

#include <cstddef>
#include <vector>

namespace greyrank {

enum class Sense { maximize, minimize };
enum class Relation { less_equal, equal, greater_equal };

struct Constraint {
    std::vector<double> coefficients;
    Relation relation = Relation::less_equal;
    double rhs = 0.0;
};

/// Per-variable domain: lower-bounded at `lower`, or free.
struct VariableBound {
    bool is_free = false;
    double lower = 0.0;

    static VariableBound at_least(double lower) { return {false, lower}; }
    static VariableBound unbounded() { return {true, 0.0}; }
};

struct LinearProgram {
    Sense sense = Sense::maximize;
    std::vector<double> objective;
    std::vector<Constraint> constraints;
    std::vector<VariableBound> bounds;  // empty means every variable >= 0

    void validate() const;  // rectangular rows, finite data
};

enum class LpStatus { optimal, infeasible, unbounded };

/// Optimal basis solution. Dual prices follow the usual sign convention:
/// for a maximization, duals are >= 0 on <= rows, <= 0 on >= rows and free
/// on equalities (mirrored for minimization), and satisfy
///   objective == duals . rhs + sum_j reduced_cost_j * lower_j
/// over the lower-bounded variables.
struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    double objective = 0.0;
    std::vector<double> variables;
    std::vector<double> duals;
};

/// Dense two-phase primal simplex with Bland's anti-cycling rule.
/// Free variables are split into positive difference pairs; lower bounds are
/// shifted out. Deterministic: identical inputs give identical bases.
/// Infeasible and unbounded problems are reported as statuses, not errors.
LpSolution solve(const LinearProgram& lp);

}  // namespace greyrank

#endif
