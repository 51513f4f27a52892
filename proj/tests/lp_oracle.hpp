#ifndef GREYRANK_TESTS_LP_ORACLE_HPP
#define GREYRANK_TESTS_LP_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "greyrank/lp.hpp"

// Brute-force LP oracle for randomized cross-checks against the simplex
// solver. Instances carry small integer data only, so candidate vertices are
// rationals with int64-sized Cramer determinants: feasibility and optimality
// tests on the oracle side are exact, with no tolerance of their own.
//
// Unbounded directions are handled by boxing every variable into [-M, M] with
// M far beyond any true vertex coordinate (bounded by Hadamard's inequality
// at a few thousand here). A boxed optimum attained only on the box means the
// real problem is unbounded or flat in that direction.
namespace lporacle {

constexpr double kBox = 1e6;

struct OracleResult {
    bool feasible = false;
    bool box_limited = false;  // every optimal vertex lies on the artificial box
    double objective = 0.0;    // valid when feasible
};

struct BatteryStats {
    int instances = 0;
    int optimal = 0;     // finite optimum, objective and certificates agreed
    int infeasible = 0;  // both sides report infeasible
    int unbounded = 0;   // simplex unbounded, oracle optimum pinned to the box
    int skipped = 0;     // simplex solution escaped the box (not expected)
    int mismatches = 0;
    double max_objective_error = 0.0;
    double max_certificate_violation = 0.0;
};

namespace detail {

inline std::int64_t to_int(double v) {
    const double r = std::nearbyint(v);
    if (std::fabs(v - r) > 1e-9 || std::fabs(r) > 1e15) {
        throw std::invalid_argument("oracle requires integer data");
    }
    return static_cast<std::int64_t>(r);
}

// Laplace expansion; n <= 4 and small entries keep every term well inside
// int64 range.
inline std::int64_t det(const std::vector<std::int64_t>& a, std::size_t n) {
    if (n == 1) return a[0];
    std::int64_t acc = 0;
    std::vector<std::int64_t> minor((n - 1) * (n - 1));
    for (std::size_t c = 0; c < n; ++c) {
        if (a[c] == 0) continue;
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t w = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == c) continue;
                minor[(r - 1) * (n - 1) + w] = a[r * n + k];
                ++w;
            }
        }
        const std::int64_t cof = a[c] * det(minor, n - 1);
        acc += (c % 2 == 0) ? cof : -cof;
    }
    return acc;
}

struct Plane {
    std::vector<std::int64_t> coeff;
    std::int64_t rhs = 0;
    greyrank::Relation rel = greyrank::Relation::less_equal;
    bool box = false;
};

}  // namespace detail

inline OracleResult enumerate_vertices(const greyrank::LinearProgram& lp) {
    using detail::Plane;
    const std::size_t n = lp.objective.size();

    std::vector<Plane> planes;
    for (const auto& row : lp.constraints) {
        Plane p;
        p.coeff.resize(n);
        for (std::size_t j = 0; j < n; ++j) p.coeff[j] = detail::to_int(row.coefficients[j]);
        p.rhs = detail::to_int(row.rhs);
        p.rel = row.relation;
        planes.push_back(std::move(p));
    }
    const auto box_rhs = static_cast<std::int64_t>(kBox);
    for (std::size_t j = 0; j < n; ++j) {
        const bool free_var = !lp.bounds.empty() && lp.bounds[j].is_free;
        Plane p;
        p.coeff.assign(n, 0);
        p.coeff[j] = 1;
        if (!free_var) {
            p.rhs = lp.bounds.empty() ? 0 : detail::to_int(lp.bounds[j].lower);
            p.rel = greyrank::Relation::greater_equal;
            planes.push_back(p);
        }
        p.box = true;
        p.rhs = box_rhs;
        p.rel = greyrank::Relation::less_equal;
        planes.push_back(p);
        p.rhs = -box_rhs;
        p.rel = greyrank::Relation::greater_equal;
        planes.push_back(p);
    }

    std::vector<std::int64_t> obj(n);
    for (std::size_t j = 0; j < n; ++j) obj[j] = detail::to_int(lp.objective[j]);
    const std::int64_t dir = (lp.sense == greyrank::Sense::maximize) ? 1 : -1;

    OracleResult out;
    std::int64_t best_num = 0;   // best score = dir * objective, as best_num / best_den
    std::int64_t best_den = 1;
    bool best_off_box = false;

    std::vector<std::int64_t> a(n * n);
    std::vector<std::int64_t> numer(n);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    const std::size_t count = planes.size();
    while (true) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) a[r * n + c] = planes[idx[r]].coeff[c];
        }
        std::int64_t den = detail::det(a, n);
        if (den != 0) {
            // Cramer columns give the exact vertex numer / den.
            std::vector<std::int64_t> work(a);
            for (std::size_t c = 0; c < n; ++c) {
                for (std::size_t r = 0; r < n; ++r) work[r * n + c] = planes[idx[r]].rhs;
                numer[c] = detail::det(work, n);
                for (std::size_t r = 0; r < n; ++r) work[r * n + c] = a[r * n + c];
            }
            if (den < 0) {
                den = -den;
                for (auto& v : numer) v = -v;
            }
            bool ok = true;
            for (const Plane& p : planes) {
                std::int64_t lhs = 0;
                for (std::size_t j = 0; j < n; ++j) lhs += p.coeff[j] * numer[j];
                const std::int64_t gap = lhs - p.rhs * den;  // sign of (a.x - b)
                if ((p.rel == greyrank::Relation::less_equal && gap > 0) ||
                    (p.rel == greyrank::Relation::greater_equal && gap < 0) ||
                    (p.rel == greyrank::Relation::equal && gap != 0)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                bool off_box = true;
                for (std::size_t r = 0; r < n; ++r) off_box = off_box && !planes[idx[r]].box;
                std::int64_t score = 0;
                for (std::size_t j = 0; j < n; ++j) score += dir * obj[j] * numer[j];
                // score/den vs best_num/best_den, both denominators positive
                const std::int64_t cross = score * best_den - best_num * den;
                if (!out.feasible || cross > 0) {
                    best_num = score;
                    best_den = den;
                    best_off_box = off_box;
                } else if (cross == 0) {
                    best_off_box = best_off_box || off_box;
                }
                out.feasible = true;
            }
        }
        std::size_t t = n;
        while (t > 0 && idx[t - 1] == count - n + t - 1) --t;
        if (t == 0) break;
        ++idx[t - 1];
        for (std::size_t k = t; k < n; ++k) idx[k] = idx[k - 1] + 1;
    }
    if (out.feasible) {
        out.box_limited = !best_off_box;
        out.objective = static_cast<double>(dir) * static_cast<double>(best_num) /
                        static_cast<double>(best_den);
    }
    return out;
}

inline greyrank::LinearProgram random_program(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> var_count(1, 4);
    std::uniform_int_distribution<int> row_count(0, 4);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> rhs(-5, 8);
    std::uniform_int_distribution<int> lower(-3, 3);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> pct(0, 99);
    constexpr greyrank::Relation kRelations[3] = {greyrank::Relation::less_equal,
                                                  greyrank::Relation::equal,
                                                  greyrank::Relation::greater_equal};

    greyrank::LinearProgram lp;
    const int n = var_count(rng);
    lp.sense = pct(rng) < 50 ? greyrank::Sense::maximize : greyrank::Sense::minimize;
    lp.objective.resize(static_cast<std::size_t>(n));
    for (auto& c : lp.objective) c = coeff(rng);
    const int m = row_count(rng);
    for (int i = 0; i < m; ++i) {
        greyrank::Constraint row;
        row.coefficients.resize(static_cast<std::size_t>(n));
        for (auto& c : row.coefficients) c = coeff(rng);
        row.relation = kRelations[pick(rng)];
        row.rhs = rhs(rng);
        lp.constraints.push_back(std::move(row));
    }
    if (pct(rng) >= 30) {  // otherwise leave bounds empty for the default x >= 0
        for (int j = 0; j < n; ++j) {
            if (pct(rng) < 25) {
                lp.bounds.push_back(greyrank::VariableBound::unbounded());
            } else {
                lp.bounds.push_back(greyrank::VariableBound::at_least(lower(rng)));
            }
        }
    }
    return lp;
}

// Largest violation across primal feasibility, dual sign conventions, reduced
// cost signs, complementary slackness and the strong duality identity. Zero
// up to roundoff at a genuine optimum.
inline double certificate_violation(const greyrank::LinearProgram& lp,
                                    const greyrank::LpSolution& sol) {
    using greyrank::Relation;
    const std::size_t n = lp.objective.size();
    const std::size_t m = lp.constraints.size();
    const double sgn = (lp.sense == greyrank::Sense::maximize) ? 1.0 : -1.0;
    double worst = 0.0;
    const auto note = [&worst](double v) { worst = std::max(worst, v); };

    double dual_value = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = lp.constraints[i];
        double lhs = 0.0;
        for (std::size_t j = 0; j < n; ++j) lhs += row.coefficients[j] * sol.variables[j];
        const double slack = row.rhs - lhs;
        const double scale = std::max(1.0, std::fabs(row.rhs));
        const double y = sol.duals[i];
        if (row.relation == Relation::less_equal) {
            note(-slack / scale);
            note(-sgn * y);
        } else if (row.relation == Relation::greater_equal) {
            note(slack / scale);
            note(sgn * y);
        } else {
            note(std::fabs(slack) / scale);
        }
        if (row.relation != Relation::equal) note(std::fabs(y * slack) / scale);
        dual_value += y * row.rhs;
    }
    for (std::size_t j = 0; j < n; ++j) {
        double priced = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            priced += sol.duals[i] * lp.constraints[i].coefficients[j];
        }
        const double reduced = lp.objective[j] - priced;
        if (!lp.bounds.empty() && lp.bounds[j].is_free) {
            note(std::fabs(reduced));
            continue;
        }
        const double lo = lp.bounds.empty() ? 0.0 : lp.bounds[j].lower;
        note(lo - sol.variables[j]);
        note(sgn * reduced);
        note(std::fabs(reduced * (sol.variables[j] - lo)));
        dual_value += reduced * lo;
    }
    note(std::fabs(sol.objective - dual_value) / std::max(1.0, std::fabs(sol.objective)));
    return worst;
}

inline BatteryStats run_battery(std::uint64_t seed, int instances) {
    std::mt19937_64 rng(seed);
    BatteryStats stats;
    for (int k = 0; k < instances; ++k) {
        const greyrank::LinearProgram lp = random_program(rng);
        const OracleResult oracle = enumerate_vertices(lp);
        const greyrank::LpSolution sol = greyrank::solve(lp);
        ++stats.instances;
        bool bad = false;
        switch (sol.status) {
            case greyrank::LpStatus::infeasible:
                bad = oracle.feasible;
                if (!bad) ++stats.infeasible;
                break;
            case greyrank::LpStatus::unbounded:
                bad = !oracle.feasible || !oracle.box_limited;
                if (!bad) ++stats.unbounded;
                break;
            case greyrank::LpStatus::optimal: {
                if (!oracle.feasible) {
                    bad = true;
                    break;
                }
                double span = 0.0;
                for (double v : sol.variables) span = std::max(span, std::fabs(v));
                if (span > kBox / 2) {
                    ++stats.skipped;  // cannot compare against the boxed optimum
                    break;
                }
                // The boxed optimum equals the true one whenever the solver's
                // point sits inside the box, so compare unconditionally.
                const double err = std::fabs(sol.objective - oracle.objective) /
                                   std::max(1.0, std::fabs(oracle.objective));
                const double cert = certificate_violation(lp, sol);
                stats.max_objective_error = std::max(stats.max_objective_error, err);
                stats.max_certificate_violation = std::max(stats.max_certificate_violation, cert);
                bad = err > 1e-8 || cert > 1e-7;
                if (!bad) ++stats.optimal;
                break;
            }
        }
        if (bad) ++stats.mismatches;
    }
    return stats;
}

}  // namespace lporacle

#endif
