#ifndef GREYRANK_DEA_HPP
#define GREYRANK_DEA_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "greyrank/ahp.hpp"
#include "greyrank/dataset.hpp"
#include "greyrank/gra.hpp"

namespace greyrank {

enum class DeaVariant { bounded_vrs, crs_unbounded };

const char* to_string(DeaVariant v);

/// Settings for one batch of grade evaluations.  Under bounded_vrs the
/// weight_bounds are the AHP priorities e_j (one per attribute, each > 0,
/// summing to 1 within 0.01 to admit published rounded vectors).  Under
/// crs_unbounded weight_bounds must be empty: the floors are zero and the
/// intercept variable is pinned to zero.
struct DeaConfig {
    DeaVariant variant = DeaVariant::bounded_vrs;
    std::vector<double> weight_bounds;
    double beta = 0.5;

    void validate(std::size_t attribute_count) const;
};

/// Outcome of one multiplier-side evaluation: the grade (objective value),
/// the achieved attribute weights, and the intercept (0 under crs_unbounded).
struct MultiplierResult {
    double grade = 0.0;
    std::vector<double> weights;
    double intercept = 0.0;
};

/// Outcome of one envelopment-side evaluation: the inefficiency, the
/// intensity vector over alternatives, and the per-attribute slacks.
struct EnvelopmentResult {
    double inefficiency = 0.0;
    std::vector<double> intensities;
    std::vector<double> slacks;
};

/// Best-case grade of alternative k: maximise its weighted coefficient sum
/// minus the intercept, subject to every alternative scoring at most 1.
MultiplierResult optimistic_grade(const CoefficientMatrix& xi, std::size_t k,
                                  const DeaConfig& cfg);

/// Worst-case grade of alternative k: minimise its weighted coefficient sum
/// plus the intercept, subject to every alternative scoring at least 1.
MultiplierResult pessimistic_grade(const CoefficientMatrix& xi, std::size_t k,
                                   const DeaConfig& cfg);

/// Envelopment duals of the two grade models, bounded_vrs only.  The
/// inefficiency P satisfies grade = 1 - P (optimistic) or grade = 1 + P
/// (pessimistic); slacks locate the attributes holding the grade back.
EnvelopmentResult optimistic_slacks(const CoefficientMatrix& xi, std::size_t k,
                                    std::span<const double> priorities);
EnvelopmentResult pessimistic_slacks(const CoefficientMatrix& xi, std::size_t k,
                                     std::span<const double> priorities);

/// Blend of min-max normalised optimistic and pessimistic grades with
/// weight beta on the optimistic side.  A grade column whose spread is
/// below 1e-12 contributes zero for every alternative.
std::vector<double> compromise(std::span<const double> optimistic,
                               std::span<const double> pessimistic, double beta);

/// Dense ranks, best score first.  Scores closer than tie_tolerance share a
/// rank and the next distinct score takes the next consecutive integer.
std::vector<int> rank_dense(std::span<const double> scores,
                            double tie_tolerance = 5e-5);

struct GradeRow {
    std::string alternative;
    MultiplierResult optimistic;
    MultiplierResult pessimistic;
    double compromise = 0.0;
    int rank = 0;
    std::optional<EnvelopmentResult> shortfall;  // optimistic side
    std::optional<EnvelopmentResult> excess;     // pessimistic side
};

struct GradeReport {
    std::vector<GradeRow> rows;
    ComparabilityMatrix comparability;
    ReferenceSequence reference;
    CoefficientMatrix coefficients;
    std::vector<double> priorities;  // empty when no pairwise matrix was given
    double lambda_max = 0.0;
    double consistency_ratio = 0.0;
    double alpha = 0.5;
    double rho = 0.5;
    double beta = 0.5;
    DeaVariant variant = DeaVariant::bounded_vrs;
    bool optimistic_degenerate = false;   // spread below 1e-12
    bool pessimistic_degenerate = false;
};

struct PipelineOptions {
    double alpha = 0.5;
    double rho = 0.5;
    double beta = 0.5;
    DeaVariant variant = DeaVariant::bounded_vrs;
    bool with_slacks = false;
    unsigned max_threads = 0;  // 0: GREYRANK_THREADS, then hardware count
};

/// Full chain: alpha-cut, normalise, reference, coefficients, priorities,
/// both grade models per alternative, compromise, rank.  bounded_vrs
/// requires a pairwise matrix; crs_unbounded ignores one for the weight
/// floors but still reports its priorities.  Grade evaluations run in
/// parallel across alternatives; results do not depend on thread count.
GradeReport full_pipeline(const Dataset& data,
                          const std::optional<PairwiseMatrix>& pairwise,
                          const PipelineOptions& options);

}  // namespace greyrank

#endif
