#ifndef GREYRANK_TESTS_SUPPORT_HPP
#define GREYRANK_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "greyrank/ahp.hpp"
#include "greyrank/dataset.hpp"
#include "greyrank/dea.hpp"
#include "greyrank/gra.hpp"
#include "greyrank/io.hpp"

namespace testsupport {

using namespace greyrank;

inline const char* kSites[12] = {"Nome",    "Newark", "Rock Springs", "Duquesne",
                                 "Gary",    "Yakima", "Turkey",       "Wells",
                                 "Anaheim", "Epcot",  "Duckwater",    "Santa Cruz"};

// Published grey relational coefficients at rho = 0.8, columns
// Cost, Lives lost, Risk, Civic.
inline const double kCoefficients[12][4] = {
    {0.9383, 0.6281, 0.4578, 0.4872}, {0.4444, 0.4444, 1.0000, 1.0000},
    {0.8352, 0.8352, 0.7917, 0.7917}, {0.6847, 0.8352, 0.6032, 0.6032},
    {0.6281, 0.5033, 0.7917, 1.0000}, {0.6847, 0.5033, 0.4872, 0.6032},
    {0.8837, 0.5390, 0.4872, 0.7917}, {0.9383, 1.0000, 0.6032, 0.6032},
    {0.4720, 0.4578, 0.4578, 0.4578}, {0.5033, 0.4720, 1.0000, 0.4578},
    {0.5802, 0.5390, 0.6032, 0.4872}, {0.5033, 0.5033, 0.4578, 0.4578}};

struct GoldenGrade {
    double optimistic;
    double pessimistic;
    double compromise;
    int rank;
};

// Published grades under judgment-bounded weights, beta = 0.5.
inline const GoldenGrade kBoundedGrades[12] = {
    {0.7515, 1.1554, 0.3848, 8}, {1.0000, 1.0000, 0.5000, 7},
    {1.0000, 1.3618, 0.9480, 2}, {0.8770, 1.2808, 0.6954, 5},
    {1.0000, 1.1642, 0.7033, 3}, {0.6642, 1.0680, 0.1684, 10},
    {1.0000, 1.1230, 0.6523, 6}, {1.0000, 1.4038, 1.0000, 1},
    {0.5962, 1.0000, 0.0000, 12}, {1.0000, 1.1609, 0.6992, 4},
    {0.6960, 1.0999, 0.2474, 9}, {0.6251, 1.0289, 0.0716, 11}};

// Published grades under the unbounded constant-returns variant, beta = 0.5.
inline const GoldenGrade kCrsGrades[12] = {
    {1.0000, 1.0000, 0.5000, 6}, {1.0000, 1.0000, 0.5000, 6},
    {1.0000, 1.7294, 1.0000, 1}, {0.8921, 1.3176, 0.5912, 3},
    {1.0000, 1.1146, 0.5785, 4}, {0.7855, 1.0642, 0.2926, 7},
    {1.0000, 1.0642, 0.5440, 5}, {1.0000, 1.3176, 0.7177, 2},
    {0.5735, 1.0000, 0.0000, 10}, {1.0000, 1.0000, 0.5000, 6},
    {0.7351, 1.0642, 0.2335, 8}, {0.5943, 1.0000, 0.0244, 9}};

inline const double kPublishedPriorities[4] = {0.131, 0.545, 0.275, 0.05};

inline Dataset nuclear_dataset() { return load_dataset("table2-intervals"); }

inline PairwiseMatrix judgment_matrix() { return load_pairwise("table3-ahp"); }

inline CoefficientMatrix nuclear_coefficients(double rho = 0.8, double alpha = 0.5) {
    const Dataset ds = nuclear_dataset();
    const std::size_t m = ds.alternative_count();
    const std::size_t n = ds.attribute_count();
    std::vector<Interval> raw;
    raw.reserve(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) raw.push_back(ds.cell_interval(i, j, alpha));
    const ComparabilityMatrix cm = build_comparability(ds.alternatives, ds.attributes, raw);
    return grey_coefficients(cm, reference_sequence(cm), rho);
}

inline CoefficientMatrix random_coefficients(std::mt19937_64& rng, std::size_t m,
                                             std::size_t n) {
    CoefficientMatrix xi;
    for (std::size_t i = 0; i < m; ++i) xi.alternatives.push_back("a" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) xi.attributes.push_back("c" + std::to_string(j));
    std::uniform_real_distribution<double> value(0.05, 1.0);
    xi.values.resize(m * n);
    for (double& v : xi.values) v = value(rng);
    xi.rho = 0.5;
    xi.distance_min = 0.0;
    xi.distance_max = 1.0;
    return xi;
}

inline std::vector<double> random_weights(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> value(0.1, 1.0);
    std::vector<double> w(n);
    double sum = 0.0;
    for (double& v : w) {
        v = value(rng);
        sum += v;
    }
    for (double& v : w) v /= sum;
    return w;
}

struct DeaSuiteStats {
    int instances = 0;
    int checked = 0;     // alternative-level evaluations
    int violations = 0;  // instances with any failed invariant
    double max_duality_gap = 0.0;
};

/// Randomized grade invariants under both variants: bounds, one grade of 1 on
/// each frontier, weight floors, and multiplier/envelopment duality.
inline DeaSuiteStats dea_duality_suite(std::uint64_t seed, int instances) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> alt_count(3, 10);
    std::uniform_int_distribution<std::size_t> attr_count(2, 5);
    DeaSuiteStats stats;
    for (int t = 0; t < instances; ++t) {
        const std::size_t m = alt_count(rng);
        const std::size_t n = attr_count(rng);
        const CoefficientMatrix xi = random_coefficients(rng, m, n);
        const std::vector<double> e = random_weights(rng, n);
        DeaConfig vrs;
        vrs.weight_bounds = e;
        DeaConfig crs;
        crs.variant = DeaVariant::crs_unbounded;

        ++stats.instances;
        bool ok = true;
        double vrs_best = 0.0, crs_best = 0.0;
        double vrs_worst = std::numeric_limits<double>::infinity();
        double crs_worst = vrs_worst;
        for (std::size_t k = 0; k < m; ++k) {
            const MultiplierResult opt = optimistic_grade(xi, k, vrs);
            const MultiplierResult pes = pessimistic_grade(xi, k, vrs);
            const EnvelopmentResult below = optimistic_slacks(xi, k, e);
            const EnvelopmentResult above = pessimistic_slacks(xi, k, e);
            ++stats.checked;
            ok = ok && opt.grade > 0.0 && opt.grade <= 1.0 + 1e-9;
            ok = ok && pes.grade >= 1.0 - 1e-9;
            const double gap = std::max(std::fabs(opt.grade - (1.0 - below.inefficiency)),
                                        std::fabs(pes.grade - (1.0 + above.inefficiency)));
            stats.max_duality_gap = std::max(stats.max_duality_gap, gap);
            ok = ok && gap <= 1e-6;
            for (std::size_t j = 0; j < n; ++j) ok = ok && opt.weights[j] >= e[j] - 1e-9;
            vrs_best = std::max(vrs_best, opt.grade);
            vrs_worst = std::min(vrs_worst, pes.grade);

            const MultiplierResult copt = optimistic_grade(xi, k, crs);
            const MultiplierResult cpes = pessimistic_grade(xi, k, crs);
            ok = ok && copt.grade > 0.0 && copt.grade <= 1.0 + 1e-9;
            ok = ok && cpes.grade >= 1.0 - 1e-9;
            crs_best = std::max(crs_best, copt.grade);
            crs_worst = std::min(crs_worst, cpes.grade);
        }
        ok = ok && vrs_best >= 1.0 - 1e-6 && crs_best >= 1.0 - 1e-6;
        ok = ok && vrs_worst <= 1.0 + 1e-6 && crs_worst <= 1.0 + 1e-6;
        if (!ok) ++stats.violations;
    }
    return stats;
}

struct PlantedStats {
    int instances = 0;
    int violations = 0;
    double max_deviation = 0.0;  // of the planted grade from 1
};

/// A row holding some column's maximum always grades 1 under crs_unbounded.
inline PlantedStats planted_crs_suite(std::uint64_t seed, int instances) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> alt_count(3, 10);
    std::uniform_int_distribution<std::size_t> attr_count(2, 5);
    DeaConfig crs;
    crs.variant = DeaVariant::crs_unbounded;
    PlantedStats stats;
    for (int t = 0; t < instances; ++t) {
        const std::size_t m = alt_count(rng);
        const std::size_t n = attr_count(rng);
        CoefficientMatrix xi = random_coefficients(rng, m, n);
        const std::size_t k = rng() % m;
        for (std::size_t i = 0; i < m; ++i)
            xi.values[i * n] = std::min(xi.values[i * n], 0.99);
        xi.values[k * n] = 1.0;
        const double grade = optimistic_grade(xi, k, crs).grade;
        ++stats.instances;
        const double dev = std::fabs(grade - 1.0);
        stats.max_deviation = std::max(stats.max_deviation, dev);
        if (dev > 1e-6) ++stats.violations;
    }
    return stats;
}

}  // namespace testsupport

#endif
