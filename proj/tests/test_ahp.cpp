#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "greyrank/ahp.hpp"
#include "greyrank/errors.hpp"
#include "support.hpp"

using namespace greyrank;
namespace ts = testsupport;

namespace {

PairwiseMatrix consistent_matrix(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::string> labels;
    std::vector<double> entries;
    for (std::size_t h = 0; h < n; ++h) labels.push_back("l" + std::to_string(h));
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t q = 0; q < n; ++q) entries.push_back(v[h] / v[q]);
    return PairwiseMatrix(labels, entries);
}

}  // namespace

TEST_CASE("pairwise matrix validation") {
    CHECK_THROWS_AS(PairwiseMatrix({"a"}, {1.0}), ValidationError);  // below 2x2
    CHECK_THROWS_AS(PairwiseMatrix({"a", "b"}, {1.0, 2.0, 0.4, 1.0}), ValidationError);
    CHECK_THROWS_AS(PairwiseMatrix({"a", "b"}, {1.0, -2.0, -0.5, 1.0}), ValidationError);
    CHECK_THROWS_AS(PairwiseMatrix({"a", "b"}, {2.0, 2.0, 0.5, 1.0}), ValidationError);
    CHECK_THROWS_AS(PairwiseMatrix({"a", "b"}, {1.0, 2.0, 0.5}), ValidationError);
    CHECK_NOTHROW(PairwiseMatrix({"a", "b"}, {1.0, 2.0, 0.5, 1.0}));
}

TEST_CASE("fixture matrix yields the published priorities") {
    const PairwiseMatrix b = ts::judgment_matrix();
    const PriorityVector pv = principal_eigenvector(b);
    REQUIRE(pv.weights.size() == 4);
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(std::fabs(pv.weights[j] - ts::kPublishedPriorities[j]) <= 1.5e-3);
    CHECK(std::fabs(pv.lambda_max - 4.0246941581) <= 1e-6);
    CHECK(pv.consistency_ratio >= 0.0);
    CHECK(pv.consistency_ratio <= 0.02);
    CHECK(std::fabs(pv.consistency_ratio - 0.009146) <= 1e-5);
    CHECK(std::fabs(std::accumulate(pv.weights.begin(), pv.weights.end(), 0.0) - 1.0) <=
          1e-12);
}

TEST_CASE("consistent matrices reproduce their generator") {
    const PriorityVector pv = principal_eigenvector(consistent_matrix({1, 2, 3, 4}));
    CHECK(pv.weights[0] == doctest::Approx(0.1).epsilon(1e-9));
    CHECK(pv.weights[1] == doctest::Approx(0.2).epsilon(1e-9));
    CHECK(pv.weights[2] == doctest::Approx(0.3).epsilon(1e-9));
    CHECK(pv.weights[3] == doctest::Approx(0.4).epsilon(1e-9));
    CHECK(std::fabs(pv.lambda_max - 4.0) <= 1e-9);
    CHECK(std::fabs(pv.consistency_ratio) <= 1e-9);
}

TEST_CASE("2x2 matrix has the closed-form priorities") {
    const PairwiseMatrix b({"a", "b"}, {1.0, 3.0, 1.0 / 3.0, 1.0});
    const PriorityVector pv = principal_eigenvector(b);
    CHECK(pv.weights[0] == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(pv.weights[1] == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(pv.consistency_ratio == 0.0);  // below 3 attributes the ratio is defined as 0
}

TEST_CASE("consistency ratio substitutes into the published constants") {
    CHECK(consistency_ratio(4.27, 4) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(consistency_ratio(4.0, 4) == 0.0);
    CHECK(consistency_ratio(2.0, 2) == 0.0);
    CHECK_THROWS_AS(consistency_ratio(12.0, 11), ValidationError);
}

TEST_CASE("priorities are invariant to scaling the consistent generator") {
    std::mt19937_64 rng(20240816);
    std::uniform_real_distribution<double> value(0.2, 5.0);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<double> v(4);
        for (double& x : v) x = value(rng);
        const double c = value(rng);
        std::vector<double> scaled = v;
        for (double& x : scaled) x *= c;
        const PriorityVector a = principal_eigenvector(consistent_matrix(v));
        const PriorityVector b = principal_eigenvector(consistent_matrix(scaled));
        for (std::size_t j = 0; j < v.size(); ++j)
            CHECK(std::fabs(a.weights[j] - b.weights[j]) <= 1e-10);
    }
}

TEST_CASE("lambda max is at least the size, with equality only when consistent") {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> value(0.2, 5.0);
    std::uniform_real_distribution<double> noise(0.5, 2.0);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = 3 + static_cast<std::size_t>(rng() % 5);
        std::vector<double> v(n);
        for (double& x : v) x = value(rng);
        std::vector<std::string> labels;
        for (std::size_t h = 0; h < n; ++h) labels.push_back("l" + std::to_string(h));
        std::vector<double> entries(n * n, 1.0);
        bool perturbed = false;
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t q = h + 1; q < n; ++q) {
                double e = v[h] / v[q];
                const double f = noise(rng);
                if (std::fabs(f - 1.0) > 0.05) perturbed = true;
                e *= f;
                entries[h * n + q] = e;
                entries[q * n + h] = 1.0 / e;
            }
        const PriorityVector pv = principal_eigenvector(PairwiseMatrix(labels, entries));
        CHECK(pv.lambda_max >= static_cast<double>(n) - 1e-9);
        if (perturbed && n >= 3) CHECK(pv.lambda_max > static_cast<double>(n));
    }
}

TEST_CASE("priorities follow row and column permutations") {
    std::mt19937_64 rng(20240818);
    std::uniform_real_distribution<double> value(0.2, 5.0);
    std::uniform_real_distribution<double> noise(0.8, 1.25);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = 4;
        std::vector<double> v(n);
        for (double& x : v) x = value(rng);
        std::vector<double> entries(n * n, 1.0);
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t q = h + 1; q < n; ++q) {
                const double e = v[h] / v[q] * noise(rng);
                entries[h * n + q] = e;
                entries[q * n + h] = 1.0 / e;
            }
        std::vector<std::string> labels{"a", "b", "c", "d"};
        const PairwiseMatrix b(labels, entries);
        const PriorityVector pb = principal_eigenvector(b);

        std::vector<std::size_t> perm{0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::string> plabels(n);
        std::vector<double> pentries(n * n);
        for (std::size_t h = 0; h < n; ++h) {
            plabels[h] = labels[perm[h]];
            for (std::size_t q = 0; q < n; ++q)
                pentries[h * n + q] = entries[perm[h] * n + perm[q]];
        }
        const PriorityVector pp = principal_eigenvector(PairwiseMatrix(plabels, pentries));
        for (std::size_t h = 0; h < n; ++h)
            CHECK(std::fabs(pp.weights[h] - pb.weights[perm[h]]) <= 1e-9);
    }
}
