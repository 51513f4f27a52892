#include "greyrank/ahp.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "greyrank/errors.hpp"

namespace greyrank {

namespace {

constexpr double kReciprocityTolerance = 1e-9;  // relative
constexpr double kConvergenceTolerance = 1e-12;
constexpr int kMaxIterations = 10000;

}  // namespace

PairwiseMatrix::PairwiseMatrix(std::vector<std::string> labels,
                               std::vector<double> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
    const std::size_t n = labels_.size();
    if (n < 2) {
        throw ValidationError("pairwise matrix needs at least 2 attributes");
    }
    if (entries_.size() != n * n) {
        throw ValidationError("pairwise matrix entry count " + std::to_string(entries_.size()) +
                              " does not match " + std::to_string(n) + "x" + std::to_string(n));
    }
    for (std::size_t h = 0; h < n; ++h) {
        if (std::fabs(at(h, h) - 1.0) > kReciprocityTolerance) {
            throw ValidationError("pairwise matrix diagonal entry (" + labels_[h] + ", " +
                                  labels_[h] + ") must be 1");
        }
        for (std::size_t q = 0; q < n; ++q) {
            const double v = at(h, q);
            if (!(std::isfinite(v) && v > 0.0)) {
                throw ValidationError("pairwise matrix entry (" + labels_[h] + ", " + labels_[q] +
                                      ") must be a positive number");
            }
            if (std::fabs(at(q, h) * v - 1.0) > kReciprocityTolerance * std::max(1.0, v)) {
                throw ValidationError("pairwise matrix violates reciprocity at (" + labels_[h] +
                                      ", " + labels_[q] + "): " + std::to_string(v) + " vs " +
                                      std::to_string(at(q, h)));
            }
        }
    }
}

PriorityVector principal_eigenvector(const PairwiseMatrix& b) {
    const std::size_t n = b.size();
    std::vector<double> e(n, 1.0 / static_cast<double>(n));
    std::vector<double> be(n);
    bool converged = false;
    for (int iter = 0; iter < kMaxIterations && !converged; ++iter) {
        double sum = 0.0;
        for (std::size_t h = 0; h < n; ++h) {
            double acc = 0.0;
            for (std::size_t q = 0; q < n; ++q) acc += b.at(h, q) * e[q];
            be[h] = acc;
            sum += acc;
        }
        double delta = 0.0;
        for (std::size_t h = 0; h < n; ++h) {
            const double next = be[h] / sum;
            delta = std::max(delta, std::fabs(next - e[h]));
            e[h] = next;
        }
        converged = delta < kConvergenceTolerance;
    }
    if (!converged) {
        throw NumericError("power iteration failed to converge in " +
                           std::to_string(kMaxIterations) + " iterations");
    }
    // Rayleigh-style estimate of the dominant eigenvalue.
    double lambda = 0.0;
    for (std::size_t h = 0; h < n; ++h) {
        double acc = 0.0;
        for (std::size_t q = 0; q < n; ++q) acc += b.at(h, q) * e[q];
        lambda += acc / e[h];
    }
    lambda /= static_cast<double>(n);

    PriorityVector out;
    out.weights = std::move(e);
    out.lambda_max = lambda;
    out.consistency_ratio = consistency_ratio(lambda, n);
    return out;
}

double consistency_ratio(double lambda_max, std::size_t n) {
    // Saaty's published random consistency indices.
    static constexpr double kRandomIndex[11] = {0.0, 0.0, 0.0, 0.58, 0.90, 1.12,
                                                1.24, 1.32, 1.41, 1.45, 1.49};
    if (n > 10) {
        throw ValidationError("consistency ratio is tabulated only for N <= 10, got N = " +
                              std::to_string(n));
    }
    if (n <= 2) {
        return 0.0;  // 1x1 and 2x2 reciprocal matrices are always consistent
    }
    return (lambda_max - static_cast<double>(n)) /
           (static_cast<double>(n - 1) * kRandomIndex[n]);
}

}  // namespace greyrank
