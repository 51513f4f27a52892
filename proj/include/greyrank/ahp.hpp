#ifndef GREYRANK_AHP_HPP
#define GREYRANK_AHP_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace greyrank {

/// Positive reciprocal pairwise comparison matrix: b_hh = 1, b_qh = 1/b_hq.
class PairwiseMatrix {
public:
    PairwiseMatrix(std::vector<std::string> labels, std::vector<double> entries);  // row-major

    std::size_t size() const { return labels_.size(); }
    double at(std::size_t h, std::size_t q) const { return entries_[h * size() + q]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<double>& entries() const { return entries_; }

private:
    std::vector<std::string> labels_;
    std::vector<double> entries_;
};

/// Normalized principal-eigenvector priorities plus the achieved dominant
/// eigenvalue and Saaty consistency ratio.
struct PriorityVector {
    std::vector<double> weights;  // all positive, sum to 1
    double lambda_max = 0.0;
    double consistency_ratio = 0.0;
};

/// Priority weights via power iteration on the comparison matrix.
/// Converges when successive sum-normalized iterates differ by < 1e-12 in
/// max norm (positive matrices converge by Perron-Frobenius); lambda_max is
/// the mean of the component ratios (Be)_j / e_j.
PriorityVector principal_eigenvector(const PairwiseMatrix& b);

/// Saaty consistency ratio (lambda_max - N) / ((N - 1) * R.I.(N)) with the
/// standard random-index table for N in [3, 10]; N <= 2 is always consistent
/// and returns 0.
double consistency_ratio(double lambda_max, std::size_t n);

}  // namespace greyrank

#endif
