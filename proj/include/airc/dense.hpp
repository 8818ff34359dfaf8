#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "airc/error.hpp"

namespace airc {

using index_t = std::int64_t;

/// Row-major dense matrix of doubles. Rows are nodes wherever a matrix
/// carries node features (H^(0), H^(l), X).
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(index_t rows, index_t cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0.0) {}
    DenseMatrix(index_t rows, index_t cols, std::vector<double> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        require(static_cast<index_t>(data_.size()) == rows * cols, ErrorCode::dimension_mismatch,
                "data size does not match rows*cols");
    }

    index_t rows() const noexcept { return rows_; }
    index_t cols() const noexcept { return cols_; }
    index_t size() const noexcept { return rows_ * cols_; }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(index_t r, index_t c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    double operator()(index_t r, index_t c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

    double* data() noexcept { return data_.data(); }
    const double* data() const noexcept { return data_.data(); }
    std::span<double> row(index_t r) { return {data_.data() + r * cols_, static_cast<std::size_t>(cols_)}; }
    std::span<const double> row(index_t r) const {
        return {data_.data() + r * cols_, static_cast<std::size_t>(cols_)};
    }

    void fill(double value) { data_.assign(data_.size(), value); }

    bool operator==(const DenseMatrix& other) const = default;

private:
    index_t rows_ = 0;
    index_t cols_ = 0;
    std::vector<double> data_;
};

/// Node features are plain dense matrices; the alias marks intent.
using FeatureMatrix = DenseMatrix;

/// C = A * B with the k-accumulation in ascending order per output entry,
/// so results are bit-stable across runs and thread counts.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix transpose(const DenseMatrix& m);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scale(const DenseMatrix& m, double factor);

/// Scale row i of m by factors[i].
DenseMatrix row_scale(const DenseMatrix& m, std::span<const double> factors);

double frobenius_norm(const DenseMatrix& m);
double frobenius_inner(const DenseMatrix& a, const DenseMatrix& b);

bool all_finite(const DenseMatrix& m);
void require_finite(const DenseMatrix& m, const char* what);
void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* what);

DenseMatrix identity_matrix(index_t n);

}  // namespace airc
