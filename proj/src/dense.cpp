#include "airc/dense.hpp"

#include <cmath>

#include "airc/parallel.hpp"

namespace airc {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    require(a.cols() == b.rows(), ErrorCode::dimension_mismatch,
            "matmul: inner dimensions differ");
    DenseMatrix out(a.rows(), b.cols());
    const index_t inner = a.cols();
    const index_t cols = b.cols();
    parallel_for_rows(a.rows(), [&](index_t begin, index_t end) {
        for (index_t i = begin; i < end; ++i) {
            double* out_row = out.data() + i * cols;
            const double* a_row = a.data() + i * inner;
            for (index_t k = 0; k < inner; ++k) {
                const double aik = a_row[k];
                const double* b_row = b.data() + k * cols;
                for (index_t j = 0; j < cols; ++j) out_row[j] += aik * b_row[j];
            }
        }
    });
    return out;
}

DenseMatrix transpose(const DenseMatrix& m) {
    DenseMatrix out(m.cols(), m.rows());
    for (index_t i = 0; i < m.rows(); ++i)
        for (index_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b, "add");
    DenseMatrix out = a;
    for (index_t i = 0; i < out.size(); ++i) out.data()[i] += b.data()[i];
    return out;
}

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b, "subtract");
    DenseMatrix out = a;
    for (index_t i = 0; i < out.size(); ++i) out.data()[i] -= b.data()[i];
    return out;
}

DenseMatrix scale(const DenseMatrix& m, double factor) {
    DenseMatrix out = m;
    for (index_t i = 0; i < out.size(); ++i) out.data()[i] *= factor;
    return out;
}

DenseMatrix row_scale(const DenseMatrix& m, std::span<const double> factors) {
    require(static_cast<index_t>(factors.size()) == m.rows(), ErrorCode::dimension_mismatch,
            "row_scale: factor count != rows");
    DenseMatrix out = m;
    for (index_t i = 0; i < m.rows(); ++i) {
        const double f = factors[static_cast<std::size_t>(i)];
        double* row = out.data() + i * m.cols();
        for (index_t j = 0; j < m.cols(); ++j) row[j] *= f;
    }
    return out;
}

double frobenius_norm(const DenseMatrix& m) {
    double sum = 0.0;
    for (index_t i = 0; i < m.size(); ++i) sum += m.data()[i] * m.data()[i];
    return std::sqrt(sum);
}

double frobenius_inner(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b, "frobenius_inner");
    double sum = 0.0;
    for (index_t i = 0; i < a.size(); ++i) sum += a.data()[i] * b.data()[i];
    return sum;
}

bool all_finite(const DenseMatrix& m) {
    for (index_t i = 0; i < m.size(); ++i)
        if (!std::isfinite(m.data()[i])) return false;
    return true;
}

void require_finite(const DenseMatrix& m, const char* what) {
    require(all_finite(m), ErrorCode::non_finite_input, std::string(what) + ": non-finite entry");
}

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* what) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::dimension_mismatch,
            std::string(what) + ": shapes differ");
}

DenseMatrix identity_matrix(index_t n) {
    DenseMatrix out(n, n);
    for (index_t i = 0; i < n; ++i) out(i, i) = 1.0;
    return out;
}

}  // namespace airc
