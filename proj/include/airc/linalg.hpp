#pragma once

#include <vector>

#include "airc/dense.hpp"
#include "airc/graph.hpp"

namespace airc {

struct ResidualStrengths;

/// Thin SVD m = u * diag(singular_values) * v^T.
/// u is rows x k and v is cols x k with k = min(rows, cols); singular
/// values are sorted descending and columns for zero singular values are
/// completed orthonormally. Sign convention: the largest-magnitude entry
/// of each left singular vector is nonnegative.
struct SvdResult {
    DenseMatrix u;
    std::vector<double> singular_values;
    DenseMatrix v;
};

/// One-sided Jacobi SVD (60-sweep cap, relative off tolerance 1e-12).
SvdResult svd(const DenseMatrix& m);

/// Number of singular values above rel_tol * sigma_1; 0 for the zero matrix.
index_t numerical_rank(const DenseMatrix& m, double rel_tol = 1e-9);
index_t numerical_rank(const SvdResult& decomposition, double rel_tol = 1e-9);

/// sigma_r: smallest singular value above the rel_tol threshold.
double smallest_nonzero_singular(const DenseMatrix& m, double rel_tol = 1e-9);

/// Solve (I - Lambda*A) Y = (I - Lambda) H0 by fixed-point iteration
/// Y <- Lambda*A*Y + (I-Lambda)*H0, which converges since all lambda_i < 1
/// forces rho(Lambda*A) < 1. Terminates when the true residual drops below
/// rel_tol * ||(I-Lambda)H0||_F.
FeatureMatrix solve_residual_system(const ResidualStrengths& lambda, const NormalizedAdjacency& adj,
                                    const FeatureMatrix& h0, double rel_tol = 1e-10,
                                    index_t max_iter = 100000);

/// Orthonormal-column matrix (gain 1.0) from the SVD factors of a Gaussian
/// draw; used by depth experiments to keep sigma_r(W) = 1.
DenseMatrix random_orthogonal(index_t rows, index_t cols, SplitMix64& rng);

/// Entropy-based effective rank of a singular value spectrum:
/// exp(-sum p_i log p_i) with p_i = sigma_i / sum(sigma). Zero spectrum -> 0.
double effective_rank(std::span<const double> singular_values);

}  // namespace airc
