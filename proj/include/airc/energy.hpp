#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "airc/dense.hpp"
#include "airc/graph.hpp"
#include "airc/residual.hpp"

namespace airc {

/// tr(x^T (I - A) x) computed via spmm without materializing the
/// Laplacian. Tiny negative values from cancellation are clamped to 0.
double dirichlet_energy(const NormalizedAdjacency& adj, const FeatureMatrix& x);

/// Edge-sum form of the same quantity: (1/2) sum over stored directed
/// entries of a_ij ||x_i/s_i - x_j/s_j||^2 with s_i = sqrt(1+d_i) in
/// augmented mode and sqrt(d_i) in plain mode. Equal to the trace form;
/// kept as the independent second route.
double dirichlet_energy_edge_sum(const Graph& g, const FeatureMatrix& x,
                                 NormalizeMode mode = NormalizeMode::augmented);

/// tr(x^T (I - A) y). Sign is meaningful: training logs this per layer with
/// x = Lambda*A*H*W and y = (I-Lambda)*H0*Theta to audit the energy bound's
/// nonnegative-alignment hypothesis.
double trace_alignment(const NormalizedAdjacency& adj, const FeatureMatrix& x,
                       const FeatureMatrix& y);

/// Constants of the deep-layer energy lower bound
///   E(H^L) >= zeta * sigma_bar_theta / (1 - eta * sigma_bar_w) * E(H^0)
/// with eta = alpha^2 lambda_min^2 sigma_r(A)^2 and
/// zeta = alpha^2 (1-lambda_max)^2. sigma_bar_* are infima over layers of
/// the squared smallest nonzero singular values.
struct Theorem2Bound {
    double alpha = 0.0;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double sigma_r_adj = 0.0;
    double sigma_bar_w = 0.0;
    double sigma_bar_theta = 0.0;
    double eta = 0.0;
    double zeta = 0.0;
    double bound_value = 0.0;
    bool sigma_r_randomized = false;  // sigma_r(A) estimated, not exact
};

Theorem2Bound theorem2_bound(double alpha, double lambda_min, double lambda_max,
                             double sigma_r_adj, double sigma_bar_w, double sigma_bar_theta,
                             double e0);

/// E(f) and E(LeakyReLU_alpha(f)) for a per-node scalar vector.
std::pair<double, double> leaky_relu_energy_ratio(const NormalizedAdjacency& adj,
                                                  std::span<const double> f, double alpha);

/// ||f W||_2 >= sigma_r(W) ||f||_2, for a row vector f (valid when f^T lies
/// in the column space of W).
bool lemma1_lower_bound_holds(const DenseMatrix& w, std::span<const double> f_row,
                              double slack = -1e-10);

/// ||Lambda A f||_2 >= lambda_min sigma_r(A) ||f||_2, for a column vector f
/// in the row space of A.
bool lemma2_lower_bound_holds(const ResidualStrengths& lambda, const NormalizedAdjacency& adj,
                              std::span<const double> f_col, double slack = -1e-10);

/// Per-layer oversmoothing diagnostics for a depth run.
struct EnergyReport {
    std::vector<double> per_layer_energy;
    std::vector<index_t> per_layer_rank;
    std::vector<double> per_layer_effective_rank;
    std::optional<Theorem2Bound> bound;

    index_t layers() const noexcept { return static_cast<index_t>(per_layer_energy.size()); }
    /// CSV: header "layer,energy,rank,effective_rank", >=12 significant digits.
    void write_csv(std::ostream& out) const;
};

/// sigma_r of the normalized adjacency. Dense SVD up to n = 512; above that
/// a randomized subspace estimate is used and flagged in the result.
std::pair<double, bool> sigma_r_of_adjacency(const NormalizedAdjacency& adj,
                                             double rel_tol = 1e-9);

}  // namespace airc
