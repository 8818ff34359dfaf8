#pragma once

#include <optional>
#include <vector>

#include "airc/dense.hpp"
#include "airc/energy.hpp"
#include "airc/graph.hpp"
#include "airc/residual.hpp"

namespace airc {

enum class Activation { identity, relu, leaky_relu };

/// Apply the activation elementwise. slope is the leaky-ReLU negative slope.
DenseMatrix apply_activation(const DenseMatrix& m, Activation activation, double slope);

/// Per-layer weight pair. theta always maps from the initial feature
/// dimension d0. Gradient slots are filled by the training tape.
struct LayerParams {
    DenseMatrix w;
    DenseMatrix theta;
    DenseMatrix grad_w;
    DenseMatrix grad_theta;

    LayerParams() = default;
    LayerParams(DenseMatrix w_init, DenseMatrix theta_init)
        : w(std::move(w_init)), theta(std::move(theta_init)),
          grad_w(w.rows(), w.cols()), grad_theta(theta.rows(), theta.cols()) {}
};

/// One step of the simplified (linear, weight-free) propagation
///   H^{l+1} = Lambda*A*H^l + (I - Lambda)*H^0.
FeatureMatrix simplified_step(const ResidualStrengths& lambda, const NormalizedAdjacency& adj,
                              const FeatureMatrix& h_l, const FeatureMatrix& h0);

struct LimitResult {
    FeatureMatrix h;
    index_t steps_used = 0;
};

/// Iterate simplified_step from H^0 until the relative Frobenius change
/// drops below tol.
LimitResult simplified_limit(const ResidualStrengths& lambda, const NormalizedAdjacency& adj,
                             const FeatureMatrix& h0, index_t max_steps = 100000,
                             double tol = 1e-12);

/// Full adaptive IRC layer
///   sigma(Lambda*A*H^l*W + (I-Lambda)*H^0*Theta),
/// with Lambda applied as a row scaling. gcn_mode bypasses the residual
/// branch and the Lambda scaling entirely, recovering the vanilla GCN layer
/// sigma(A*H*W) bit-for-bit.
FeatureMatrix airc_layer_forward(const ResidualStrengths& lambda, const NormalizedAdjacency& adj,
                                 const FeatureMatrix& h_l, const FeatureMatrix& h0,
                                 const LayerParams& params, Activation activation,
                                 double slope = 0.2, bool gcn_mode = false);

enum class DepthModel { gcn, airc };
enum class DepthWeights { identity, orthogonal };

struct DepthExperimentConfig {
    DepthModel model = DepthModel::airc;
    index_t depth = 16;
    DepthWeights weights = DepthWeights::orthogonal;
    Activation activation = Activation::leaky_relu;
    double slope = 0.2;
    bool snapshots = false;
    std::uint64_t seed = 0;
    double rank_rel_tol = 1e-9;
};

/// Depth run artifacts: energies/ranks per layer (layer 0 = input), the
/// per-layer trace alignment log for airc runs, optional embedding
/// snapshots.
struct DepthTrace {
    EnergyReport energy_report;
    std::vector<double> alignments;           // airc runs only, one per layer
    std::vector<FeatureMatrix> embeddings;    // depth+1 snapshots when enabled
};

/// Apply the chosen layer `depth` times from h0, recording energy, rank and
/// effective rank per layer. lambda is required for the airc model and
/// ignored in gcn mode. Widths stay at h0's column count.
DepthTrace run_depth_experiment(const DepthExperimentConfig& config, const NormalizedAdjacency& adj,
                                const FeatureMatrix& h0, const ResidualStrengths* lambda);

}  // namespace airc
