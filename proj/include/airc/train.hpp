#pragma once

#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "airc/data_io.hpp"
#include "airc/dense.hpp"
#include "airc/graph.hpp"
#include "airc/propagate.hpp"
#include "airc/residual.hpp"
#include "airc/rng.hpp"

namespace airc {

using slot_t = index_t;

/// Reverse-mode tape over the fixed primitive set used by the model
/// (spmm, dense matmul, row scalings by lambda, add, activations, logistic,
/// clamp, dropout, log-softmax, masked NLL). Leaves may point at external
/// gradient slots; backward writes each exactly once, accumulating when a
/// leaf feeds several ops.
class Tape {
public:
    Tape() = default;
    Tape(const Tape&) = delete;
    Tape& operator=(const Tape&) = delete;
    Tape(Tape&&) = default;
    Tape& operator=(Tape&&) = default;

    slot_t leaf(DenseMatrix value, DenseMatrix* external_grad = nullptr);
    slot_t spmm_op(const NormalizedAdjacency& adj, slot_t x);
    slot_t matmul_op(slot_t a, slot_t b);
    /// out = diag(lam) * x, or diag(1 - lam) * x. lam is an n x 1 slot.
    slot_t row_scale_op(slot_t lam, slot_t x, bool one_minus);
    slot_t add_op(slot_t a, slot_t b);
    slot_t activation_op(slot_t x, Activation activation, double slope);
    slot_t logistic_op(slot_t x);
    slot_t clamp_op(slot_t x, double lo, double hi);
    /// Inverted dropout: kept entries are scaled by 1/(1-rate). The mask is
    /// recorded so backward replays it exactly.
    slot_t dropout_op(slot_t x, double rate, SplitMix64& rng);
    slot_t log_softmax_op(slot_t x);
    /// Mean negative log-likelihood over masked nodes; 1x1 output.
    slot_t masked_nll_op(slot_t log_probs, std::span<const std::uint8_t> mask,
                         std::span<const index_t> labels);

    const DenseMatrix& value(slot_t s) const;
    const DenseMatrix& grad(slot_t s) const;
    index_t size() const noexcept { return static_cast<index_t>(entries_.size()); }

    /// Reverse pass from `output` seeded with `seed`. A second call without
    /// a fresh forward raises TapeConsumed.
    void backward(slot_t output, const DenseMatrix& seed);

private:
    struct Entry;
    std::vector<Entry> entries_;
    bool consumed_ = false;

    DenseMatrix& grad_mut(slot_t s);
    void accumulate(slot_t s, const DenseMatrix& delta);
};

enum class ResidualStrategy { learnable, pagerank, static_beta, gcn };

const char* to_string(ResidualStrategy strategy);
ResidualStrategy residual_strategy_from_string(const std::string& name);

struct TrainConfig {
    double lr = 1e-2;
    double weight_decay = 1e-4;
    index_t hidden_dim = 64;
    index_t num_layers = 2;
    double dropout = 0.4;
    Activation activation = Activation::relu;
    double slope = 0.2;
    ResidualStrategy strategy = ResidualStrategy::pagerank;
    double top_fraction = 0.10;
    double lambda_max = 0.7;
    double lambda_min = 0.3;
    double beta = 0.5;
    index_t epochs = 1000;
    index_t patience = 100;
    std::uint64_t seed = 0;
    double train_fraction = 0.6;   // used when the bundle has no masks
    double val_fraction = 0.2;

    void validate() const;
};

/// All learnable tensors. theta/w_att stay allocated but untouched in gcn
/// mode so tensor indices are stable across strategies.
struct ModelParams {
    std::vector<LayerParams> layers;
    DenseMatrix w_att;        // d0 x 1
    DenseMatrix grad_w_att;
    DenseMatrix classifier;   // hidden x C
    DenseMatrix grad_classifier;

    static ModelParams glorot(const TrainConfig& config, index_t d0, index_t num_classes,
                              SplitMix64& rng);

    /// (tensor, gradient, weight-decay flag) view over all parameters;
    /// w_att is excluded from weight decay.
    struct TensorRef {
        DenseMatrix* param;
        DenseMatrix* grad;
        bool decay;
    };
    std::vector<TensorRef> tensors();
};

struct ForwardResult {
    Tape tape;
    slot_t logits = -1;        // log-softmax output slot
    slot_t lambda_slot = -1;   // learnable strategy only
    std::vector<std::pair<slot_t, slot_t>> branch_slots;  // per layer (X, Y) pre-add slots
};

/// Stacked adaptive-IRC forward with a linear classifier head and row-wise
/// log-softmax. Dropout is applied to layer inputs only when training.
ForwardResult forward_model(const TrainConfig& config, const ModelParams& params,
                            const NormalizedAdjacency& adj, const FeatureMatrix& h0,
                            const ResidualStrengths* fixed_lambda, bool training,
                            SplitMix64* dropout_rng);

struct AdamState {
    DenseMatrix m;
    DenseMatrix v;
    index_t step_count = 0;
};

/// One Adam update with bias correction; weight decay is decoupled
/// (lr * wd * param subtracted alongside the adaptive step).
void adam_step(DenseMatrix& param, const DenseMatrix& grad, AdamState& state, double lr,
               double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8,
               double weight_decay = 0.0);

/// Argmax predictions; ties broken by the lowest class index.
std::vector<index_t> predict(const DenseMatrix& log_probs);

double evaluate(const DenseMatrix& log_probs, std::span<const index_t> labels,
                std::span<const std::uint8_t> mask);

struct EpochRecord {
    index_t epoch = 0;
    double train_acc = 0.0;
    double val_acc = 0.0;
    double test_acc = 0.0;
    double loss = 0.0;
    double energy_last_layer = 0.0;
    double seconds = 0.0;
};

struct Metrics {
    std::vector<EpochRecord> epochs;
    index_t best_epoch = 0;
    double final_test_acc = 0.0;
    std::vector<std::vector<double>> alignment_log;  // sampled every 10 epochs
    std::vector<double> final_lambda;
    std::uint64_t seed = 0;

    /// Per-epoch CSV plus the closing summary line "seed,best_epoch,test_acc".
    void write_csv(std::ostream& out) const;
};

/// Full-graph training with early stopping on validation accuracy and
/// best-epoch parameter restore.
Metrics train(const TrainConfig& config, const DatasetBundle& dataset);

}  // namespace airc
