#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "airc/dense.hpp"
#include "airc/graph.hpp"

namespace airc {

enum class LambdaProvenance { learnable, pagerank, static_beta };

/// Per-node residual strengths (the diagonal of Lambda), shared across
/// layers. Strategy constructors keep every value strictly inside (0,1).
struct ResidualStrengths {
    std::vector<double> values;
    LambdaProvenance provenance = LambdaProvenance::static_beta;
    double clamp_lo = 1e-4;
    double clamp_hi = 1.0 - 1e-4;

    double min_value() const;
    double max_value() const;
    index_t size() const noexcept { return static_cast<index_t>(values.size()); }
};

struct PageRankScores {
    std::vector<double> scores;   // probability vector, sums to 1
    double damping = 0.85;
    index_t iterations_used = 0;
    double residual = 0.0;        // final L1 change
};

/// lambda_i = logistic(h0 row_i . w_att), clamped to [1e-4, 1-1e-4] so the
/// energy bound's strict-interior hypothesis holds for trained models.
ResidualStrengths learnable_lambda(const FeatureMatrix& h0, std::span<const double> w_att);

/// Power iteration on the weighted random-walk matrix with uniform
/// teleport; dangling mass is redistributed uniformly.
PageRankScores pagerank(const Graph& g, double damping = 0.85, double tol = 1e-10,
                        index_t max_iter = 10000);

/// Assign lambda_max to the ceil(top_fraction * n) highest-scoring nodes
/// (cutoff ties broken by ascending node index) and lambda_min to the rest.
ResidualStrengths pagerank_lambda(const PageRankScores& scores, double top_fraction,
                                  double lambda_max, double lambda_min);

ResidualStrengths static_lambda(double beta, index_t n);

/// Two-column CSV "node,lambda".
void write_lambda_csv(std::ostream& out, const ResidualStrengths& lambda);

}  // namespace airc
