#pragma once

#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "airc/dense.hpp"
#include "airc/rng.hpp"

namespace airc {

/// Immutable undirected weighted graph in CSR form.
///
/// Both directions of every edge are stored exactly once, columns are
/// sorted within each row, weights are positive, and self-loops are
/// rejected at build time (self-loop augmentation happens in normalize()).
struct Graph {
    index_t n = 0;
    std::vector<index_t> row_ptr;   // length n+1
    std::vector<index_t> col_idx;   // length = 2 * undirected edge count
    std::vector<double> weights;    // aligned with col_idx
    std::vector<double> degrees;    // weighted degree per node

    index_t num_nodes() const noexcept { return n; }
    index_t num_directed_entries() const noexcept { return static_cast<index_t>(col_idx.size()); }
    index_t num_edges() const noexcept { return num_directed_entries() / 2; }
};

enum class NormalizeMode { plain, augmented };

/// Symmetric-normalized adjacency operator in CSR form. In augmented mode
/// the unit self-loop entries are stored explicitly.
struct NormalizedAdjacency {
    index_t n = 0;
    NormalizeMode mode = NormalizeMode::augmented;
    std::vector<index_t> row_ptr;
    std::vector<index_t> col_idx;
    std::vector<double> values;
};

struct WeightedEdge {
    index_t i = 0;
    index_t j = 0;
    double weight = 1.0;
};

struct SbmParams {
    index_t n = 200;        // even
    double p = 0.2;         // intra-class edge probability
    double q = 0.05;        // inter-class edge probability
    double mu1 = -0.5;      // class-0 feature mean
    double mu2 = 0.5;       // class-1 feature mean
    double stddev = 2.0;    // shared feature standard deviation
    index_t dim = 2;
    std::uint64_t seed = 0;
};

struct SbmResult {
    Graph graph;
    FeatureMatrix features;
    std::vector<index_t> labels;  // nodes 0..n/2-1 are class 0
};

/// Build a Graph from an edge list. Each undirected edge may appear once or
/// twice ((i,j) and (j,i)); conflicting duplicate weights are an error.
Graph build_graph(std::span<const WeightedEdge> edges, index_t n);

NormalizedAdjacency normalize(const Graph& g, NormalizeMode mode);

/// CSR sparse * dense product with ascending-column accumulation per row.
FeatureMatrix spmm(const NormalizedAdjacency& adj, const FeatureMatrix& x);

SbmResult sbm_generate(const SbmParams& params);

/// Fraction of undirected edges whose endpoints share a label.
double homophily_ratio(const Graph& g, std::span<const index_t> labels);

/// Dense copy of the operator (test oracles, sigma_r computations).
DenseMatrix to_dense(const NormalizedAdjacency& adj);

}  // namespace airc
