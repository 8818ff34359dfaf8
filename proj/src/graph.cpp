#include "airc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "airc/parallel.hpp"

namespace airc {

Graph build_graph(std::span<const WeightedEdge> edges, index_t n) {
    require(n >= 0, ErrorCode::invalid_argument, "build_graph: negative node count");
    struct Entry {
        index_t i, j;
        double w;
    };
    std::vector<Entry> directed;
    directed.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        require(e.i >= 0 && e.i < n && e.j >= 0 && e.j < n, ErrorCode::index_out_of_range,
                "build_graph: edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                    ") outside [0," + std::to_string(n) + ")");
        require(e.i != e.j, ErrorCode::self_loop_rejected,
                "build_graph: self-loop at node " + std::to_string(e.i));
        require(e.weight > 0.0 && std::isfinite(e.weight), ErrorCode::invalid_argument,
                "build_graph: weight must be positive and finite");
        directed.push_back({e.i, e.j, e.weight});
        directed.push_back({e.j, e.i, e.weight});
    }
    std::sort(directed.begin(), directed.end(), [](const Entry& a, const Entry& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    // Deduplicate; a repeated (i,j) must carry the same weight.
    std::vector<Entry> unique_entries;
    unique_entries.reserve(directed.size());
    for (const auto& e : directed) {
        if (!unique_entries.empty() && unique_entries.back().i == e.i &&
            unique_entries.back().j == e.j) {
            require(unique_entries.back().w == e.w, ErrorCode::duplicate_edge_conflict,
                    "build_graph: edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                        ") listed with conflicting weights");
            continue;
        }
        unique_entries.push_back(e);
    }

    Graph g;
    g.n = n;
    g.row_ptr.assign(static_cast<std::size_t>(n) + 1, 0);
    g.col_idx.reserve(unique_entries.size());
    g.weights.reserve(unique_entries.size());
    for (const auto& e : unique_entries) ++g.row_ptr[static_cast<std::size_t>(e.i) + 1];
    for (index_t i = 0; i < n; ++i) g.row_ptr[static_cast<std::size_t>(i) + 1] += g.row_ptr[static_cast<std::size_t>(i)];
    for (const auto& e : unique_entries) {
        g.col_idx.push_back(e.j);
        g.weights.push_back(e.w);
    }
    g.degrees.assign(static_cast<std::size_t>(n), 0.0);
    for (index_t i = 0; i < n; ++i) {
        double d = 0.0;
        for (index_t t = g.row_ptr[static_cast<std::size_t>(i)]; t < g.row_ptr[static_cast<std::size_t>(i) + 1]; ++t)
            d += g.weights[static_cast<std::size_t>(t)];
        g.degrees[static_cast<std::size_t>(i)] = d;
    }
    return g;
}

NormalizedAdjacency normalize(const Graph& g, NormalizeMode mode) {
    NormalizedAdjacency adj;
    adj.n = g.n;
    adj.mode = mode;
    const index_t n = g.n;
    if (mode == NormalizeMode::plain) {
        for (index_t i = 0; i < n; ++i)
            require(g.degrees[static_cast<std::size_t>(i)] > 0.0, ErrorCode::isolated_node_in_plain_mode,
                    "normalize: node " + std::to_string(i) + " is isolated");
        adj.row_ptr = g.row_ptr;
        adj.col_idx = g.col_idx;
        adj.values.resize(g.weights.size());
        for (index_t i = 0; i < n; ++i) {
            const double di = g.degrees[static_cast<std::size_t>(i)];
            for (index_t t = g.row_ptr[static_cast<std::size_t>(i)]; t < g.row_ptr[static_cast<std::size_t>(i) + 1]; ++t) {
                const index_t j = g.col_idx[static_cast<std::size_t>(t)];
                adj.values[static_cast<std::size_t>(t)] =
                    g.weights[static_cast<std::size_t>(t)] /
                    std::sqrt(di * g.degrees[static_cast<std::size_t>(j)]);
            }
        }
        return adj;
    }
    // Augmented: insert the unit self-loop into each sorted row.
    adj.row_ptr.assign(static_cast<std::size_t>(n) + 1, 0);
    adj.col_idx.reserve(g.col_idx.size() + static_cast<std::size_t>(n));
    adj.values.reserve(g.col_idx.size() + static_cast<std::size_t>(n));
    for (index_t i = 0; i < n; ++i) {
        const double si = std::sqrt(1.0 + g.degrees[static_cast<std::size_t>(i)]);
        bool self_placed = false;
        for (index_t t = g.row_ptr[static_cast<std::size_t>(i)]; t < g.row_ptr[static_cast<std::size_t>(i) + 1]; ++t) {
            const index_t j = g.col_idx[static_cast<std::size_t>(t)];
            if (!self_placed && j > i) {
                adj.col_idx.push_back(i);
                adj.values.push_back(1.0 / (si * si));
                self_placed = true;
            }
            const double sj = std::sqrt(1.0 + g.degrees[static_cast<std::size_t>(j)]);
            adj.col_idx.push_back(j);
            adj.values.push_back(g.weights[static_cast<std::size_t>(t)] / (si * sj));
        }
        if (!self_placed) {
            adj.col_idx.push_back(i);
            adj.values.push_back(1.0 / (si * si));
        }
        adj.row_ptr[static_cast<std::size_t>(i) + 1] = static_cast<index_t>(adj.col_idx.size());
    }
    return adj;
}

FeatureMatrix spmm(const NormalizedAdjacency& adj, const FeatureMatrix& x) {
    require(x.rows() == adj.n, ErrorCode::dimension_mismatch,
            "spmm: feature rows != node count");
    FeatureMatrix out(adj.n, x.cols());
    const index_t cols = x.cols();
    parallel_for_rows(adj.n, [&](index_t begin, index_t end) {
        for (index_t i = begin; i < end; ++i) {
            double* out_row = out.data() + i * cols;
            for (index_t t = adj.row_ptr[static_cast<std::size_t>(i)];
                 t < adj.row_ptr[static_cast<std::size_t>(i) + 1]; ++t) {
                const double v = adj.values[static_cast<std::size_t>(t)];
                const double* x_row = x.data() + adj.col_idx[static_cast<std::size_t>(t)] * cols;
                for (index_t j = 0; j < cols; ++j) out_row[j] += v * x_row[j];
            }
        }
    });
    return out;
}

SbmResult sbm_generate(const SbmParams& params) {
    require(params.n > 0 && params.n % 2 == 0, ErrorCode::invalid_argument,
            "sbm_generate: n must be positive and even");
    require(params.q >= 0.0 && params.q <= params.p && params.p <= 1.0,
            ErrorCode::invalid_argument, "sbm_generate: need 0 <= q <= p <= 1");
    require(params.stddev > 0.0, ErrorCode::invalid_argument, "sbm_generate: stddev must be > 0");
    require(params.dim > 0, ErrorCode::invalid_argument, "sbm_generate: dim must be >= 1");

    SplitMix64 rng(params.seed);
    SplitMix64 edge_rng = rng.fork(1);
    SplitMix64 feature_rng = rng.fork(2);

    const index_t n = params.n;
    const index_t half = n / 2;
    std::vector<index_t> labels(static_cast<std::size_t>(n), 0);
    for (index_t i = half; i < n; ++i) labels[static_cast<std::size_t>(i)] = 1;

    std::vector<WeightedEdge> edges;
    for (index_t i = 0; i < n; ++i) {
        for (index_t j = i + 1; j < n; ++j) {
            const bool same = (i < half) == (j < half);
            const double prob = same ? params.p : params.q;
            if (edge_rng.uniform01() < prob) edges.push_back({i, j, 1.0});
        }
    }

    FeatureMatrix features(n, params.dim);
    for (index_t i = 0; i < n; ++i) {
        const double mean = i < half ? params.mu1 : params.mu2;
        for (index_t j = 0; j < params.dim; ++j)
            features(i, j) = feature_rng.normal(mean, params.stddev);
    }

    return {build_graph(edges, n), std::move(features), std::move(labels)};
}

double homophily_ratio(const Graph& g, std::span<const index_t> labels) {
    require(static_cast<index_t>(labels.size()) == g.n, ErrorCode::inconsistent_lengths,
            "homophily_ratio: label count != node count");
    require(g.num_edges() > 0, ErrorCode::empty_edge_set, "homophily_ratio: graph has no edges");
    index_t same = 0;
    index_t total = 0;
    for (index_t i = 0; i < g.n; ++i) {
        for (index_t t = g.row_ptr[static_cast<std::size_t>(i)]; t < g.row_ptr[static_cast<std::size_t>(i) + 1]; ++t) {
            const index_t j = g.col_idx[static_cast<std::size_t>(t)];
            if (j <= i) continue;  // count each undirected edge once
            ++total;
            if (labels[static_cast<std::size_t>(i)] == labels[static_cast<std::size_t>(j)]) ++same;
        }
    }
    return static_cast<double>(same) / static_cast<double>(total);
}

DenseMatrix to_dense(const NormalizedAdjacency& adj) {
    DenseMatrix out(adj.n, adj.n);
    for (index_t i = 0; i < adj.n; ++i)
        for (index_t t = adj.row_ptr[static_cast<std::size_t>(i)]; t < adj.row_ptr[static_cast<std::size_t>(i) + 1]; ++t)
            out(i, adj.col_idx[static_cast<std::size_t>(t)]) = adj.values[static_cast<std::size_t>(t)];
    return out;
}

}  // namespace airc
