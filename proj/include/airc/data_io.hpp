#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "airc/dense.hpp"
#include "airc/graph.hpp"

namespace airc {

struct SplitMasks {
    std::vector<std::uint8_t> train;
    std::vector<std::uint8_t> val;
    std::vector<std::uint8_t> test;
};

struct BundleMeta {
    std::string name;
    index_t num_classes = 0;
    index_t feature_dim = 0;
};

/// A graph dataset: topology, features, labels, optional split masks.
struct DatasetBundle {
    Graph graph;
    FeatureMatrix features;
    std::vector<index_t> labels;
    std::optional<SplitMasks> masks;
    BundleMeta meta;
    bool empty_edge_warning = false;

    index_t num_nodes() const noexcept { return graph.n; }
};

/// Load a bundle directory: edges.tsv, features.csv, labels.tsv, meta.txt,
/// optional masks.tsv. Edge files may list each undirected edge once (it is
/// symmetrized) or both ways; conflicting duplicate weights are rejected.
DatasetBundle load_bundle(const std::filesystem::path& dir);

/// Write a bundle directory. Features are written with 17 significant
/// digits so that load(save(b)) round-trips bit-exactly. Refuses to write
/// into a non-empty directory unless force is set.
void save_bundle(const DatasetBundle& bundle, const std::filesystem::path& dir, bool force = false);

/// Stratified split by label with the given fractions (remainder to test).
SplitMasks stratified_split(std::span<const index_t> labels, double train_fraction,
                            double val_fraction, std::uint64_t seed);

/// Wrap an SBM draw as a bundle (meta filled in, no masks).
DatasetBundle sbm_bundle(const SbmParams& params, const std::string& name = "sbm");

}  // namespace airc
