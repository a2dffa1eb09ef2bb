#pragma once

#include <cstdint>

#include "gsum/graph.hpp"

namespace gsum {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameters for the seeded synthetic graph generator. Sources are drawn
/// with weight (rank+1)^-degree_skew, targets uniformly; duplicate (s,o)
/// pairs merge, so the generator keeps sampling until exactly edge_count
/// distinct pairs exist.
struct GeneratorParams {
    std::uint32_t vertex_count = 0;
    std::uint64_t edge_count = 0;
    std::uint32_t edge_label_alphabet = 4;
    std::uint32_t vertex_label_alphabet = 4;
    std::uint32_t max_labels_per_vertex = 1;
    double degree_skew = 0.0;
    std::uint64_t seed = 0;
};

/// Deterministic for a fixed seed: the same parameters always produce a
/// byte-identical serialized graph.
LabeledGraph generate_synthetic(const GeneratorParams& params);

}  // namespace gsum
