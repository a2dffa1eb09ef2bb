#pragma once

#include <cstddef>
#include <string>

#include "gsum/graph.hpp"

namespace gsum {

/// Dataset statistics. Edge and degree counts are in triples: an edge record
/// whose label set has j predicates contributes j. A self-loop adds 1 to the
/// vertex's total degree while adding 1 to each of its in- and out-degrees.
struct GraphStats {
    std::size_t vertex_count = 0;          // |V|
    std::size_t triple_count = 0;          // |E| counted as (s,p,o) triples
    std::size_t edge_record_count = 0;     // distinct ordered pairs
    std::size_t vertex_label_count = 0;    // |Sigma_V|
    std::size_t vertex_label_set_count = 0;  // |rng(l_V)|
    double mean_labels_per_vertex = 0;
    double sd_labels_per_vertex = 0;
    std::size_t edge_label_count = 0;      // |Sigma_E|
    double mean_degree = 0;
    double sd_degree = 0;
    std::size_t max_degree = 0;
    double mean_in_degree = 0;
    double sd_in_degree = 0;
    std::size_t max_in_degree = 0;
    double mean_out_degree = 0;
    double sd_out_degree = 0;
    std::size_t max_out_degree = 0;
};

GraphStats compute_statistics(const LabeledGraph& g);

/// Human-readable one-stat-per-line rendering.
std::string format_statistics(const GraphStats& s);

}  // namespace gsum
