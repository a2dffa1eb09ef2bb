#pragma once

#include <vector>

#include "gsum/graph.hpp"
#include "gsum/partition.hpp"

namespace gsum {

/// Literal, unoptimized level-wise evaluations of the four stratified
/// k-bisimulation variants, used as ground truth on small graphs.
/// Level 0 is one block (label-blind variants) or the vertex-label partition;
/// each further level refines by the neighbor condition of the previous one.

enum class OracleVariant {
    Forward,                 // successors, labels ignored
    Backward,                // predecessors, labels ignored
    EdgeLabeledForward,      // successors matched with equal edge label sets
    VertexLabeledBackward,   // label partition at level 0, predecessors
};

/// Partitions for every level 0..k, in order.
std::vector<Partition> oracle_levels(const LabeledGraph& g, unsigned k, OracleVariant variant);

Partition oracle_forward(const LabeledGraph& g, unsigned k);
Partition oracle_backward(const LabeledGraph& g, unsigned k);
Partition oracle_edge_labeled_forward(const LabeledGraph& g, unsigned k);
Partition oracle_vertex_labeled_backward(const LabeledGraph& g, unsigned k);

}  // namespace gsum
