#pragma once

#include "gsum/graph.hpp"
#include "gsum/partition.hpp"
#include "gsum/trace.hpp"

namespace gsum {

/// Groups vertices by their vertex-label set.
Partition label_partition(const LabeledGraph& g);

/// Repeatedly splits by the partition's own blocks (creation order) until no
/// block refines the partition, returning the coarsest stable refinement of
/// p0. Unoptimized baseline; intended for small inputs.
Partition naive_coarsest_partition(const Partition& p0, const LabeledGraph& g);

/// Sequential split-based stabilization for the vertex-labeled backward
/// k-bisimulation. Starts from the label partition; each sweep stabilizes
/// every block against every not-yet-used block snapshot of the sweep-start
/// partition, and execution stops early when a sweep splits nothing. Blocks
/// created inside a sweep are split targets for the sweep's later splitters.
/// k = 0 returns the label partition.
PartitionTrace bisim_kaushik(const LabeledGraph& g, unsigned k, const RunOptions& opts = {});

}  // namespace gsum
