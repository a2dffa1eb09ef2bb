#pragma once

#include <span>
#include <vector>

#include "gsum/graph.hpp"
#include "gsum/hash128.hpp"
#include "gsum/trace.hpp"

namespace gsum {

/// One signature element: the edge symbol (label-set id, or a single label id
/// when the graph uses per-label signatures) paired with the target's block
/// identifier from the previous iteration.
struct SignatureEntry {
    std::uint32_t symbol;
    Hash128 block;

    friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
    friend auto operator<=>(const SignatureEntry&, const SignatureEntry&) = default;
};

/// Canonically ordered (sorted, deduplicated) signature of a vertex.
using Signature = std::vector<SignatureEntry>;

Signature signature_of(VertexId v, const LabeledGraph& g, std::span<const Hash128> ids);

/// Iterative signature hashing for the edge-labeled forward k-bisimulation.
/// All vertices start in one block; iteration i hashes every vertex's
/// signature over the iteration-(i-1) identifiers, in parallel, and stops
/// early when the number of distinct identifiers no longer grows. k = 0
/// returns the single-block partition.
PartitionTrace bisim_schaetzle(const LabeledGraph& g, unsigned k, const RunOptions& opts = {});

}  // namespace gsum
