#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gsum/graph.hpp"
#include "gsum/hash128.hpp"

namespace gsum {

using BlockId = std::uint32_t;

/// Assignment of every vertex to exactly one block, kept consistent with the
/// explicit block membership lists. Block ids are dense but carry no meaning
/// across operations; cross-algorithm comparison goes through
/// partitions_equal.
struct Partition {
    std::vector<BlockId> block_of;              // vertex id -> block id
    std::vector<std::vector<VertexId>> blocks;  // block id -> sorted member list

    std::size_t vertex_count() const { return block_of.size(); }
    std::size_t block_count() const { return blocks.size(); }

    static Partition single_block(std::size_t n);
    static Partition singletons(std::size_t n);

    /// Builds a partition from an arbitrary per-vertex key assignment;
    /// blocks are numbered in order of first appearance.
    static Partition from_assignment(std::span<const std::uint32_t> keys);
    static Partition from_assignment(std::span<const Hash128> keys);

    /// Checks mutual consistency of block_of and blocks; throws on violation.
    void check_invariants() const;
};

/// True iff every block of `fine` is contained in one block of `coarse`.
bool is_refinement(const Partition& fine, const Partition& coarse);

/// Equality up to block renaming.
bool partitions_equal(const Partition& a, const Partition& b);

/// True iff every block B satisfies B ⊆ N+(S) or B ∩ N+(S) = ∅ for the
/// splitter S.
bool is_stable(const Partition& p, std::span<const VertexId> splitter, const LabeledGraph& g);

/// Replaces each block that is not stable w.r.t. the splitter S by
/// B ∩ N+(S) and B − N+(S); stable blocks are unchanged. The result refines p.
Partition split(std::span<const VertexId> splitter, const Partition& p, const LabeledGraph& g);

/// Canonical text export: one line per block listing the member terms in
/// display form, members sorted, blocks ordered by their smallest member.
std::string canonical_export(const Partition& p, const LabeledGraph& g);

/// Successor set N+(S) as a vertex bitset (words of 64).
std::vector<std::uint64_t> successor_bitset(std::span<const VertexId> splitter, const LabeledGraph& g);

inline bool bitset_test(const std::vector<std::uint64_t>& bits, VertexId v) {
    return (bits[v >> 6] >> (v & 63)) & 1;
}

}  // namespace gsum
