#pragma once

#include <span>
#include <string>
#include <string_view>

#include "gsum/graph.hpp"
#include "gsum/hash128.hpp"
#include "gsum/trace.hpp"

namespace gsum {

/// Vertex equivalence atoms usable in a summary-model triple. Tautology
/// relates every pair, Identity relates a vertex only to itself, and
/// LabelEquality relates vertices with equal vertex-label sets.
enum class RelationAtom : std::uint8_t { Tautology, Identity, LabelEquality };

/// Declarative summary model: an equivalence-relation triple (~s, ~p, ~o)
/// chained to depth k, optionally evaluated over reversed edges.
/// Textual form: cp((T,id,T),k=5) or cp(inv(OC,T,OC),k=5).
struct GsmSpec {
    RelationAtom subject_atom = RelationAtom::Tautology;
    RelationAtom predicate_atom = RelationAtom::Tautology;
    RelationAtom object_atom = RelationAtom::Tautology;
    unsigned chaining_depth = 1;
    bool inverted = false;

    std::string to_string() const;
};

/// Parses the textual form; parse errors name the offending token.
GsmSpec parse_gsm_spec(std::string_view text);

/// Initial identifier of a vertex under one atom: a shared constant for
/// Tautology, a term-derived unique value for Identity, a hash of the
/// canonical vertex-label set for LabelEquality.
Hash128 vertex_schema(VertexId v, const LabeledGraph& g, RelationAtom atom);

/// One exchanged message: the edge schema symbol paired with a neighbor
/// identifier. Under a Tautology predicate atom the symbol is a constant.
struct BrsMessage {
    std::uint32_t edge_schema;
    Hash128 id;

    friend bool operator==(const BrsMessage&, const BrsMessage&) = default;
    friend auto operator<=>(const BrsMessage&, const BrsMessage&) = default;
};

/// Order-independent digest of a message set: any permutation hashes
/// identically and duplicate messages collapse. The empty set maps to a
/// fixed constant.
Hash128 merge_and_hash(std::span<const BrsMessage> messages);

/// Generic vertex-centric summarizer. Every vertex carries a subject-side
/// and an object-side identifier seeded from the spec atoms; each round every
/// vertex folds its neighbors' previous-round identifiers (read from an
/// immutable snapshot) into its own, and the final round folds the
/// object-side identifiers into the subject side. Vertices with equal
/// subject-side identifiers form the output partition. Stops early when the
/// number of distinct subject-side identifiers stops growing.
PartitionTrace brs_summarize(const LabeledGraph& g, const GsmSpec& spec,
                             const RunOptions& opts = {});

/// Quotient of the graph under a partition: one summary vertex per block and
/// one edge per distinct (source block, label set, target block).
struct SummaryEdge {
    BlockId source;
    BlockId target;
    LabelSetId labels;

    friend bool operator==(const SummaryEdge&, const SummaryEdge&) = default;
    friend auto operator<=>(const SummaryEdge&, const SummaryEdge&) = default;
};

struct SummaryGraph {
    std::size_t vertex_count = 0;
    std::vector<SummaryEdge> edges;
};

SummaryGraph build_summary_graph(const Partition& p, const LabeledGraph& g);

}  // namespace gsum
