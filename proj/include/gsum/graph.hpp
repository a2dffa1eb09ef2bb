#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gsum/interning.hpp"

namespace gsum {

using VertexId = std::uint32_t;

enum class TermKind : std::uint8_t { Iri, Literal, Blank };

/// One edge record per ordered (source, target) pair; `labels` is the
/// non-empty set of predicates observed between the pair.
struct Edge {
    VertexId source;
    VertexId target;
    LabelSetId labels;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
    VertexId vertex;
    LabelSetId labels;
};

struct IngestError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IngestionConfig {
    std::string type_predicate = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
    std::string literal_label = "Literal";
    // When true, algorithms treat an edge with label set {a,b} as the two
    // single-label symbols (a, target), (b, target) instead of one set-valued
    // symbol. The edge records themselves stay merged per ordered pair.
    bool explode_label_sets = false;
};

/// Multi-relational labeled directed graph with interned labels, dense vertex
/// ids in first-seen order, and both adjacency directions. Immutable after
/// construction; safe for concurrent reads.
class LabeledGraph {
public:
    std::size_t vertex_count() const { return terms_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }

    std::span<const Neighbor> out_neighbors(VertexId v) const {
        return {out_adj_.data() + out_offsets_[v],
                out_adj_.data() + out_offsets_[v + 1]};
    }
    std::span<const Neighbor> in_neighbors(VertexId v) const {
        return {in_adj_.data() + in_offsets_[v],
                in_adj_.data() + in_offsets_[v + 1]};
    }

    LabelSetId vertex_label_set(VertexId v) const { return vertex_labels_[v]; }
    const std::string& term(VertexId v) const { return terms_[v]; }
    TermKind term_kind(VertexId v) const { return term_kinds_[v]; }
    std::optional<VertexId> find_term(std::string_view term) const;

    /// N-Triples-style rendering of the vertex term: <iri>, "literal", _:blank.
    std::string display_term(VertexId v) const;

    const LabelDictionary& dict() const { return dict_; }
    LabelDictionary& dict() { return dict_; }
    bool per_label_signatures() const { return per_label_signatures_; }

    /// Checks the structural invariants (adjacency consistency, label-set
    /// resolution, one record per pair). Throws std::logic_error on violation.
    void check_invariants() const;

private:
    friend class GraphBuilder;
    friend LabeledGraph invert(const LabeledGraph& g);

    std::vector<std::string> terms_;
    std::vector<TermKind> term_kinds_;
    std::unordered_map<std::string, VertexId, TransparentStringHash, std::equal_to<>> term_to_id_;
    std::vector<LabelSetId> vertex_labels_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> out_offsets_;
    std::vector<Neighbor> out_adj_;
    std::vector<std::uint64_t> in_offsets_;
    std::vector<Neighbor> in_adj_;
    LabelDictionary dict_;
    bool per_label_signatures_ = false;
};

/// Streaming graph construction from (subject, predicate, object) triples.
/// Triples whose predicate equals the configured type predicate label the
/// subject vertex instead of creating an edge; predicates between the same
/// ordered pair merge into one label set. Single-threaded.
class GraphBuilder {
public:
    explicit GraphBuilder(IngestionConfig config = {});

    /// Materializes a vertex for the term even if no triple mentions it.
    VertexId add_vertex(std::string_view term, TermKind kind);

    void add_triple(std::string_view subject, TermKind subject_kind,
                    std::string_view predicate,
                    std::string_view object, TermKind object_kind);

    /// Finalizes adjacency and label sets. The builder is left empty.
    LabeledGraph finish();

private:
    VertexId intern_term(std::string_view term, TermKind kind);

    IngestionConfig config_;
    LabeledGraph graph_;
    std::vector<std::vector<LabelId>> pending_vertex_labels_;
    // (source, target) -> accumulated edge label ids
    std::unordered_map<std::uint64_t, std::vector<LabelId>> pending_edges_;
};

struct TripleRecord {
    std::string subject;
    TermKind subject_kind = TermKind::Iri;
    std::string predicate;
    std::string object;
    TermKind object_kind = TermKind::Iri;
};

/// One-shot construction from a triple sequence; see GraphBuilder.
LabeledGraph build_graph(std::span<const TripleRecord> triples, IngestionConfig config = {});

/// Returns the graph with every edge (u,v,L) replaced by (v,u,L); vertex
/// labels and terms are unchanged. Involution up to structural equality.
LabeledGraph invert(const LabeledGraph& g);

/// Term-keyed structural equality: same terms with the same kinds and label
/// sets, and the same labeled edges, irrespective of internal id assignment.
bool structurally_equal(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace gsum
