#include "gsum/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gsum {

namespace {

const char* kind_name(TermKind k) {
    switch (k) {
        case TermKind::Iri: return "IRI";
        case TermKind::Literal: return "literal";
        case TermKind::Blank: return "blank node";
    }
    return "?";
}

void require_valid_iri(const std::string& iri, const char* what) {
    bool ok = !iri.empty() && iri.find(':') != std::string::npos;
    for (char c : iri) {
        if (c == '<' || c == '>' || c == '"' || c == ' ' || c == '\t' ||
            c == '\n' || (unsigned char)c < 0x20) {
            ok = false;
            break;
        }
    }
    if (!ok) throw std::invalid_argument(std::string(what) + " is not a valid IRI: '" + iri + "'");
}

std::uint64_t pair_key(VertexId s, VertexId t) {
    return (std::uint64_t(s) << 32) | std::uint64_t(t);
}

}  // namespace

std::optional<VertexId> LabeledGraph::find_term(std::string_view term) const {
    auto it = term_to_id_.find(term);
    if (it == term_to_id_.end()) return std::nullopt;
    return it->second;
}

std::string LabeledGraph::display_term(VertexId v) const {
    switch (term_kinds_[v]) {
        case TermKind::Iri: return "<" + terms_[v] + ">";
        case TermKind::Blank: return terms_[v];       // stored as _:label
        case TermKind::Literal: return terms_[v];     // stored in quoted form
    }
    return terms_[v];
}

void LabeledGraph::check_invariants() const {
    const std::size_t n = vertex_count();
    if (out_offsets_.size() != n + 1 || in_offsets_.size() != n + 1)
        throw std::logic_error("adjacency offsets do not match vertex count");

    std::set<std::pair<VertexId, VertexId>> seen;
    std::vector<std::tuple<VertexId, VertexId, LabelSetId>> fwd, rev;
    for (const Edge& e : edges_) {
        if (e.source >= n || e.target >= n)
            throw std::logic_error("edge endpoint out of range");
        if (!seen.insert({e.source, e.target}).second)
            throw std::logic_error("duplicate edge record for an ordered pair");
        if (e.labels == LabelInterner::kEmptySet)
            throw std::logic_error("edge with empty label set");
        dict_.edge.set_members(e.labels);  // throws if unresolvable
        fwd.emplace_back(e.source, e.target, e.labels);
    }
    for (VertexId v = 0; v < n; v++) {
        dict_.vertex.set_members(vertex_labels_[v]);
        for (const Neighbor& nb : out_neighbors(v))
            rev.emplace_back(v, nb.vertex, nb.labels);
    }
    std::sort(fwd.begin(), fwd.end());
    std::sort(rev.begin(), rev.end());
    if (fwd != rev) throw std::logic_error("out-adjacency does not match edge list");

    rev.clear();
    for (VertexId v = 0; v < n; v++)
        for (const Neighbor& nb : in_neighbors(v))
            rev.emplace_back(nb.vertex, v, nb.labels);
    std::sort(rev.begin(), rev.end());
    if (fwd != rev) throw std::logic_error("in-adjacency does not match edge list");
}

GraphBuilder::GraphBuilder(IngestionConfig config) : config_(std::move(config)) {
    require_valid_iri(config_.type_predicate, "type predicate");
    graph_.per_label_signatures_ = config_.explode_label_sets;
}

VertexId GraphBuilder::intern_term(std::string_view term, TermKind kind) {
    auto it = graph_.term_to_id_.find(term);
    if (it != graph_.term_to_id_.end()) {
        VertexId id = it->second;
        if (graph_.term_kinds_[id] != kind)
            throw IngestError("term '" + std::string(term) + "' used as both " +
                              kind_name(graph_.term_kinds_[id]) + " and " + kind_name(kind));
        return id;
    }
    VertexId id = static_cast<VertexId>(graph_.terms_.size());
    graph_.terms_.emplace_back(term);
    graph_.term_kinds_.push_back(kind);
    graph_.term_to_id_.emplace(graph_.terms_.back(), id);
    pending_vertex_labels_.emplace_back();
    return id;
}

VertexId GraphBuilder::add_vertex(std::string_view term, TermKind kind) {
    return intern_term(term, kind);
}

void GraphBuilder::add_triple(std::string_view subject, TermKind subject_kind,
                              std::string_view predicate,
                              std::string_view object, TermKind object_kind) {
    if (predicate == config_.type_predicate) {
        // Type statement: the object is a vertex label of the subject, not a vertex.
        VertexId s = intern_term(subject, subject_kind);
        LabelId label = graph_.dict_.vertex.intern_label(object);
        pending_vertex_labels_[s].push_back(label);
        return;
    }
    VertexId s = intern_term(subject, subject_kind);
    VertexId o = intern_term(object, object_kind);
    LabelId p = graph_.dict_.edge.intern_label(predicate);
    pending_edges_[pair_key(s, o)].push_back(p);
}

LabeledGraph GraphBuilder::finish() {
    const std::size_t n = graph_.terms_.size();

    // Literal vertices carry the configured literal label.
    std::optional<LabelId> literal_label;
    for (VertexId v = 0; v < n; v++) {
        if (graph_.term_kinds_[v] == TermKind::Literal) {
            if (!literal_label)
                literal_label = graph_.dict_.vertex.intern_label(config_.literal_label);
            pending_vertex_labels_[v].push_back(*literal_label);
        }
    }

    graph_.vertex_labels_.resize(n);
    for (VertexId v = 0; v < n; v++)
        graph_.vertex_labels_[v] = graph_.dict_.vertex.intern_set(std::move(pending_vertex_labels_[v]));
    pending_vertex_labels_.clear();

    graph_.edges_.reserve(pending_edges_.size());
    for (auto& [key, labels] : pending_edges_) {
        Edge e;
        e.source = static_cast<VertexId>(key >> 32);
        e.target = static_cast<VertexId>(key & 0xffffffffu);
        e.labels = graph_.dict_.edge.intern_set(std::move(labels));
        graph_.edges_.push_back(e);
    }
    pending_edges_.clear();
    std::sort(graph_.edges_.begin(), graph_.edges_.end(),
              [](const Edge& a, const Edge& b) {
                  return std::pair(a.source, a.target) < std::pair(b.source, b.target);
              });

    // CSR adjacency in both directions.
    graph_.out_offsets_.assign(n + 1, 0);
    graph_.in_offsets_.assign(n + 1, 0);
    for (const Edge& e : graph_.edges_) {
        graph_.out_offsets_[e.source + 1]++;
        graph_.in_offsets_[e.target + 1]++;
    }
    for (std::size_t v = 0; v < n; v++) {
        graph_.out_offsets_[v + 1] += graph_.out_offsets_[v];
        graph_.in_offsets_[v + 1] += graph_.in_offsets_[v];
    }
    graph_.out_adj_.resize(graph_.edges_.size());
    graph_.in_adj_.resize(graph_.edges_.size());
    std::vector<std::uint64_t> out_pos(graph_.out_offsets_.begin(), graph_.out_offsets_.end() - 1);
    std::vector<std::uint64_t> in_pos(graph_.in_offsets_.begin(), graph_.in_offsets_.end() - 1);
    for (const Edge& e : graph_.edges_) {
        graph_.out_adj_[out_pos[e.source]++] = Neighbor{e.target, e.labels};
        graph_.in_adj_[in_pos[e.target]++] = Neighbor{e.source, e.labels};
    }

    LabeledGraph result = std::move(graph_);
    graph_ = LabeledGraph{};
    graph_.per_label_signatures_ = config_.explode_label_sets;
    return result;
}

LabeledGraph build_graph(std::span<const TripleRecord> triples, IngestionConfig config) {
    GraphBuilder builder(std::move(config));
    for (const TripleRecord& t : triples)
        builder.add_triple(t.subject, t.subject_kind, t.predicate, t.object, t.object_kind);
    return builder.finish();
}

LabeledGraph invert(const LabeledGraph& g) {
    LabeledGraph r;
    r.terms_ = g.terms_;
    r.term_kinds_ = g.term_kinds_;
    r.vertex_labels_ = g.vertex_labels_;
    r.dict_ = g.dict_;
    r.per_label_signatures_ = g.per_label_signatures_;
    for (VertexId v = 0; v < r.terms_.size(); v++)
        r.term_to_id_.emplace(r.terms_[v], v);

    r.edges_.reserve(g.edges_.size());
    for (const Edge& e : g.edges_)
        r.edges_.push_back(Edge{e.target, e.source, e.labels});
    std::sort(r.edges_.begin(), r.edges_.end(),
              [](const Edge& a, const Edge& b) {
                  return std::pair(a.source, a.target) < std::pair(b.source, b.target);
              });

    // The reversed adjacency is the original with directions swapped.
    const std::size_t n = g.vertex_count();
    r.out_offsets_.assign(n + 1, 0);
    r.in_offsets_.assign(n + 1, 0);
    for (const Edge& e : r.edges_) {
        r.out_offsets_[e.source + 1]++;
        r.in_offsets_[e.target + 1]++;
    }
    for (std::size_t v = 0; v < n; v++) {
        r.out_offsets_[v + 1] += r.out_offsets_[v];
        r.in_offsets_[v + 1] += r.in_offsets_[v];
    }
    r.out_adj_.resize(r.edges_.size());
    r.in_adj_.resize(r.edges_.size());
    std::vector<std::uint64_t> out_pos(r.out_offsets_.begin(), r.out_offsets_.end() - 1);
    std::vector<std::uint64_t> in_pos(r.in_offsets_.begin(), r.in_offsets_.end() - 1);
    for (const Edge& e : r.edges_) {
        r.out_adj_[out_pos[e.source]++] = Neighbor{e.target, e.labels};
        r.in_adj_[in_pos[e.target]++] = Neighbor{e.source, e.labels};
    }
    return r;
}

bool structurally_equal(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;

    auto label_strings = [](const LabeledGraph& g, VertexId v) {
        std::vector<std::string> out;
        for (LabelId id : g.dict().vertex.set_members(g.vertex_label_set(v)))
            out.push_back(g.dict().vertex.label_name(id));
        std::sort(out.begin(), out.end());
        return out;
    };

    for (VertexId v = 0; v < a.vertex_count(); v++) {
        auto w = b.find_term(a.term(v));
        if (!w) return false;
        if (a.term_kind(v) != b.term_kind(*w)) return false;
        if (label_strings(a, v) != label_strings(b, *w)) return false;
    }

    auto edge_map = [](const LabeledGraph& g) {
        std::map<std::pair<std::string, std::string>, std::vector<std::string>> m;
        for (const Edge& e : g.edges()) {
            std::vector<std::string> labels;
            for (LabelId id : g.dict().edge.set_members(e.labels))
                labels.push_back(g.dict().edge.label_name(id));
            std::sort(labels.begin(), labels.end());
            m.emplace(std::pair(g.term(e.source), g.term(e.target)), std::move(labels));
        }
        return m;
    };
    return edge_map(a) == edge_map(b);
}

}  // namespace gsum
