#include "gsum/brs.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <unordered_map>

#include "gsum/parallel.hpp"

namespace gsum {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Domain-separation keys so the three atom kinds can never alias.
constexpr std::uint64_t kTautologyKey = 0x7461757400000001ULL;
constexpr std::uint64_t kIdentityKey = 0x6964656e00000002ULL;
constexpr std::uint64_t kLabelKey = 0x6c61626c00000003ULL;

void serialize_messages(std::vector<BrsMessage>& messages, std::vector<std::uint8_t>& bytes) {
    std::sort(messages.begin(), messages.end());
    messages.erase(std::unique(messages.begin(), messages.end()), messages.end());
    bytes.clear();
    bytes.reserve(messages.size() * 20);
    for (const BrsMessage& m : messages) {
        std::uint8_t rec[20];
        std::memcpy(rec, &m.edge_schema, 4);
        std::memcpy(rec + 4, &m.id.hi, 8);
        std::memcpy(rec + 12, &m.id.lo, 8);
        bytes.insert(bytes.end(), rec, rec + 20);
    }
}

Hash128 fold_messages(std::vector<BrsMessage>& messages, std::vector<std::uint8_t>& bytes) {
    serialize_messages(messages, bytes);
    return hash_bytes(bytes.data(), bytes.size());
}

std::size_t distinct_count(std::vector<Hash128> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids.size();
}

struct GsmParser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& message) {
        throw std::invalid_argument("summary-model spec '" + std::string(text) + "': " + message);
    }

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) pos++;
    }

    bool try_consume(std::string_view token) {
        skip_ws();
        if (text.substr(pos, token.size()) == token) {
            pos += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token) {
        if (!try_consume(token)) {
            skip_ws();
            std::string got = pos < text.size() ? std::string(text.substr(pos, 8)) : "end of input";
            fail("expected '" + std::string(token) + "', got '" + got + "'");
        }
    }

    RelationAtom parse_atom() {
        if (try_consume("id")) return RelationAtom::Identity;
        if (try_consume("T")) return RelationAtom::Tautology;
        if (try_consume("OC")) return RelationAtom::LabelEquality;
        skip_ws();
        std::string got = pos < text.size() ? std::string(text.substr(pos, 8)) : "end of input";
        fail("expected atom T, id, or OC, got '" + got + "'");
    }

    unsigned parse_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
            fail("expected a number for k");
        unsigned value = 0;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
            value = value * 10 + unsigned(text[pos++] - '0');
        return value;
    }
};

}  // namespace

std::string GsmSpec::to_string() const {
    auto atom = [](RelationAtom a) {
        switch (a) {
            case RelationAtom::Tautology: return "T";
            case RelationAtom::Identity: return "id";
            case RelationAtom::LabelEquality: return "OC";
        }
        return "?";
    };
    std::string triple = std::string(atom(subject_atom)) + "," + atom(predicate_atom) + "," +
                         atom(object_atom);
    std::string body = inverted ? "inv(" + triple + ")" : "(" + triple + ")";
    return "cp(" + body + ",k=" + std::to_string(chaining_depth) + ")";
}

GsmSpec parse_gsm_spec(std::string_view text) {
    GsmParser p{text};
    GsmSpec spec;
    p.expect("cp");
    p.expect("(");
    spec.inverted = p.try_consume("inv");
    p.expect("(");
    spec.subject_atom = p.parse_atom();
    p.expect(",");
    spec.predicate_atom = p.parse_atom();
    p.expect(",");
    spec.object_atom = p.parse_atom();
    p.expect(")");
    p.expect(",");
    p.expect("k");
    p.expect("=");
    spec.chaining_depth = p.parse_uint();
    p.expect(")");
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing content after spec");
    if (spec.predicate_atom == RelationAtom::LabelEquality)
        p.fail("the predicate atom must be T or id");
    return spec;
}

Hash128 vertex_schema(VertexId v, const LabeledGraph& g, RelationAtom atom) {
    switch (atom) {
        case RelationAtom::Tautology:
            return hash_bytes(nullptr, 0, kTautologyKey);
        case RelationAtom::Identity:
            return hash_string(g.term(v), kIdentityKey);
        case RelationAtom::LabelEquality: {
            auto members = g.dict().vertex.set_members(g.vertex_label_set(v));
            return hash_bytes(members.data(), members.size() * sizeof(LabelId), kLabelKey);
        }
    }
    throw std::invalid_argument("unknown relation atom");
}

Hash128 merge_and_hash(std::span<const BrsMessage> messages) {
    std::vector<BrsMessage> copy(messages.begin(), messages.end());
    std::vector<std::uint8_t> bytes;
    return fold_messages(copy, bytes);
}

PartitionTrace brs_summarize(const LabeledGraph& g, const GsmSpec& spec, const RunOptions& opts) {
    if (spec.predicate_atom == RelationAtom::LabelEquality)
        throw std::invalid_argument("the predicate atom must be T or id");

    const std::size_t n = g.vertex_count();
    const unsigned k = spec.chaining_depth;
    PartitionTrace trace;

    auto neighbors = [&](VertexId v) {
        return spec.inverted ? g.in_neighbors(v) : g.out_neighbors(v);
    };
    const bool labeled_schema = spec.predicate_atom == RelationAtom::Identity;

    auto init_start = Clock::now();
    std::vector<Hash128> id_s(n), id_o(n), next_s(n), next_o(n);
    parallel_for(n, opts.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t v = begin; v < end; v++) {
            id_s[v] = vertex_schema(static_cast<VertexId>(v), g, spec.subject_atom);
            id_o[v] = vertex_schema(static_cast<VertexId>(v), g, spec.object_atom);
        }
    });
    trace.initial_block_count = distinct_count(id_s);
    trace.init_seconds = seconds_since(init_start);
    if (opts.capture_partitions)
        trace.initial_partition = Partition::from_assignment(std::span<const Hash128>(id_s));

    if (opts.exact_mode) {
        // Initial identifiers must only coincide when the schema sources do.
        auto verify_init = [&](std::span<const Hash128> ids, RelationAtom atom) {
            if (atom == RelationAtom::Tautology) return;  // one shared constant
            std::unordered_map<Hash128, VertexId, Hash128Hasher> first;
            for (VertexId v = 0; v < n; v++) {
                auto [it, inserted] = first.emplace(ids[v], v);
                if (inserted) continue;
                VertexId w = it->second;
                bool same = atom == RelationAtom::Identity
                                ? g.term(w) == g.term(v)
                                : g.vertex_label_set(w) == g.vertex_label_set(v);
                if (!same)
                    throw HashCollisionError("initial identifier collision between '" +
                                             g.term(w) + "' and '" + g.term(v) + "'");
            }
        };
        verify_init(id_s, spec.subject_atom);
        verify_init(id_o, spec.object_atom);
    }

    // Exact mode keeps the (old id, folded messages) pre-image per new id;
    // equal ids with different pre-images mean a hash collision.
    auto verify = [&](std::span<const Hash128> next, std::span<const Hash128> old,
                      auto&& message_bytes) {
        std::unordered_map<Hash128, std::pair<VertexId, std::vector<std::uint8_t>>, Hash128Hasher>
            first;
        std::vector<std::uint8_t> bytes;
        for (VertexId v = 0; v < n; v++) {
            message_bytes(v, bytes);
            bytes.insert(bytes.end(), reinterpret_cast<const std::uint8_t*>(&old[v]),
                         reinterpret_cast<const std::uint8_t*>(&old[v]) + 16);
            auto it = first.find(next[v]);
            if (it == first.end()) {
                first.emplace(next[v], std::pair{v, bytes});
            } else if (it->second.second != bytes) {
                throw HashCollisionError("identifier collision between '" +
                                         g.term(it->second.first) + "' and '" + g.term(v) + "'");
            }
        }
    };

    std::size_t prev_count = trace.initial_block_count;
    for (unsigned round = 1; round <= k; round++) {
        const bool final_round = round == k;
        auto round_start = Clock::now();

        parallel_for(n, opts.threads, [&](std::size_t begin, std::size_t end) {
            std::vector<BrsMessage> msgs_s, msgs_o;
            std::vector<std::uint8_t> bytes;
            for (std::size_t v = begin; v < end; v++) {
                msgs_s.clear();
                msgs_o.clear();
                for (const Neighbor& nb : neighbors(static_cast<VertexId>(v))) {
                    auto push = [&](std::uint32_t schema) {
                        // The final round folds the neighbors' object-side
                        // identifiers into the subject side; earlier rounds
                        // advance both sides.
                        if (!final_round) msgs_s.push_back({schema, id_s[nb.vertex]});
                        msgs_o.push_back({schema, id_o[nb.vertex]});
                    };
                    if (!labeled_schema) {
                        push(0);
                    } else if (g.per_label_signatures()) {
                        for (LabelId l : g.dict().edge.set_members(nb.labels)) push(l);
                    } else {
                        push(nb.labels);
                    }
                }
                if (final_round) {
                    next_s[v] = mix(id_s[v], fold_messages(msgs_o, bytes));
                    next_o[v] = id_o[v];
                } else {
                    next_s[v] = mix(id_s[v], fold_messages(msgs_s, bytes));
                    next_o[v] = mix(id_o[v], fold_messages(msgs_o, bytes));
                }
            }
        });

        std::size_t count = distinct_count(next_s);
        trace.iteration_seconds.push_back(seconds_since(round_start));
        trace.block_counts.push_back(count);
        trace.iterations_executed = round;

        if (opts.exact_mode) {
            auto collect = [&](VertexId v, bool object_side, std::vector<std::uint8_t>& bytes) {
                std::vector<BrsMessage> msgs;
                for (const Neighbor& nb : neighbors(v)) {
                    auto push = [&](std::uint32_t schema) {
                        msgs.push_back({schema, object_side || final_round ? id_o[nb.vertex]
                                                                           : id_s[nb.vertex]});
                    };
                    if (!labeled_schema) {
                        push(0);
                    } else if (g.per_label_signatures()) {
                        for (LabelId l : g.dict().edge.set_members(nb.labels)) push(l);
                    } else {
                        push(nb.labels);
                    }
                }
                serialize_messages(msgs, bytes);
            };
            verify(next_s, id_s,
                   [&](VertexId v, std::vector<std::uint8_t>& b) { collect(v, false, b); });
            if (!final_round)
                verify(next_o, id_o,
                       [&](VertexId v, std::vector<std::uint8_t>& b) { collect(v, true, b); });
        }

        id_s.swap(next_s);
        id_o.swap(next_o);
        if (opts.capture_partitions)
            trace.iteration_partitions.push_back(
                Partition::from_assignment(std::span<const Hash128>(id_s)));

        if (count == prev_count) {
            trace.terminated_early = true;
            if (!opts.force_full_k) break;
        }
        prev_count = count;
    }

    auto group_start = Clock::now();
    trace.final_partition = Partition::from_assignment(std::span<const Hash128>(id_s));
    double group_seconds = seconds_since(group_start);
    if (!trace.iteration_seconds.empty())
        trace.iteration_seconds.back() += group_seconds;
    else
        trace.init_seconds += group_seconds;
    return trace;
}

SummaryGraph build_summary_graph(const Partition& p, const LabeledGraph& g) {
    if (p.vertex_count() != g.vertex_count())
        throw std::invalid_argument("partition does not cover the graph");
    SummaryGraph sg;
    sg.vertex_count = p.block_count();
    sg.edges.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        sg.edges.push_back(SummaryEdge{p.block_of[e.source], p.block_of[e.target], e.labels});
    std::sort(sg.edges.begin(), sg.edges.end());
    sg.edges.erase(std::unique(sg.edges.begin(), sg.edges.end()), sg.edges.end());
    return sg;
}

}  // namespace gsum
