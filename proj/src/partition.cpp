#include "gsum/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsum {

namespace {

void require_same_universe(const Partition& a, const Partition& b) {
    if (a.vertex_count() != b.vertex_count())
        throw std::invalid_argument("partitions cover different vertex counts");
}

template <class Key, class Hasher>
Partition group_by_key(std::span<const Key> keys, const Hasher& hasher) {
    Partition p;
    p.block_of.resize(keys.size());
    std::unordered_map<Key, BlockId, Hasher> ids(0, hasher);
    ids.reserve(keys.size());
    for (std::size_t v = 0; v < keys.size(); v++) {
        auto [it, inserted] = ids.emplace(keys[v], static_cast<BlockId>(p.blocks.size()));
        if (inserted) p.blocks.emplace_back();
        p.block_of[v] = it->second;
        p.blocks[it->second].push_back(static_cast<VertexId>(v));
    }
    return p;
}

}  // namespace

Partition Partition::single_block(std::size_t n) {
    Partition p;
    if (n == 0) return p;
    p.block_of.assign(n, 0);
    p.blocks.emplace_back();
    p.blocks[0].reserve(n);
    for (std::size_t v = 0; v < n; v++) p.blocks[0].push_back(static_cast<VertexId>(v));
    return p;
}

Partition Partition::singletons(std::size_t n) {
    Partition p;
    p.block_of.resize(n);
    p.blocks.resize(n);
    for (std::size_t v = 0; v < n; v++) {
        p.block_of[v] = static_cast<BlockId>(v);
        p.blocks[v] = {static_cast<VertexId>(v)};
    }
    return p;
}

Partition Partition::from_assignment(std::span<const std::uint32_t> keys) {
    return group_by_key(keys, std::hash<std::uint32_t>{});
}

// Sort-based grouping: blocks are numbered in key order. Cheaper than a hash
// map at millions of vertices, where this runs once per algorithm run.
Partition Partition::from_assignment(std::span<const Hash128> keys) {
    Partition p;
    p.block_of.resize(keys.size());
    if (keys.empty()) return p;

    std::vector<Hash128> uniq(keys.begin(), keys.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

    std::vector<std::uint32_t> sizes(uniq.size(), 0);
    for (std::size_t v = 0; v < keys.size(); v++) {
        auto it = std::lower_bound(uniq.begin(), uniq.end(), keys[v]);
        BlockId id = static_cast<BlockId>(it - uniq.begin());
        p.block_of[v] = id;
        sizes[id]++;
    }
    p.blocks.resize(uniq.size());
    for (std::size_t b = 0; b < uniq.size(); b++) p.blocks[b].reserve(sizes[b]);
    for (std::size_t v = 0; v < keys.size(); v++)
        p.blocks[p.block_of[v]].push_back(static_cast<VertexId>(v));
    return p;
}

void Partition::check_invariants() const {
    std::vector<bool> seen(vertex_count(), false);
    for (std::size_t b = 0; b < blocks.size(); b++) {
        if (blocks[b].empty()) throw std::logic_error("empty block");
        for (VertexId v : blocks[b]) {
            if (v >= vertex_count()) throw std::logic_error("member out of range");
            if (seen[v]) throw std::logic_error("vertex in two blocks");
            seen[v] = true;
            if (block_of[v] != b) throw std::logic_error("block_of inconsistent with membership");
        }
    }
    for (std::size_t v = 0; v < vertex_count(); v++)
        if (!seen[v]) throw std::logic_error("vertex in no block");
}

bool is_refinement(const Partition& fine, const Partition& coarse) {
    require_same_universe(fine, coarse);
    for (const auto& block : fine.blocks) {
        BlockId home = coarse.block_of[block.front()];
        for (VertexId v : block)
            if (coarse.block_of[v] != home) return false;
    }
    return true;
}

bool partitions_equal(const Partition& a, const Partition& b) {
    return is_refinement(a, b) && is_refinement(b, a);
}

std::vector<std::uint64_t> successor_bitset(std::span<const VertexId> splitter,
                                            const LabeledGraph& g) {
    std::vector<std::uint64_t> bits((g.vertex_count() + 63) / 64, 0);
    for (VertexId v : splitter)
        for (const Neighbor& nb : g.out_neighbors(v))
            bits[nb.vertex >> 6] |= std::uint64_t(1) << (nb.vertex & 63);
    return bits;
}

bool is_stable(const Partition& p, std::span<const VertexId> splitter, const LabeledGraph& g) {
    if (p.vertex_count() != g.vertex_count())
        throw std::invalid_argument("partition does not cover the graph");
    if (p.vertex_count() == 0) return true;
    auto bits = successor_bitset(splitter, g);
    for (const auto& block : p.blocks) {
        bool first = bitset_test(bits, block.front());
        for (VertexId v : block)
            if (bitset_test(bits, v) != first) return false;
    }
    return true;
}

Partition split(std::span<const VertexId> splitter, const Partition& p, const LabeledGraph& g) {
    if (p.vertex_count() != g.vertex_count())
        throw std::invalid_argument("partition does not cover the graph");
    Partition r;
    r.block_of.resize(p.vertex_count());
    if (p.vertex_count() == 0) return r;

    auto bits = successor_bitset(splitter, g);
    std::vector<VertexId> succ, non_succ;
    for (const auto& block : p.blocks) {
        succ.clear();
        non_succ.clear();
        for (VertexId v : block)
            (bitset_test(bits, v) ? succ : non_succ).push_back(v);
        auto emit = [&](const std::vector<VertexId>& members) {
            if (members.empty()) return;
            BlockId id = static_cast<BlockId>(r.blocks.size());
            for (VertexId v : members) r.block_of[v] = id;
            r.blocks.push_back(members);
        };
        emit(succ);
        emit(non_succ);
    }
    return r;
}

std::string canonical_export(const Partition& p, const LabeledGraph& g) {
    std::vector<std::vector<std::string>> rendered;
    rendered.reserve(p.block_count());
    for (const auto& block : p.blocks) {
        std::vector<std::string> terms;
        terms.reserve(block.size());
        for (VertexId v : block) terms.push_back(g.display_term(v));
        std::sort(terms.begin(), terms.end());
        rendered.push_back(std::move(terms));
    }
    std::sort(rendered.begin(), rendered.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::string out;
    for (const auto& block : rendered) {
        for (std::size_t i = 0; i < block.size(); i++) {
            if (i) out += ' ';
            out += block[i];
        }
        out += '\n';
    }
    return out;
}

}  // namespace gsum
