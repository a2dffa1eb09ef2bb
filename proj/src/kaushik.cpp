#include "gsum/kaushik.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <unordered_set>

namespace gsum {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Content identity of a block snapshot; member lists are kept sorted.
Hash128 block_content_hash(const std::vector<VertexId>& members) {
    return hash_bytes(members.data(), members.size() * sizeof(VertexId));
}

Partition to_partition(std::size_t n, const std::vector<std::vector<VertexId>>& blocks) {
    Partition p;
    p.block_of.resize(n);
    for (const auto& block : blocks) {
        if (block.empty()) continue;
        BlockId id = static_cast<BlockId>(p.blocks.size());
        for (VertexId v : block) p.block_of[v] = id;
        p.blocks.push_back(block);
    }
    return p;
}

}  // namespace

Partition label_partition(const LabeledGraph& g) {
    std::vector<std::uint32_t> keys(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); v++) keys[v] = g.vertex_label_set(v);
    return Partition::from_assignment(std::span<const std::uint32_t>(keys));
}

Partition naive_coarsest_partition(const Partition& p0, const LabeledGraph& g) {
    if (p0.vertex_count() != g.vertex_count())
        throw std::invalid_argument("initial partition does not cover the graph");
    Partition p = p0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t bi = 0; bi < p.block_count(); bi++) {
            std::vector<VertexId> splitter = p.blocks[bi];
            Partition refined = split(splitter, p, g);
            if (refined.block_count() != p.block_count()) {
                p = std::move(refined);
                changed = true;
            }
        }
    }
    return p;
}

PartitionTrace bisim_kaushik(const LabeledGraph& g, unsigned k, const RunOptions& opts) {
    const std::size_t n = g.vertex_count();
    PartitionTrace trace;

    auto init_start = Clock::now();
    Partition initial = label_partition(g);
    std::vector<std::vector<VertexId>> blocks = initial.blocks;
    trace.init_seconds = seconds_since(init_start);
    trace.initial_block_count = initial.block_count();
    if (opts.capture_partitions) trace.initial_partition = initial;

    // Snapshots are identified by content. Exact mode keeps the member lists
    // themselves instead of their hashes, so a ledger hit can never be a
    // collision.
    std::unordered_set<Hash128, Hash128Hasher> used_hashes;
    std::set<std::vector<VertexId>> used_exact;
    auto ledger_contains = [&](const std::vector<VertexId>& members) {
        return opts.exact_mode ? used_exact.count(members) > 0
                               : used_hashes.count(block_content_hash(members)) > 0;
    };
    auto ledger_add = [&](const std::vector<VertexId>& members) {
        if (opts.exact_mode)
            used_exact.insert(members);
        else
            used_hashes.insert(block_content_hash(members));
    };

    std::vector<std::uint64_t> bits((n + 63) / 64, 0);
    std::vector<VertexId> succ, non_succ;

    for (unsigned sweep = 1; sweep <= k; sweep++) {
        auto sweep_start = Clock::now();
        std::vector<std::vector<VertexId>> snapshot = blocks;
        bool was_split = false;

        for (const auto& splitter : snapshot) {
            if (opts.use_splitter_ledger && ledger_contains(splitter)) continue;

            std::fill(bits.begin(), bits.end(), 0);
            for (VertexId v : splitter)
                for (const Neighbor& nb : g.out_neighbors(v))
                    bits[nb.vertex >> 6] |= std::uint64_t(1) << (nb.vertex & 63);

            // Stabilize every current block against this splitter. Blocks
            // appended by earlier splitters of this sweep are included;
            // blocks this splitter creates are already stable w.r.t. it.
            std::size_t limit = blocks.size();
            for (std::size_t bi = 0; bi < limit; bi++) {
                auto& block = blocks[bi];
                if (block.empty()) continue;
                succ.clear();
                non_succ.clear();
                for (VertexId v : block)
                    (bitset_test(bits, v) ? succ : non_succ).push_back(v);
                if (!succ.empty() && !non_succ.empty()) {
                    block.clear();
                    blocks.emplace_back(succ);
                    blocks.emplace_back(non_succ);
                    was_split = true;
                }
            }
            ledger_add(splitter);
        }

        std::erase_if(blocks, [](const std::vector<VertexId>& b) { return b.empty(); });

        trace.iteration_seconds.push_back(seconds_since(sweep_start));
        trace.block_counts.push_back(blocks.size());
        trace.iterations_executed = sweep;
        if (opts.capture_partitions)
            trace.iteration_partitions.push_back(to_partition(n, blocks));

        if (!was_split) {
            trace.terminated_early = true;
            if (!opts.force_full_k) break;
        }
    }

    auto group_start = Clock::now();
    trace.final_partition = to_partition(n, blocks);
    double group_seconds = seconds_since(group_start);
    if (!trace.iteration_seconds.empty())
        trace.iteration_seconds.back() += group_seconds;
    else
        trace.init_seconds += group_seconds;
    return trace;
}

}  // namespace gsum
