#include "gsum/schaetzle.hpp"

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

void build_signature(VertexId v, const LabeledGraph& g, std::span<const Hash128> ids,
                     Signature& out) {
    out.clear();
    for (const Neighbor& nb : g.out_neighbors(v)) {
        if (g.per_label_signatures()) {
            for (LabelId l : g.dict().edge.set_members(nb.labels))
                out.push_back(SignatureEntry{l, ids[nb.vertex]});
        } else {
            out.push_back(SignatureEntry{nb.labels, ids[nb.vertex]});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

Hash128 hash_signature(const Signature& sig, std::vector<std::uint8_t>& scratch) {
    scratch.clear();
    scratch.reserve(sig.size() * 20);
    for (const SignatureEntry& e : sig) {
        std::uint8_t rec[20];
        std::memcpy(rec, &e.symbol, 4);
        std::memcpy(rec + 4, &e.block.hi, 8);
        std::memcpy(rec + 12, &e.block.lo, 8);
        scratch.insert(scratch.end(), rec, rec + 20);
    }
    return hash_bytes(scratch.data(), scratch.size());
}

std::size_t distinct_count(std::vector<Hash128> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids.size();
}

// Exact mode: hash-equal vertices must have byte-equal canonical signatures.
void check_collisions(const LabeledGraph& g, std::span<const Hash128> prev,
                      std::span<const Hash128> next) {
    std::unordered_map<Hash128, std::pair<VertexId, Signature>, Hash128Hasher> first;
    Signature sig;
    for (VertexId v = 0; v < g.vertex_count(); v++) {
        build_signature(v, g, prev, sig);
        auto it = first.find(next[v]);
        if (it == first.end()) {
            first.emplace(next[v], std::pair{v, sig});
        } else if (it->second.second != sig) {
            throw HashCollisionError("signature hash collision between '" +
                                     g.term(it->second.first) + "' and '" + g.term(v) + "'");
        }
    }
}

}  // namespace

Signature signature_of(VertexId v, const LabeledGraph& g, std::span<const Hash128> ids) {
    Signature sig;
    build_signature(v, g, ids, sig);
    return sig;
}

PartitionTrace bisim_schaetzle(const LabeledGraph& g, unsigned k, const RunOptions& opts) {
    const std::size_t n = g.vertex_count();
    PartitionTrace trace;

    auto init_start = Clock::now();
    std::vector<Hash128> ids(n, Hash128{});  // all vertices in one block
    std::vector<Hash128> next_ids(n);
    trace.initial_block_count = n == 0 ? 0 : 1;
    trace.init_seconds = seconds_since(init_start);
    if (opts.capture_partitions) trace.initial_partition = Partition::single_block(n);

    std::size_t prev_count = trace.initial_block_count;
    for (unsigned i = 1; i <= k; i++) {
        auto iter_start = Clock::now();
        parallel_for(n, opts.threads, [&](std::size_t begin, std::size_t end) {
            Signature sig;
            std::vector<std::uint8_t> scratch;
            for (std::size_t v = begin; v < end; v++) {
                build_signature(static_cast<VertexId>(v), g, ids, sig);
                next_ids[v] = hash_signature(sig, scratch);
            }
        });
        std::size_t count = distinct_count(next_ids);
        trace.iteration_seconds.push_back(seconds_since(iter_start));
        trace.block_counts.push_back(count);
        trace.iterations_executed = i;

        if (opts.exact_mode) check_collisions(g, ids, next_ids);
        ids.swap(next_ids);
        if (opts.capture_partitions)
            trace.iteration_partitions.push_back(Partition::from_assignment(std::span<const Hash128>(ids)));

        if (count == prev_count) {
            // Blocks can be split but never merged, so an unchanged count
            // means full bisimulation is reached.
            trace.terminated_early = true;
            if (!opts.force_full_k) break;
        }
        prev_count = count;
    }

    // Grouping by identifier is part of the run; account it with the last
    // iteration so iteration times sum to the measured total.
    auto group_start = Clock::now();
    trace.final_partition = Partition::from_assignment(std::span<const Hash128>(ids));
    double group_seconds = seconds_since(group_start);
    if (!trace.iteration_seconds.empty())
        trace.iteration_seconds.back() += group_seconds;
    else
        trace.init_seconds += group_seconds;
    return trace;
}

}  // namespace gsum
