#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "gsum/generator.hpp"
#include "gsum/graph.hpp"
#include "gsum/ntriples.hpp"
#include "gsum/oracle.hpp"
#include "gsum/partition.hpp"

namespace testutil {

using namespace gsum;

inline std::string golden_path(const std::string& name) {
    return std::string(GSUM_GOLDEN_DIR) + "/" + name;
}

inline std::string read_golden(const std::string& name) {
    std::ifstream in(golden_path(name), std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline LabeledGraph load_university() {
    return parse_ntriples_file(golden_path("university.nt"));
}

struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed) : state(seed * 0x9e3779b97f4a7c15ULL + 1) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

/// Random labeled graph with varied shape, driven by one seed.
inline LabeledGraph random_graph(std::uint64_t seed, std::uint32_t max_vertices = 200,
                                 std::uint64_t max_edges = 1000) {
    TestRng rng(seed);
    GeneratorParams params;
    params.vertex_count = 1 + std::uint32_t(rng.below(max_vertices));
    std::uint64_t cap = std::min<std::uint64_t>(
        max_edges, std::uint64_t(params.vertex_count) * params.vertex_count);
    params.edge_count = rng.below(cap + 1);
    params.edge_label_alphabet = 1 + std::uint32_t(rng.below(5));
    params.vertex_label_alphabet = 1 + std::uint32_t(rng.below(5));
    params.max_labels_per_vertex = std::uint32_t(rng.below(3));
    params.degree_skew = double(rng.below(100)) / 100.0;
    params.seed = rng.next();
    return generate_synthetic(params);
}

/// Random partition of the graph's vertices into at most max_blocks groups.
inline Partition random_partition(std::size_t n, std::size_t max_blocks, TestRng& rng) {
    std::vector<std::uint32_t> keys(n);
    for (std::size_t v = 0; v < n; v++)
        keys[v] = std::uint32_t(rng.below(std::max<std::size_t>(1, max_blocks)));
    return Partition::from_assignment(std::span<const std::uint32_t>(keys));
}

/// Test-only second oracle: memoized pairwise recursion of the edge-labeled
/// forward k-bisimulation, matching in both directions.
class PairwiseEdgeLabeledForward {
public:
    explicit PairwiseEdgeLabeledForward(const LabeledGraph& g) : g_(g) {}

    bool related(VertexId u, VertexId v, unsigned k) {
        if (k == 0) return true;
        auto key = std::tuple(u, v, k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        // recursion strictly decreases k, so there is no reentry on `key`
        bool value = related(u, v, k - 1) && matches(u, v, k) && matches(v, u, k);
        memo_[key] = value;
        return value;
    }

    Partition partition(unsigned k) {
        std::vector<std::uint32_t> cls(g_.vertex_count());
        std::vector<VertexId> reps;
        for (VertexId v = 0; v < g_.vertex_count(); v++) {
            bool placed = false;
            for (std::size_t r = 0; r < reps.size(); r++) {
                if (related(reps[r], v, k)) {
                    cls[v] = std::uint32_t(r);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                cls[v] = std::uint32_t(reps.size());
                reps.push_back(v);
            }
        }
        return Partition::from_assignment(std::span<const std::uint32_t>(cls));
    }

private:
    bool matches(VertexId u, VertexId v, unsigned k) {
        for (const Neighbor& un : g_.out_neighbors(u)) {
            bool found = false;
            for (const Neighbor& vn : g_.out_neighbors(v)) {
                if (un.labels == vn.labels && related(un.vertex, vn.vertex, k - 1)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    }

    const LabeledGraph& g_;
    std::map<std::tuple<VertexId, VertexId, unsigned>, bool> memo_;
};

/// Test-only forward analog of the vertex-labeled backward bisimulation:
/// label partition at level 0, refinement over successors.
inline Partition vertex_labeled_forward(const LabeledGraph& g, unsigned k) {
    std::vector<std::uint32_t> cls(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); v++) cls[v] = g.vertex_label_set(v);
    for (unsigned level = 0; level < k; level++) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
        std::vector<std::uint32_t> next(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); v++) {
            std::vector<std::uint32_t> key{cls[v]};
            std::vector<std::uint32_t> succ;
            for (const Neighbor& nb : g.out_neighbors(v)) succ.push_back(cls[nb.vertex]);
            std::sort(succ.begin(), succ.end());
            succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
            key.insert(key.end(), succ.begin(), succ.end());
            auto [it, _] = ids.emplace(key, std::uint32_t(ids.size()));
            next[v] = it->second;
        }
        cls = std::move(next);
    }
    return Partition::from_assignment(std::span<const std::uint32_t>(cls));
}

}  // namespace testutil
