#include "gsum/oracle.hpp"

#include <algorithm>
#include <map>

namespace gsum {

namespace {

using ClassId = std::uint32_t;

// One refinement step: the new class of v is (old class of v, set of
// neighbor descriptors), where a descriptor is the neighbor's old class,
// optionally tagged with the edge symbol.
std::vector<ClassId> refine_once(const LabeledGraph& g,
                                 const std::vector<ClassId>& cls,
                                 bool use_successors, bool use_edge_labels) {
    const std::size_t n = g.vertex_count();
    std::map<std::vector<std::uint64_t>, ClassId> ids;
    std::vector<ClassId> next(n);
    std::vector<std::uint64_t> key;
    for (VertexId v = 0; v < n; v++) {
        key.clear();
        key.push_back(cls[v]);
        auto neighbors = use_successors ? g.out_neighbors(v) : g.in_neighbors(v);
        std::vector<std::uint64_t> items;
        for (const Neighbor& nb : neighbors) {
            if (!use_edge_labels) {
                items.push_back(cls[nb.vertex]);
            } else if (g.per_label_signatures()) {
                for (LabelId l : g.dict().edge.set_members(nb.labels))
                    items.push_back((std::uint64_t(l) << 32) | cls[nb.vertex]);
            } else {
                items.push_back((std::uint64_t(nb.labels) << 32) | cls[nb.vertex]);
            }
        }
        std::sort(items.begin(), items.end());
        items.erase(std::unique(items.begin(), items.end()), items.end());
        key.insert(key.end(), items.begin(), items.end());
        auto [it, inserted] = ids.emplace(key, ClassId(ids.size()));
        next[v] = it->second;
    }
    return next;
}

std::vector<ClassId> initial_classes(const LabeledGraph& g, OracleVariant variant) {
    const std::size_t n = g.vertex_count();
    if (variant == OracleVariant::VertexLabeledBackward) {
        std::vector<ClassId> cls(n);
        for (VertexId v = 0; v < n; v++) cls[v] = g.vertex_label_set(v);
        return cls;
    }
    return std::vector<ClassId>(n, 0);
}

}  // namespace

std::vector<Partition> oracle_levels(const LabeledGraph& g, unsigned k, OracleVariant variant) {
    const bool successors = variant == OracleVariant::Forward ||
                            variant == OracleVariant::EdgeLabeledForward;
    const bool labeled = variant == OracleVariant::EdgeLabeledForward;

    std::vector<Partition> levels;
    std::vector<ClassId> cls = initial_classes(g, variant);
    levels.push_back(Partition::from_assignment(std::span<const std::uint32_t>(cls)));
    for (unsigned i = 0; i < k; i++) {
        cls = refine_once(g, cls, successors, labeled);
        levels.push_back(Partition::from_assignment(std::span<const std::uint32_t>(cls)));
    }
    return levels;
}

Partition oracle_forward(const LabeledGraph& g, unsigned k) {
    return std::move(oracle_levels(g, k, OracleVariant::Forward).back());
}

Partition oracle_backward(const LabeledGraph& g, unsigned k) {
    return std::move(oracle_levels(g, k, OracleVariant::Backward).back());
}

Partition oracle_edge_labeled_forward(const LabeledGraph& g, unsigned k) {
    return std::move(oracle_levels(g, k, OracleVariant::EdgeLabeledForward).back());
}

Partition oracle_vertex_labeled_backward(const LabeledGraph& g, unsigned k) {
    return std::move(oracle_levels(g, k, OracleVariant::VertexLabeledBackward).back());
}

}  // namespace gsum
