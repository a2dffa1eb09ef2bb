#include "gsum/generator.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace gsum {

namespace {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    double unit() { return double(next() >> 11) * 0x1.0p-53; }
};

// Open-addressing set of (source<<32 | target) keys.
class PairSet {
public:
    explicit PairSet(std::uint64_t expected) {
        std::size_t cap = 16;
        while (cap < expected * 2) cap <<= 1;
        slots_.assign(cap, kEmpty);
        mask_ = cap - 1;
    }

    bool insert(std::uint64_t key) {
        std::uint64_t h = key;
        h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
        h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
        std::size_t i = h & mask_;
        while (slots_[i] != kEmpty) {
            if (slots_[i] == key) return false;
            i = (i + 1) & mask_;
        }
        slots_[i] = key;
        return true;
    }

private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t(0);
    std::vector<std::uint64_t> slots_;
    std::size_t mask_;
};

}  // namespace

LabeledGraph generate_synthetic(const GeneratorParams& params) {
    const std::uint64_t n = params.vertex_count;
    if (params.edge_count > 0 && n == 0)
        throw ConfigError("edges requested on an empty vertex set");
    if (params.edge_count > n * n)
        throw ConfigError("edge count exceeds vertex_count^2");
    if (params.edge_label_alphabet < 1 || params.vertex_label_alphabet < 1)
        throw ConfigError("label alphabet sizes must be at least 1");
    if (params.degree_skew < 0)
        throw ConfigError("degree skew must be non-negative");

    SplitMix64 rng(params.seed * 0x2545f4914f6cdd1dULL + 0x9e3779b97f4a7c15ULL);
    GraphBuilder builder;  // default config; generated graphs use plain IRIs

    std::vector<std::string> terms(n);
    for (std::uint64_t v = 0; v < n; v++) terms[v] = "urn:v" + std::to_string(v);

    std::vector<std::string> vertex_labels(params.vertex_label_alphabet);
    for (std::uint32_t i = 0; i < params.vertex_label_alphabet; i++)
        vertex_labels[i] = "urn:L" + std::to_string(i);
    std::vector<std::string> predicates(params.edge_label_alphabet);
    for (std::uint32_t i = 0; i < params.edge_label_alphabet; i++)
        predicates[i] = "urn:p" + std::to_string(i);

    const std::string type_predicate = IngestionConfig{}.type_predicate;

    // Materialize every vertex up front: ids follow rank order and the vertex
    // count is exact even for isolated vertices.
    for (std::uint64_t v = 0; v < n; v++)
        builder.add_vertex(terms[v], TermKind::Iri);

    // Vertex labels: 0..max_labels_per_vertex distinct labels each.
    const std::uint32_t max_labels =
        std::min(params.max_labels_per_vertex, params.vertex_label_alphabet);
    std::vector<std::uint32_t> chosen;
    for (std::uint64_t v = 0; v < n; v++) {
        std::uint32_t count = std::uint32_t(rng.below(max_labels + 1));
        chosen.clear();
        while (chosen.size() < count) {
            std::uint32_t l = std::uint32_t(rng.below(params.vertex_label_alphabet));
            if (std::find(chosen.begin(), chosen.end(), l) == chosen.end())
                chosen.push_back(l);
        }
        for (std::uint32_t l : chosen)
            builder.add_triple(terms[v], TermKind::Iri, type_predicate,
                               vertex_labels[l], TermKind::Iri);
    }

    // Skewed source sampling: cumulative weights (rank+1)^-skew.
    std::vector<double> cumulative;
    if (params.degree_skew > 0 && n > 0) {
        cumulative.resize(n);
        double total = 0;
        for (std::uint64_t i = 0; i < n; i++) {
            total += std::pow(double(i + 1), -params.degree_skew);
            cumulative[i] = total;
        }
    }
    auto pick_source = [&]() -> std::uint64_t {
        if (cumulative.empty()) return rng.below(n);
        double u = rng.unit() * cumulative.back();
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        return std::uint64_t(it - cumulative.begin()) < n
                   ? std::uint64_t(it - cumulative.begin())
                   : n - 1;
    };

    PairSet seen(params.edge_count + 1);
    std::uint64_t placed = 0;
    std::uint64_t attempts = 0;
    const std::uint64_t max_attempts = params.edge_count * 64 + 4096;
    while (placed < params.edge_count) {
        if (++attempts > max_attempts)
            throw ConfigError("could not place the requested number of distinct edges; "
                              "parameters are too dense for the skew");
        std::uint64_t s = pick_source();
        std::uint64_t t = rng.below(n);
        if (!seen.insert((s << 32) | t)) continue;
        placed++;
        std::uint32_t p = std::uint32_t(rng.below(params.edge_label_alphabet));
        builder.add_triple(terms[s], TermKind::Iri, predicates[p], terms[t], TermKind::Iri);
        // Occasionally attach a second predicate to the same pair so that
        // multi-label edge sets occur.
        if (params.edge_label_alphabet > 1 && rng.below(16) == 0) {
            std::uint32_t q = std::uint32_t(rng.below(params.edge_label_alphabet));
            if (q != p)
                builder.add_triple(terms[s], TermKind::Iri, predicates[q], terms[t], TermKind::Iri);
        }
    }

    return builder.finish();
}

}  // namespace gsum
