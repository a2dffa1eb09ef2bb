#include "gsum/stats.hpp"

#include <cmath>
#include <cstdio>
#include <unordered_set>
#include <vector>

namespace gsum {

namespace {

struct MeanSd {
    double mean = 0;
    double sd = 0;
};

MeanSd mean_sd(const std::vector<std::size_t>& xs) {
    if (xs.empty()) return {};
    double sum = 0, sumsq = 0;
    for (std::size_t x : xs) {
        sum += double(x);
        sumsq += double(x) * double(x);
    }
    double mean = sum / double(xs.size());
    double var = sumsq / double(xs.size()) - mean * mean;
    return {mean, std::sqrt(var > 0 ? var : 0)};
}

}  // namespace

GraphStats compute_statistics(const LabeledGraph& g) {
    GraphStats s;
    const std::size_t n = g.vertex_count();
    s.vertex_count = n;
    s.vertex_label_count = g.dict().vertex.label_count();
    s.edge_label_count = g.dict().edge.label_count();
    s.edge_record_count = g.edge_count();

    std::vector<std::size_t> label_sizes(n, 0);
    std::unordered_set<LabelSetId> label_sets;
    for (VertexId v = 0; v < n; v++) {
        label_sizes[v] = g.dict().vertex.set_members(g.vertex_label_set(v)).size();
        label_sets.insert(g.vertex_label_set(v));
    }
    s.vertex_label_set_count = label_sets.size();
    auto lm = mean_sd(label_sizes);
    s.mean_labels_per_vertex = lm.mean;
    s.sd_labels_per_vertex = lm.sd;

    std::vector<std::size_t> deg_in(n, 0), deg_out(n, 0), deg_total(n, 0);
    for (const Edge& e : g.edges()) {
        std::size_t weight = g.dict().edge.set_members(e.labels).size();
        s.triple_count += weight;
        deg_out[e.source] += weight;
        deg_in[e.target] += weight;
        deg_total[e.source] += weight;
        if (e.source != e.target) deg_total[e.target] += weight;
    }

    auto fill = [](const std::vector<std::size_t>& d, double& mean, double& sd, std::size_t& mx) {
        auto m = mean_sd(d);
        mean = m.mean;
        sd = m.sd;
        mx = 0;
        for (std::size_t x : d) mx = std::max(mx, x);
    };
    fill(deg_total, s.mean_degree, s.sd_degree, s.max_degree);
    fill(deg_in, s.mean_in_degree, s.sd_in_degree, s.max_in_degree);
    fill(deg_out, s.mean_out_degree, s.sd_out_degree, s.max_out_degree);
    return s;
}

std::string format_statistics(const GraphStats& s) {
    char buf[256];
    std::string out;
    auto line = [&](const char* fmt, auto... args) {
        std::snprintf(buf, sizeof(buf), fmt, args...);
        out += buf;
        out += '\n';
    };
    line("vertices              %zu", s.vertex_count);
    line("triples               %zu", s.triple_count);
    line("edge records          %zu", s.edge_record_count);
    line("vertex labels         %zu", s.vertex_label_count);
    line("vertex label sets     %zu", s.vertex_label_set_count);
    line("labels per vertex     %.4f +- %.4f", s.mean_labels_per_vertex, s.sd_labels_per_vertex);
    line("edge labels           %zu", s.edge_label_count);
    line("degree                %.4f +- %.4f (max %zu)", s.mean_degree, s.sd_degree, s.max_degree);
    line("in-degree             %.4f +- %.4f (max %zu)", s.mean_in_degree, s.sd_in_degree, s.max_in_degree);
    line("out-degree            %.4f +- %.4f (max %zu)", s.mean_out_degree, s.sd_out_degree, s.max_out_degree);
    return out;
}

}  // namespace gsum
