#include "gsum/bench.hpp"

#include <chrono>
#include <cstdio>
#include <new>

#include <json.hpp>

#include "gsum/kaushik.hpp"
#include "gsum/memtrack.hpp"
#include "gsum/ntriples.hpp"
#include "gsum/oracle.hpp"
#include "gsum/partition.hpp"
#include "gsum/schaetzle.hpp"

namespace gsum {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct AlgorithmEntry {
    AlgorithmKind kind;
    const char* name;
};

constexpr AlgorithmEntry kAlgorithms[] = {
    {AlgorithmKind::NativeSchaetzle, "native-schaetzle"},
    {AlgorithmKind::NativeKaushik, "native-kaushik"},
    {AlgorithmKind::NaivePT, "naive-pt"},
    {AlgorithmKind::Brs, "brs"},
    {AlgorithmKind::OracleForward, "oracle-forward"},
    {AlgorithmKind::OracleBackward, "oracle-backward"},
    {AlgorithmKind::OracleEdgeLabeledForward, "oracle-edge-labeled-forward"},
    {AlgorithmKind::OracleVertexLabeledBackward, "oracle-vertex-labeled-backward"},
};

OracleVariant oracle_variant(AlgorithmKind kind) {
    switch (kind) {
        case AlgorithmKind::OracleForward: return OracleVariant::Forward;
        case AlgorithmKind::OracleBackward: return OracleVariant::Backward;
        case AlgorithmKind::OracleEdgeLabeledForward: return OracleVariant::EdgeLabeledForward;
        default: return OracleVariant::VertexLabeledBackward;
    }
}

std::string describe_generator(const GeneratorParams& p) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "generate(n=%u,m=%llu,elabels=%u,vlabels=%u,maxvl=%u,skew=%.3f,seed=%llu)",
                  p.vertex_count, (unsigned long long)p.edge_count, p.edge_label_alphabet,
                  p.vertex_label_alphabet, p.max_labels_per_vertex, p.degree_skew,
                  (unsigned long long)p.seed);
    return buf;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

const char* algorithm_name(AlgorithmKind kind) {
    for (const auto& e : kAlgorithms)
        if (e.kind == kind) return e.name;
    return "?";
}

std::optional<AlgorithmKind> algorithm_from_name(std::string_view name) {
    for (const auto& e : kAlgorithms)
        if (name == e.name) return e.kind;
    return std::nullopt;
}

bool is_oracle(AlgorithmKind kind) {
    switch (kind) {
        case AlgorithmKind::OracleForward:
        case AlgorithmKind::OracleBackward:
        case AlgorithmKind::OracleEdgeLabeledForward:
        case AlgorithmKind::OracleVertexLabeledBackward:
            return true;
        default:
            return false;
    }
}

unsigned ExperimentConfig::effective_k() const {
    if (algorithm == AlgorithmKind::Brs && gsm) return gsm->chaining_depth;
    return k;
}

void ExperimentConfig::validate() const {
    if (measured_runs < 1) throw ConfigError("measured_runs must be at least 1");
    if (algorithm == AlgorithmKind::Brs && !gsm)
        throw ConfigError("brs requires a summary-model spec (--gsm)");
    if (algorithm != AlgorithmKind::Brs && gsm)
        throw ConfigError("--gsm applies only to the brs algorithm");
    if (!is_oracle(algorithm) && effective_k() < 1)
        throw ConfigError("k must be at least 1 for non-oracle algorithms");
    if (input_path.empty() == !generator.has_value())
        throw ConfigError("exactly one of an input path or generator parameters is required");
    if (format != "csv" && format != "json")
        throw ConfigError("output format must be csv or json");
}

PartitionTrace execute_algorithm(const LabeledGraph& g, const ExperimentConfig& cfg,
                                 const RunOptions& opts) {
    switch (cfg.algorithm) {
        case AlgorithmKind::NativeSchaetzle:
            return bisim_schaetzle(g, cfg.k, opts);
        case AlgorithmKind::NativeKaushik:
            return bisim_kaushik(g, cfg.k, opts);
        case AlgorithmKind::Brs:
            return brs_summarize(g, *cfg.gsm, opts);
        case AlgorithmKind::NaivePT: {
            PartitionTrace trace;
            auto init_start = Clock::now();
            Partition p0 = label_partition(g);
            trace.init_seconds = seconds_since(init_start);
            trace.initial_block_count = p0.block_count();
            if (opts.capture_partitions) trace.initial_partition = p0;
            auto start = Clock::now();
            trace.final_partition = naive_coarsest_partition(p0, g);
            trace.iteration_seconds.push_back(seconds_since(start));
            trace.block_counts.push_back(trace.final_partition.block_count());
            trace.iterations_executed = 1;
            if (opts.capture_partitions)
                trace.iteration_partitions.push_back(trace.final_partition);
            return trace;
        }
        default: {
            PartitionTrace trace;
            auto start = Clock::now();
            auto levels = oracle_levels(g, cfg.k, oracle_variant(cfg.algorithm));
            trace.final_partition = std::move(levels.back());
            trace.iteration_seconds.push_back(seconds_since(start));
            trace.block_counts.push_back(trace.final_partition.block_count());
            trace.initial_block_count = levels.front().block_count();
            trace.iterations_executed = 1;
            if (opts.capture_partitions) {
                trace.initial_partition = std::move(levels.front());
                for (std::size_t i = 1; i < levels.size(); i++)
                    trace.iteration_partitions.push_back(std::move(levels[i]));
            }
            return trace;
        }
    }
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    LabeledGraph g = cfg.generator ? generate_synthetic(*cfg.generator)
                                   : parse_ntriples_file(cfg.input_path);
    std::string description =
        cfg.generator ? describe_generator(*cfg.generator) : cfg.input_path;
    return run_experiment(g, cfg, std::move(description));
}

ExperimentReport run_experiment(const LabeledGraph& g, const ExperimentConfig& cfg,
                                std::string input_description) {
    cfg.validate();
    ExperimentReport report;
    report.config = cfg;
    report.input_description = std::move(input_description);

    RunOptions opts;
    opts.threads = cfg.threads;
    opts.exact_mode = cfg.exact_mode;

    const std::size_t total_runs = cfg.warmup_runs + cfg.measured_runs;
    std::optional<Partition> reference;
    for (std::size_t r = 0; r < total_runs; r++) {
        const bool warmup = r < cfg.warmup_runs;
        memtrack::PeakSampler sampler;
        auto start = Clock::now();
        PartitionTrace trace;
        try {
            trace = execute_algorithm(g, cfg, opts);
        } catch (const std::bad_alloc&) {
            report.oom_run_index = r;
            break;
        }
        double total = seconds_since(start);
        std::size_t peak = sampler.stop();

        RunRecord rec;
        rec.run_index = r;
        rec.warmup = warmup;
        rec.total_seconds = total;
        rec.init_seconds = trace.init_seconds;
        rec.iteration_seconds = trace.iteration_seconds;
        rec.block_counts = trace.block_counts;
        rec.peak_memory_bytes = peak;
        rec.iterations_executed = trace.iterations_executed;
        rec.terminated_early = trace.terminated_early;
        rec.final_block_count = trace.final_partition.block_count();
        report.runs.push_back(std::move(rec));

        if (!warmup) {
            if (!reference) {
                reference = std::move(trace.final_partition);
            } else if (!partitions_equal(*reference, trace.final_partition)) {
                throw std::logic_error("measured runs produced different partitions");
            }
        }
    }

    // Aggregates over measured runs.
    std::size_t measured = 0;
    for (const RunRecord& rec : report.runs) {
        if (rec.warmup) continue;
        measured++;
        report.mean_total_seconds += rec.total_seconds;
        report.mean_init_seconds += rec.init_seconds;
        report.mean_peak_memory_bytes += double(rec.peak_memory_bytes);
        if (rec.iteration_seconds.size() > report.mean_iteration_seconds.size())
            report.mean_iteration_seconds.resize(rec.iteration_seconds.size(), 0);
        for (std::size_t i = 0; i < rec.iteration_seconds.size(); i++)
            report.mean_iteration_seconds[i] += rec.iteration_seconds[i];
    }
    if (measured > 0) {
        report.mean_total_seconds /= double(measured);
        report.mean_init_seconds /= double(measured);
        report.mean_peak_memory_bytes /= double(measured);
        for (double& s : report.mean_iteration_seconds) s /= double(measured);
    }
    return report;
}

std::string emit_csv(const ExperimentReport& report) {
    std::string out;
    auto meta = [&](const std::string& key, const std::string& value) {
        out += "# " + key + ": " + value + "\n";
    };
    meta("algorithm", algorithm_name(report.config.algorithm));
    meta("gsm", report.config.gsm ? report.config.gsm->to_string() : "");
    meta("input", report.input_description);
    meta("k", std::to_string(report.config.effective_k()));
    meta("warmup_runs", std::to_string(report.config.warmup_runs));
    meta("measured_runs", std::to_string(report.config.measured_runs));
    meta("threads", std::to_string(report.config.threads));
    meta("exact_mode", report.config.exact_mode ? "1" : "0");
    if (report.oom_run_index) meta("oom_run_index", std::to_string(*report.oom_run_index));

    out += "run,role,record,iteration,seconds,block_count,peak_memory_bytes,"
           "iterations_executed,terminated_early,final_block_count\n";
    for (const RunRecord& rec : report.runs) {
        std::string run = std::to_string(rec.run_index);
        std::string role = rec.warmup ? "warmup" : "measured";
        out += run + "," + role + ",init,," + format_double(rec.init_seconds) + ",,,,,\n";
        for (std::size_t i = 0; i < rec.iteration_seconds.size(); i++) {
            out += run + "," + role + ",iteration," + std::to_string(i + 1) + "," +
                   format_double(rec.iteration_seconds[i]) + "," +
                   std::to_string(rec.block_counts[i]) + ",,,,\n";
        }
        out += run + "," + role + ",total,," + format_double(rec.total_seconds) + ",," +
               std::to_string(rec.peak_memory_bytes) + "," +
               std::to_string(rec.iterations_executed) + "," +
               (rec.terminated_early ? "1" : "0") + "," +
               std::to_string(rec.final_block_count) + "\n";
    }
    out += "mean,aggregate,init,," + format_double(report.mean_init_seconds) + ",,,,,\n";
    for (std::size_t i = 0; i < report.mean_iteration_seconds.size(); i++) {
        out += "mean,aggregate,iteration," + std::to_string(i + 1) + "," +
               format_double(report.mean_iteration_seconds[i]) + ",,,,,\n";
    }
    out += "mean,aggregate,total,," + format_double(report.mean_total_seconds) + ",," +
           format_double(report.mean_peak_memory_bytes) + ",,,\n";
    return out;
}

std::string emit_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["config"] = {
        {"algorithm", algorithm_name(report.config.algorithm)},
        {"gsm", report.config.gsm ? report.config.gsm->to_string() : ""},
        {"input", report.input_description},
        {"k", report.config.effective_k()},
        {"warmup_runs", report.config.warmup_runs},
        {"measured_runs", report.config.measured_runs},
        {"threads", report.config.threads},
        {"exact_mode", report.config.exact_mode},
    };
    j["runs"] = nlohmann::json::array();
    for (const RunRecord& rec : report.runs) {
        j["runs"].push_back({
            {"run", rec.run_index},
            {"warmup", rec.warmup},
            {"total_seconds", rec.total_seconds},
            {"init_seconds", rec.init_seconds},
            {"iteration_seconds", rec.iteration_seconds},
            {"block_counts", rec.block_counts},
            {"peak_memory_bytes", rec.peak_memory_bytes},
            {"iterations_executed", rec.iterations_executed},
            {"terminated_early", rec.terminated_early},
            {"final_block_count", rec.final_block_count},
        });
    }
    j["aggregate"] = {
        {"mean_total_seconds", report.mean_total_seconds},
        {"mean_init_seconds", report.mean_init_seconds},
        {"mean_peak_memory_bytes", report.mean_peak_memory_bytes},
        {"mean_iteration_seconds", report.mean_iteration_seconds},
    };
    if (report.oom_run_index) j["oom_run_index"] = *report.oom_run_index;
    return j.dump(2) + "\n";
}

std::string emit_report(const ExperimentReport& report, const std::string& format) {
    if (format == "json") return emit_json(report);
    if (format == "csv") return emit_csv(report);
    throw ConfigError("output format must be csv or json");
}

}  // namespace gsum
