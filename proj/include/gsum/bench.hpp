#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsum/brs.hpp"
#include "gsum/generator.hpp"
#include "gsum/graph.hpp"
#include "gsum/trace.hpp"

namespace gsum {

enum class AlgorithmKind {
    NativeSchaetzle,
    NativeKaushik,
    NaivePT,
    Brs,
    OracleForward,
    OracleBackward,
    OracleEdgeLabeledForward,
    OracleVertexLabeledBackward,
};

const char* algorithm_name(AlgorithmKind kind);
std::optional<AlgorithmKind> algorithm_from_name(std::string_view name);
bool is_oracle(AlgorithmKind kind);

struct ExperimentConfig {
    AlgorithmKind algorithm = AlgorithmKind::NativeSchaetzle;
    std::optional<GsmSpec> gsm;  // required for Brs; its embedded k applies
    std::string input_path;
    std::optional<GeneratorParams> generator;
    unsigned k = 10;
    unsigned warmup_runs = 1;
    unsigned measured_runs = 5;
    unsigned threads = 1;
    bool exact_mode = false;
    std::string format = "csv";  // csv | json

    unsigned effective_k() const;
    void validate() const;  // throws ConfigError
};

struct RunRecord {
    std::size_t run_index = 0;
    bool warmup = false;
    double total_seconds = 0;
    double init_seconds = 0;
    std::vector<double> iteration_seconds;
    std::vector<std::size_t> block_counts;
    std::size_t peak_memory_bytes = 0;
    std::size_t iterations_executed = 0;
    bool terminated_early = false;
    std::size_t final_block_count = 0;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::string input_description;
    std::vector<RunRecord> runs;

    // Aggregates over the measured (non-warm-up) runs only.
    double mean_total_seconds = 0;
    double mean_init_seconds = 0;
    double mean_peak_memory_bytes = 0;
    std::vector<double> mean_iteration_seconds;

    // Set when a run ran out of memory; runs after it were not executed.
    std::optional<std::size_t> oom_run_index;
};

/// Runs one algorithm configuration as a PartitionTrace, without the
/// warm-up/measured protocol. The CLI verify subcommand and tests use this.
PartitionTrace execute_algorithm(const LabeledGraph& g, const ExperimentConfig& cfg,
                                 const RunOptions& opts);

/// Loads or generates the input, then executes warmup_runs unmeasured and
/// measured_runs measured runs in-process, recording wall times per iteration
/// (monotonic clock), peak live heap bytes (50 ms sampler), and block counts.
/// Measured runs must produce equal partitions; a mismatch throws. Running
/// out of memory is reported as a structured failure in the report.
ExperimentReport run_experiment(const ExperimentConfig& cfg);
ExperimentReport run_experiment(const LabeledGraph& g, const ExperimentConfig& cfg,
                                std::string input_description);

std::string emit_csv(const ExperimentReport& report);
std::string emit_json(const ExperimentReport& report);
std::string emit_report(const ExperimentReport& report, const std::string& format);

}  // namespace gsum
