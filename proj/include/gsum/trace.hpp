#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gsum/partition.hpp"

namespace gsum {

struct RunOptions {
    unsigned threads = 1;
    // Verification pass: store canonical signatures and confirm that
    // hash-equal vertices are signature-equal. Off in benchmarks.
    bool exact_mode = false;
    // Keep the partition after every iteration (initial one included);
    // used by refinement and golden-fixture tests, off in benchmarks.
    bool capture_partitions = false;
    // Ignore the early-termination check and run all k iterations.
    bool force_full_k = false;
    // bisim_kaushik only: skip splitters already used in earlier sweeps.
    bool use_splitter_ledger = true;
};

/// Per-iteration record of one algorithm run. Iteration i covers the step
/// from the level-(i-1) partition to the level-i partition.
struct PartitionTrace {
    double init_seconds = 0;
    std::size_t initial_block_count = 0;
    std::optional<Partition> initial_partition;

    std::vector<double> iteration_seconds;
    std::vector<std::size_t> block_counts;       // after each iteration
    std::vector<Partition> iteration_partitions; // capture_partitions only

    Partition final_partition;
    std::size_t iterations_executed = 0;
    bool terminated_early = false;
};

struct HashCollisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gsum
