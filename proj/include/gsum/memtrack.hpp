#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <thread>

namespace gsum::memtrack {

/// Live heap bytes currently allocated through operator new, as reported by
/// the allocator. Approximate: direct malloc/mmap use is not counted.
std::size_t live_bytes();

/// Background sampler of live_bytes(); peak() is the maximum of all samples
/// taken every `interval` plus one final sample at stop.
class PeakSampler {
public:
    explicit PeakSampler(std::chrono::milliseconds interval = std::chrono::milliseconds(50));
    ~PeakSampler();

    PeakSampler(const PeakSampler&) = delete;
    PeakSampler& operator=(const PeakSampler&) = delete;

    /// Takes the final sample and joins the watcher. Idempotent.
    std::size_t stop();
    std::size_t peak() const { return peak_.load(std::memory_order_relaxed); }

private:
    std::atomic<std::size_t> peak_;
    std::atomic<bool> done_;
    std::thread watcher_;
};

}  // namespace gsum::memtrack
