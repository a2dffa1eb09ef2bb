#include "gsum/memtrack.hpp"

#include <malloc.h>

#include <cstdlib>
#include <new>

namespace {

std::atomic<std::size_t> g_live_bytes{0};

void* tracked_alloc(std::size_t size) {
    void* p = std::malloc(size ? size : 1);
    if (p) g_live_bytes.fetch_add(malloc_usable_size(p), std::memory_order_relaxed);
    return p;
}

void* tracked_aligned_alloc(std::size_t size, std::size_t align) {
    void* p = nullptr;
    if (posix_memalign(&p, align, size ? size : align) != 0) return nullptr;
    g_live_bytes.fetch_add(malloc_usable_size(p), std::memory_order_relaxed);
    return p;
}

void tracked_free(void* p) noexcept {
    if (!p) return;
    g_live_bytes.fetch_sub(malloc_usable_size(p), std::memory_order_relaxed);
    std::free(p);
}

}  // namespace

// Global replacements: every allocation in the process is accounted in
// g_live_bytes. Referencing anything in this translation unit links them in.

void* operator new(std::size_t size) {
    void* p = tracked_alloc(size);
    if (!p) throw std::bad_alloc();
    return p;
}

void* operator new[](std::size_t size) {
    void* p = tracked_alloc(size);
    if (!p) throw std::bad_alloc();
    return p;
}

void* operator new(std::size_t size, const std::nothrow_t&) noexcept { return tracked_alloc(size); }
void* operator new[](std::size_t size, const std::nothrow_t&) noexcept { return tracked_alloc(size); }

void* operator new(std::size_t size, std::align_val_t align) {
    void* p = tracked_aligned_alloc(size, static_cast<std::size_t>(align));
    if (!p) throw std::bad_alloc();
    return p;
}

void* operator new[](std::size_t size, std::align_val_t align) {
    void* p = tracked_aligned_alloc(size, static_cast<std::size_t>(align));
    if (!p) throw std::bad_alloc();
    return p;
}

void* operator new(std::size_t size, std::align_val_t align, const std::nothrow_t&) noexcept {
    return tracked_aligned_alloc(size, static_cast<std::size_t>(align));
}

void* operator new[](std::size_t size, std::align_val_t align, const std::nothrow_t&) noexcept {
    return tracked_aligned_alloc(size, static_cast<std::size_t>(align));
}

void operator delete(void* p) noexcept { tracked_free(p); }
void operator delete[](void* p) noexcept { tracked_free(p); }
void operator delete(void* p, std::size_t) noexcept { tracked_free(p); }
void operator delete[](void* p, std::size_t) noexcept { tracked_free(p); }
void operator delete(void* p, const std::nothrow_t&) noexcept { tracked_free(p); }
void operator delete[](void* p, const std::nothrow_t&) noexcept { tracked_free(p); }
void operator delete(void* p, std::align_val_t) noexcept { tracked_free(p); }
void operator delete[](void* p, std::align_val_t) noexcept { tracked_free(p); }
void operator delete(void* p, std::align_val_t, std::size_t) noexcept { tracked_free(p); }
void operator delete[](void* p, std::align_val_t, std::size_t) noexcept { tracked_free(p); }
void operator delete(void* p, std::align_val_t, const std::nothrow_t&) noexcept { tracked_free(p); }
void operator delete[](void* p, std::align_val_t, const std::nothrow_t&) noexcept { tracked_free(p); }

namespace gsum::memtrack {

std::size_t live_bytes() { return g_live_bytes.load(std::memory_order_relaxed); }

PeakSampler::PeakSampler(std::chrono::milliseconds interval) : peak_(live_bytes()), done_(false) {
    watcher_ = std::thread([this, interval] {
        while (!done_.load(std::memory_order_relaxed)) {
            std::size_t live = live_bytes();
            std::size_t seen = peak_.load(std::memory_order_relaxed);
            while (live > seen &&
                   !peak_.compare_exchange_weak(seen, live, std::memory_order_relaxed)) {
            }
            std::this_thread::sleep_for(interval);
        }
    });
}

PeakSampler::~PeakSampler() { stop(); }

std::size_t PeakSampler::stop() {
    if (watcher_.joinable()) {
        done_.store(true, std::memory_order_relaxed);
        watcher_.join();
        std::size_t live = live_bytes();
        std::size_t seen = peak_.load(std::memory_order_relaxed);
        if (live > seen) peak_.store(live, std::memory_order_relaxed);
    }
    return peak();
}

}  // namespace gsum::memtrack
