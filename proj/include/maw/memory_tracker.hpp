#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <new>

// Heap accounting for the benchmark and acceptance binaries. Defining
// MAW_MEMTRACK_IMPL in exactly one translation unit replaces the global
// allocation functions with counting versions; everywhere else this header
// only exposes the (then inactive) counters.

namespace maw::memtrack {

inline std::atomic<long long> g_live{0};
inline std::atomic<long long> g_peak{0};
inline std::atomic<bool> g_active{false};

inline bool active() { return g_active.load(std::memory_order_relaxed); }
inline long long live_bytes() { return g_live.load(std::memory_order_relaxed); }
inline long long peak_bytes() { return g_peak.load(std::memory_order_relaxed); }
inline void reset_peak() { g_peak.store(live_bytes(), std::memory_order_relaxed); }

namespace detail {

inline constexpr std::size_t kHeader = 16;  // keeps malloc's 16-byte alignment

inline void count_alloc(std::size_t bytes) {
    const long long now =
        g_live.fetch_add(static_cast<long long>(bytes), std::memory_order_relaxed) +
        static_cast<long long>(bytes);
    long long peak = g_peak.load(std::memory_order_relaxed);
    while (now > peak &&
           !g_peak.compare_exchange_weak(peak, now, std::memory_order_relaxed)) {
    }
}

__attribute__((noinline)) inline void* allocate(std::size_t size) noexcept {
    void* raw = std::malloc(size + kHeader);
    if (!raw) return nullptr;
    *static_cast<std::size_t*>(raw) = size;
    count_alloc(size);
    return static_cast<char*>(raw) + kHeader;
}

__attribute__((noinline)) inline void deallocate(void* p) noexcept {
    if (!p) return;
    char* raw = static_cast<char*>(p) - kHeader;
    g_live.fetch_sub(static_cast<long long>(*reinterpret_cast<std::size_t*>(raw)),
                     std::memory_order_relaxed);
    std::free(raw);
}

}  // namespace detail
}  // namespace maw::memtrack

#ifdef MAW_MEMTRACK_IMPL

void* operator new(std::size_t size) {
    if (void* p = maw::memtrack::detail::allocate(size)) return p;
    throw std::bad_alloc();
}
void* operator new[](std::size_t size) {
    if (void* p = maw::memtrack::detail::allocate(size)) return p;
    throw std::bad_alloc();
}
void* operator new(std::size_t size, const std::nothrow_t&) noexcept {
    return maw::memtrack::detail::allocate(size);
}
void* operator new[](std::size_t size, const std::nothrow_t&) noexcept {
    return maw::memtrack::detail::allocate(size);
}
void operator delete(void* p) noexcept { maw::memtrack::detail::deallocate(p); }
void operator delete[](void* p) noexcept { maw::memtrack::detail::deallocate(p); }
void operator delete(void* p, std::size_t) noexcept { maw::memtrack::detail::deallocate(p); }
void operator delete[](void* p, std::size_t) noexcept { maw::memtrack::detail::deallocate(p); }
void operator delete(void* p, const std::nothrow_t&) noexcept { maw::memtrack::detail::deallocate(p); }
void operator delete[](void* p, const std::nothrow_t&) noexcept { maw::memtrack::detail::deallocate(p); }

namespace maw::memtrack::detail {
static const bool g_registered = [] {
    maw::memtrack::g_active.store(true, std::memory_order_relaxed);
    return true;
}();
}  // namespace maw::memtrack::detail

#endif  // MAW_MEMTRACK_IMPL
