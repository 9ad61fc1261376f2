#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maw/maw_core.hpp"
#include "maw/memory_tracker.hpp"

#if defined(__linux__)
#include <sched.h>
#endif

namespace maw::bench {

// Every doubling of n may cost at most this factor in wall time.
inline constexpr double kMaxDoublingRatio = 2.5;

// Scratch budget asserted by the memory monitor, in bytes per input
// character on DNA inputs.
inline constexpr std::int64_t kScratchBytesPerChar = 30;

inline constexpr std::string_view kRngId = "mt19937_64";

struct MutationSpec {
    double rate = 0.0;
    std::uint64_t seed = 0;
    std::string alphabet = "ACGT";
};

struct BenchResult {
    std::int64_t n = 0;
    double seconds = 0.0;
    std::int64_t peak_total_bytes = -1;    // -1 when heap accounting is not linked in
    std::int64_t peak_scratch_bytes = -1;  // peak minus the returned report
    std::int64_t maw_count = 0;
    std::string rng = std::string(kRngId);
};

struct ScalingOutcome {
    std::vector<BenchResult> results;
    std::vector<double> ratios;  // results[k].seconds / results[k-1].seconds
    bool pass = false;
};

inline std::string random_dna(std::int64_t n, std::uint64_t seed) {
    static constexpr char kDna[] = {'A', 'C', 'G', 'T'};
    std::mt19937_64 rng(seed);
    std::string out(static_cast<std::size_t>(n), 'A');
    for (char& c : out) c = kDna[rng() % 4];
    return out;
}

// Replaces exactly round(rate*n) distinct positions with a letter drawn
// uniformly from spec.alphabet. A draw may repeat the original letter, so
// the edit distance to the input is at most, not exactly, the mutated count.
inline std::string mutate(std::string_view sequence, const MutationSpec& spec) {
    if (spec.rate < 0.0 || spec.rate > 1.0) throw std::invalid_argument("mutation rate outside [0,1]");
    if (spec.alphabet.empty()) throw std::invalid_argument("empty mutation alphabet");
    const auto n = static_cast<std::int64_t>(sequence.size());
    const auto count = static_cast<std::int64_t>(std::llround(spec.rate * static_cast<double>(n)));

    std::mt19937_64 rng(spec.seed);
    std::string out(sequence);
    std::vector<std::int64_t> positions(static_cast<std::size_t>(n));
    std::iota(positions.begin(), positions.end(), std::int64_t{0});
    for (std::int64_t k = 0; k < count; ++k) {
        const std::uint64_t pick = k + rng() % static_cast<std::uint64_t>(n - k);
        std::swap(positions[static_cast<std::size_t>(k)], positions[static_cast<std::size_t>(pick)]);
        const char letter = spec.alphabet[rng() % spec.alphabet.size()];
        out[static_cast<std::size_t>(positions[static_cast<std::size_t>(k)])] = letter;
    }
    return out;
}

// Heap footprint of a finished report, subtracted from the peak to get the
// scratch figure (the report is output, not working memory).
inline std::int64_t report_heap_bytes(const MawReport& report) {
    return static_cast<std::int64_t>(report.tuples.capacity() * sizeof(MawTuple) +
                                     report.alphabet.letters.capacity());
}

inline void pin_to_one_cpu() {
#if defined(__linux__)
    cpu_set_t set;
    CPU_ZERO(&set);
    const int cpu = sched_getcpu();
    CPU_SET(cpu >= 0 ? cpu : 0, &set);
    sched_setaffinity(0, sizeof(set), &set);  // best effort
#endif
}

// Times compute_maws on one sequence; seconds is the best of `trials` runs.
inline BenchResult time_compute(std::string_view sequence, int trials) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    BenchResult res;
    res.n = static_cast<std::int64_t>(sequence.size());
    double best = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        const long long base = memtrack::live_bytes();
        memtrack::reset_peak();
        const auto t0 = std::chrono::steady_clock::now();
        const MawReport report = compute_maws(sequence);
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
        res.maw_count = static_cast<std::int64_t>(report.tuples.size());
        if (memtrack::active()) {
            res.peak_total_bytes = memtrack::peak_bytes() - base;
            res.peak_scratch_bytes = res.peak_total_bytes - report_heap_bytes(report);
        }
    }
    res.seconds = best;
    return res;
}

// Generates random DNA at each size, times compute_maws single-threaded, and
// checks that no consecutive ratio exceeds kMaxDoublingRatio.
inline ScalingOutcome scaling_run(const std::vector<std::int64_t>& sizes, int trials,
                                  std::uint64_t seed = 0x5eedULL) {
    if (sizes.empty()) throw std::invalid_argument("no sizes given");
    for (std::size_t k = 1; k < sizes.size(); ++k)
        if (sizes[k] <= sizes[k - 1]) throw std::invalid_argument("sizes must be ascending");

    pin_to_one_cpu();
    ScalingOutcome out;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        const std::string seq = random_dna(sizes[k], seed + k);
        out.results.push_back(time_compute(seq, trials));
    }
    out.pass = true;
    for (std::size_t k = 1; k < out.results.size(); ++k) {
        const double ratio = out.results[k].seconds / out.results[k - 1].seconds;
        out.ratios.push_back(ratio);
        if (ratio > kMaxDoublingRatio) out.pass = false;
    }
    return out;
}

}  // namespace maw::bench
