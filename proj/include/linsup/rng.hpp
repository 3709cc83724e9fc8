#pragma once

// Counter-based SplitMix64 generator.
//
// The n-th draw of a stream with key K is mix64(K + n * 0x9E3779B97F4A7C15),
// where mix64 is the SplitMix64 finalizer.  Every random quantity in the
// library (instance generation, initialization points, the l-reset draw) comes
// from this generator, so traces are reproducible bit for bit on any platform.
//
//   uniform01()         top 53 bits scaled by 2^-53, range [0,1)
//   uniform(lo, hi)     lo + (hi - lo) * uniform01(), range [lo,hi)
//   uniform_int(lo, hi) inclusive range, unbiased by rejection of the low
//                       (2^64 mod span) raw values, then lo + raw % span

#include <cstdint>

namespace linsup {

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Independent key for a (seed, stream) pair.
constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) noexcept {
    return mix64(seed ^ mix64(stream + 0x6A09E667F3BCC909ULL));
}

// Stream ids; keep stable, golden tests depend on them.
enum class RngStream : std::uint64_t {
    Generator = 1,
    Initialization = 2,
    EllReset = 3,
    Instance = 4,
};

class CounterRng {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    constexpr explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}
    constexpr CounterRng(std::uint64_t seed, RngStream stream) noexcept
        : key_(derive_key(seed, static_cast<std::uint64_t>(stream))) {}

    constexpr std::uint64_t next_u64() noexcept { return mix64(key_ + (++counter_) * kGamma); }

    constexpr double uniform01() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    constexpr double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

    constexpr std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept {
        if (lo > hi) {
            const std::uint64_t t = lo;
            lo = hi;
            hi = t;
        }
        const std::uint64_t span = hi - lo + 1;
        if (span == 0) return next_u64();  // full 64-bit range
        const std::uint64_t threshold = (0 - span) % span;
        std::uint64_t x = next_u64();
        while (x < threshold) x = next_u64();
        return lo + x % span;
    }

    constexpr std::uint64_t key() const noexcept { return key_; }
    constexpr std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace linsup
