#pragma once

#include <cstdint>
#include <random>

namespace allz {

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Per-case seed: splitmix64(master ^ splitmix64(case_id)) truncated to its
/// top 53 bits so that seeds survive a round trip through JSON numbers.
constexpr std::uint64_t case_seed(std::uint64_t master_seed, std::uint64_t case_id) {
    return splitmix64(master_seed ^ splitmix64(case_id)) >> 11;
}

/// mt19937_64 stream with portable range reduction (the std distributions are
/// implementation-defined, which would break cross-platform replay).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi] by rejection of the biased tail.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo;
        if (span == ~std::uint64_t{0}) return next();
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + v % range;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace allz
