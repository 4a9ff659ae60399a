#pragma once

#include <cstdint>

namespace lolab {

/// Counter-based deterministic generator (splitmix64 finalizer applied to
/// seed + counter * golden ratio). Stateless: word(c) depends only on
/// (seed, c), so trial streams can be partitioned across workers in any way
/// without changing the result. Period of the counter space is 2^64.
struct CounterRng {
    std::uint64_t seed{0};

    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t word(std::uint64_t counter) const {
        return mix(seed + (counter + 1) * kGolden);
    }

    /// Uniform double in [0, 1) from counter `c`.
    double uniform(std::uint64_t c) const { return double(word(c) >> 11) * 0x1.0p-53; }

    /// Derived substream seed (e.g. one per restart/worker).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t label) {
        return mix(seed ^ mix(label + 0x5851F42D4C957F2DULL));
    }
};

inline constexpr const char* kGeneratorName = "splitmix64-counter";

}  // namespace lolab
