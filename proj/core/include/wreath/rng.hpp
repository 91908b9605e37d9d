#pragma once

// Reproducible random streams. std::mt19937_64 is fully specified by the
// standard but the <random> distributions are not, so bounded draws go
// through uniform_below to keep outputs identical across standard libraries.

#include <cstdint>
#include <random>

namespace wreath {

/// Uniform integer in [0, bound) by rejection on the top of the 64-bit range.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x <= limit) return x % bound;
    }
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Independent stream for trial `index` of a run seeded with `seed`. The
/// stream is the generator seeded by std::seed_seq over the four 32-bit
/// halves of (seed, index), so it depends only on that pair.
inline std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace wreath
