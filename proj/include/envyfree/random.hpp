#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace envyfree {

// Pinned random pipeline. std::mt19937_64's output sequence is fixed by the
// standard, but std:: distributions are not, so integer and real draws are
// done here. Changing anything in this header changes every published
// statistic; bump rng_version when doing so.
inline constexpr std::string_view rng_version = "splitmix64-mt19937_64-v1";

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed for stream `index` of `master`: the index-th SplitMix64 output
/// started at `master`. Streams can be generated in any order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = Rng::max() - Rng::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace envyfree
