#pragma once

#include <cstdint>
#include <random>

namespace heider {

// SplitMix64 finalizer (Vigna): full-avalanche 64-bit mix.
constexpr std::uint64_t splitmix64_mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

// Golden-ratio increment used by the splitmix64 stream.
inline constexpr std::uint64_t kSplitMix64Gamma = 0x9e3779b97f4a7c15ULL;

/// Per-trial seed as a pure function of (master seed, cell index, trial
/// index): two chained finalizer rounds, one mixing in the cell, one the
/// trial. No state, so the result is identical no matter how trials are
/// scheduled across workers.
constexpr std::uint64_t derive_trial_seed(std::uint64_t master_seed,
                                          std::uint64_t cell_index,
                                          std::uint64_t trial_index) {
    std::uint64_t z = splitmix64_mix(master_seed + kSplitMix64Gamma * (cell_index + 1));
    return splitmix64_mix(z + kSplitMix64Gamma * (trial_index + 1));
}

// Uniform double on the strictly open interval (0, 1): top 53 bits of the
// draw, offset by half a lattice step. std::uniform_real_distribution is
// avoided because its output is implementation-defined, which would break
// bit-reproducibility across toolchains.
inline double uniform_open01(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

// Uniform double on the open interval (-1, +1).
inline double uniform_weight(std::mt19937_64& rng) {
    return 2.0 * uniform_open01(rng) - 1.0;
}

}  // namespace heider
