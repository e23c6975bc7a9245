#pragma once

#include <cmath>
#include <cstdint>

// Counter-based random numbers. Every draw is a pure function of
// (stream seed, counter), so parallel ensembles are reproducible no matter
// how the work is scheduled.

namespace splap {

// SplitMix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Word j of the stream identified by `seed`.
inline std::uint64_t stream_word(std::uint64_t seed, std::uint64_t j) {
    return mix64(seed + kGolden * (j + 1));
}

// Independent stream seed for trajectory `index` under a common base seed.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    return stream_word(mix64(base ^ 0xD1B54A32D192ED03ULL), index);
}

// Uniform in the open interval (0,1); never returns 0 or 1.
inline double unit_open(std::uint64_t w) {
    return static_cast<double>(w >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

inline double uniform(std::uint64_t seed, std::uint64_t counter, double lo, double hi) {
    return lo + (hi - lo) * unit_open(stream_word(seed, counter));
}

// Standard normal via Box-Muller; one draw consumes counters 2k and 2k+1.
inline double gaussian(std::uint64_t seed, std::uint64_t counter) {
    const double u1 = unit_open(stream_word(seed, 2 * counter));
    const double u2 = unit_open(stream_word(seed, 2 * counter + 1));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

}  // namespace splap
