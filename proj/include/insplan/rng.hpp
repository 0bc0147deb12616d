#pragma once

#include <cstdint>
#include <random>

namespace insplan {

// All randomness in the planner flows through these helpers. std::mt19937_64
// has a portable, standardized output sequence; the distributions below are
// hand-rolled because the standard library's distribution objects are
// implementation-defined and would break byte-identical artifacts across
// toolchains.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) with 53 random mantissa bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Rejection sampling keeps the result exactly
// uniform for every n.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    const std::uint64_t bound = n == 0 ? 0 : (~std::uint64_t{0}) - (~std::uint64_t{0}) % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= bound);
    return x % n;
}

inline double uniform_in(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

}  // namespace insplan
