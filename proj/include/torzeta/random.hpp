#pragma once

#include <cstdint>
#include <random>

namespace torzeta {

// Uniform on [0, 1) from the top 53 bits of a 64-bit Mersenne twister. The
// engine's output sequence is fixed by the standard, so draws are portable.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

} // namespace torzeta
