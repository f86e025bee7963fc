#pragma once

#include <cstdint>

namespace armatch {

// Counter-based randomness: every draw is a pure function of
// (seed, stream, counter), so parallel trials are schedule-independent.
inline std::uint64_t rng_u64(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    // splitmix64 finalizer over the mixed key
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1) + 0xbf58476d1ce4e5b9ull * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Uniform draw in [0, bound); bound > 0. Modulo bias is below 2^-32 for the
// desk-scale bounds used here.
inline std::uint64_t rng_below(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                               std::uint64_t bound) {
    return rng_u64(seed, stream, counter) % bound;
}

} // namespace armatch
