#pragma once

#include <cstdint>

#include "hilbert/geometry.hpp"

namespace hilbert {

// SplitMix64 (Vigna, public domain). Chosen over <random> engines plus
// std::uniform_real_distribution because the standard distributions are not
// pinned by the standard: the same seed can produce different streams across
// library implementations. This generator is fully specified below, so every
// verification report is bit-reproducible from (seed, samples).
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Doubles take the top 53 bits: (word >> 11) * 2^-53, uniform on [0, 1).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) {
        return lo + next_double() * (hi - lo);
    }

    // Uniform direction on the l1 unit sphere, by rejection from the square.
    // Stays away from the origin before normalizing so the division is well
    // conditioned; no transcendental calls, so the stream of directions is as
    // pinned as the integer stream.
    Vec2 direction() {
        for (;;) {
            const Vec2 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            const double n = l1_norm(v);
            if (n >= 0.125 && n <= 1.0) return v / n;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace hilbert
