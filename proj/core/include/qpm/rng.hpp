#pragma once

#include <cstdint>

namespace qpm {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen for reproducibility across
// platforms and for cheap, well-mixed sub-streams: every (seed, stream)
// pair gets an independent generator via mix_seed, so shot s of a sampling
// run and round r of a randomized search are deterministic regardless of
// evaluation order.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 bits of mantissa.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound), bound >= 1. Lemire multiply-shift;
    // the bounds used here are far too small for the bias to matter, but
    // the rejection step keeps it exact anyway.
    std::uint64_t next_below(std::uint64_t bound) {
        while (true) {
            std::uint64_t x = next();
            unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
            auto lo = static_cast<std::uint64_t>(m);
            if (lo >= bound || lo >= std::uint64_t(-bound) % bound)
                return static_cast<std::uint64_t>(m >> 64);
        }
    }
};

// Sub-seed for stream s of a run seeded with seed. hash(seed, s) via two
// SplitMix64 scrambles, so neighboring streams are uncorrelated.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed);
    std::uint64_t a = g.next();
    SplitMix64 h(a ^ (stream + 0x9E3779B97F4A7C15ull));
    return h.next();
}

} // namespace qpm
