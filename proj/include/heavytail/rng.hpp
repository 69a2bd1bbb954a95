#pragma once

#include <cstdint>

namespace heavytail {

// SplitMix64 stream with substream support. Each (seed, substream) pair
// yields an independent deterministic sequence, so trial t of a simulation
// can own stream (seed, t) regardless of which worker runs it.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t substream)
        : state_(mix(seed + 0x9E3779B97F4A7C15ULL * (substream + 0x632BE59BD9B4E019ULL))) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on the open interval (0,1): never returns 0 or 1, so inverse
    // transform sampling is total.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace heavytail
