#pragma once

#include <cstdint>

// Deterministic seeded PRNG for the round-trip suites. splitmix64 with the
// usual constants; streams are derived from (seed, index) so instance i of a
// suite is reproducible in isolation. The exact recipe is documented in the
// README so other implementations can regenerate identical instances.

namespace kcr {

class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    constexpr std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform in [lo, hi], inclusive. Modulo bias is irrelevant at the ranges
    // used here; determinism is what matters.
    constexpr std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(next() % span);
    }

    constexpr bool next_bool() { return (next() & 1u) != 0; }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double next_real(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

private:
    std::uint64_t state_;
};

// Stream for instance `index` under `seed`.
inline SplitMix64 instance_stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(SplitMix64::mix(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1))));
}

}  // namespace kcr
