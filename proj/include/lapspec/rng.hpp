#pragma once

#include <cstdint>

namespace lapspec {

/// SplitMix64 finalizer. Fixed across platforms; used both as the stream
/// generator and to derive independent per-trial seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// SplitMix64 stream. All randomized sampling in the library goes through
/// this generator so results are reproducible bit-for-bit everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound) by rejection-free multiply-shift.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

/// Independent generator for one trial of a seeded batch run. Trial streams
/// depend only on (seed, trial_index), never on execution order, so batch
/// results are identical for any thread count.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial_index) {
    return SplitMix64(mix64(seed ^ mix64(trial_index + 1)));
}

} // namespace lapspec
