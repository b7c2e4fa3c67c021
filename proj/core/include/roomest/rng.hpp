#pragma once

#include <cstdint>
#include <vector>

namespace roomest {

/// Counter-based 64-bit generator (SplitMix64, Steele et al. finalizer).
/// State advances by a fixed odd increment and every output is a pure
/// integer hash of the state, so sequences are identical on every platform
/// and streams can be derived cheaply from (seed, index) pairs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        return mix(z);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n);

    /// Standard normal via Box-Muller (one draw per call, no caching so that
    /// stream consumption is position-independent).
    double normal();

    bool bernoulli(double p) { return next_double() < p; }

    /// Random sign, +1.0 or -1.0.
    double sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

    /// Unit vector uniformly distributed on the sphere; writes x, y, z.
    void unit_sphere(double& x, double& y, double& z);

    /// Fisher-Yates shuffle of an index vector.
    void shuffle(std::vector<std::size_t>& idx);

    /// SplitMix64 finalizer as a standalone integer hash.
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Derives an independent stream seed from (master, salt, index).
    /// Used to give every room / position / purpose its own stream so that
    /// parallel generation is order-independent.
    static std::uint64_t derive(std::uint64_t master, std::uint64_t salt, std::uint64_t index = 0) {
        return mix(mix(mix(master) ^ salt) ^ index);
    }

private:
    std::uint64_t state_;
};

/// Stream salts for dataset generation. Keeping them in one place documents
/// the reproducibility contract: a (master seed, salt, index) triple fully
/// identifies every random decision in the pipeline.
namespace rng_salt {
inline constexpr std::uint64_t kRoom = 0x526f6f6d00000001ull;
inline constexpr std::uint64_t kPositions = 0x506f730000000001ull;
inline constexpr std::uint64_t kRir = 0x5269720000000001ull;
inline constexpr std::uint64_t kReference = 0x5265660000000001ull;
inline constexpr std::uint64_t kSnr = 0x536e720000000001ull;
inline constexpr std::uint64_t kClip = 0x436c700000000001ull;
inline constexpr std::uint64_t kNoise = 0x4e7a650000000001ull;
inline constexpr std::uint64_t kSplit = 0x53706c0000000001ull;
inline constexpr std::uint64_t kInit = 0x496e690000000001ull;
inline constexpr std::uint64_t kShuffle = 0x5368660000000001ull;
inline constexpr std::uint64_t kDropout = 0x44726f0000000001ull;
}  // namespace rng_salt

}  // namespace roomest
