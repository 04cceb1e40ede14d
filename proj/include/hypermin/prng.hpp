#pragma once

#include <cstdint>

namespace hypermin::rng {

// Counter-based generator "counter-mix64-v1".
//
// Every draw is a pure function of (seed, stream index, draw index):
//
//   root      = mix64(seed ^ SALT)
//   key_j     = mix64(root + j * GAMMA)
//   u_{j,k}   = mix64(key_j + k * GAMMA)
//
// mix64 is the SplitMix64 finalizer. Streams never share state, so any
// evaluation order (or thread assignment) reproduces the same numbers.
// Changing any constant below is a breaking change for recorded seeds.

inline constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;
inline constexpr std::uint64_t kSalt = 0x8f1bbcdcbfa53e0bull;
inline constexpr const char* kGeneratorVersion = "counter-mix64-v1";

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// A stream of 64-bit uniforms identified by its key; draw i is
/// mix64(key + i * GAMMA) independent of how many draws were taken before.
class Stream {
public:
    explicit Stream(std::uint64_t key) : key_(key) {}

    std::uint64_t next() { return mix64(key_ + (counter_++) * kGamma); }
    std::uint64_t draws_taken() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream_index) {
    return mix64(mix64(seed ^ kSalt) + stream_index * kGamma);
}

inline Stream stream(std::uint64_t seed, std::uint64_t stream_index) {
    return Stream(stream_key(seed, stream_index));
}

/// Key for a nested stream, e.g. (seed, grid index, replicate index).
inline std::uint64_t substream_key(std::uint64_t parent_key, std::uint64_t index) {
    return mix64(parent_key + index * kGamma);
}

/// Threshold T such that a 64-bit uniform u satisfies u < T with probability
/// round(p * 2^64) / 2^64. Callers must handle p >= 1 themselves: the
/// always-true gate is not representable as a threshold.
inline std::uint64_t bernoulli_threshold(double p) {
    if (p <= 0.0) return 0;
    // p * 2^64 is exact in 80-bit long double for any double p < 1.
    long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
    if (scaled >= 18446744073709551615.0L) return ~std::uint64_t{0};
    return static_cast<std::uint64_t>(scaled + 0.5L);
}

}  // namespace hypermin::rng
