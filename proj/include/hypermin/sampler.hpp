#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "hypermin/edge_set.hpp"
#include "hypermin/errors.hpp"
#include "hypermin/prng.hpp"

namespace hypermin {

/// Parameters of the maximum-entropy model: m independent edges over [n],
/// each vertex present independently with probability p.
struct ModelParams {
    std::uint32_t n = 1;
    std::uint64_t m = 1;
    double p = 0.5;
    std::uint64_t seed = 0;

    void validate() const {
        if (n < 1) throw std::invalid_argument("model: n must be >= 1");
        if (m < 1) throw std::invalid_argument("model: m must be >= 1");
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("model: p must lie in [0,1]");
    }
};

/// Hard cap on the total bit-vector payload of one sampled hypergraph
/// (m * ceil(n/64) machine words, 1 GiB).
inline constexpr std::uint64_t kMaxSampleWords = std::uint64_t{1} << 27;

/// One edge over [n]: exactly n Bernoulli(p) draws from the stream, vertex v
/// uses draw v-1. Inclusion is decided by a full-width integer compare.
inline EdgeSet sample_edge(std::uint32_t n, double p, rng::Stream& stream) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_edge: p outside [0,1]");
    EdgeSet e(n);
    if (p >= 1.0) {
        for (std::uint32_t v = 1; v <= n; ++v) {
            stream.next();
            e.add(v);
        }
        return e;
    }
    const std::uint64_t threshold = rng::bernoulli_threshold(p);
    for (std::uint32_t v = 1; v <= n; ++v) {
        if (stream.next() < threshold) e.add(v);
    }
    return e;
}

/// Edge of trial `trial` (0-based); a pure function of (seed, trial).
inline EdgeSet sample_trial_edge(const ModelParams& params, std::uint64_t trial) {
    auto stream = rng::stream(params.seed, trial);
    return sample_edge(params.n, params.p, stream);
}

inline MultiHypergraph sample_hypergraph(const ModelParams& params) {
    params.validate();
    const std::uint64_t words_per_edge = (params.n + 63) / 64;
    if (params.m > kMaxSampleWords / words_per_edge)
        throw ResourceError("sample: m=" + std::to_string(params.m) + " with n=" +
                            std::to_string(params.n) + " exceeds the sampling cap of " +
                            std::to_string(kMaxSampleWords) + " words; " +
                            "use the analytic operations for larger m");
    MultiHypergraph h(params.n);
    for (std::uint64_t j = 0; j < params.m; ++j)
        h.add(sample_trial_edge(params, j));
    return h;
}

}  // namespace hypermin
