#pragma once

#include <cstdint>
#include <utility>

#include "entrobound/hermitian.hpp"

namespace entrobound {

/// SplitMix64. The generator is pinned to this exact algorithm so that
/// seeded outputs (and the CSV files derived from them) are reproducible
/// across platforms; see the README for the constants.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double strictly inside (0, 1).
    double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }
};

/// Standard normal stream via Box-Muller on SplitMix64 uniforms.
struct GaussianStream {
    explicit GaussianStream(std::uint64_t seed) : rng(seed) {}

    double next();

    SplitMix64 rng;
    bool has_spare = false;
    double spare = 0.0;
};

/// Stream seed for the index-th draw under a base seed; makes parallel
/// fuzzing independent of thread interleaving.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index);

struct SamplerConfig {
    int dim = 2;
    std::uint64_t seed = 0;
    double min_eigenvalue_floor = 0.0;
    double condition_cap = 1e12;  // lambda_max/lambda_min cap for PD outputs

    /// Same config with the seed replaced by the derived per-index stream.
    SamplerConfig for_sample(std::uint64_t index) const;
};

/// Hilbert-Schmidt random density matrix: G G^dagger / Tr(G G^dagger) for a
/// Ginibre G, then the minimal convex mix with I/d enforcing the eigenvalue
/// floor. Deterministic given the config.
HermitianMatrix sample_density_matrix(const SamplerConfig& cfg);

/// Two positive definite matrices with equal trace, eigenvalue floor, and
/// condition number within cap. Resamples (up to 100 attempts) when the
/// trace-matching rescale breaks the floor.
std::pair<HermitianMatrix, HermitianMatrix> sample_equal_trace_pd_pair(const SamplerConfig& cfg);

/// Random Hermitian matrix with exact zero trace and the given trace norm.
HermitianMatrix sample_traceless_hermitian(const SamplerConfig& cfg, double norm);

/// Positive definite matrix with lambda_min pinned to the floor and
/// lambda_max pinned to floor*condition_cap (log-uniform spectrum between,
/// Haar-like eigenbasis). Requires a strictly positive floor.
HermitianMatrix sample_pd_matrix(const SamplerConfig& cfg);

}  // namespace entrobound
