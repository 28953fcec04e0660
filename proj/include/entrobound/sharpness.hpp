#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entrobound/bounds.hpp"
#include "entrobound/sampling.hpp"

namespace entrobound {

enum class BoundKind { theorem, corollary1, corollary2_q, corollary2_q2 };

std::string to_string(BoundKind kind);
std::optional<BoundKind> bound_kind_from_string(const std::string& name);

/// One fuzz observation: measured inputs, the entropy value, the selected
/// bound, and the slack bound - entropy. Negative slack beyond -1e-9
/// falsifies the bound.
struct SlackRecord {
    double t;
    double alpha;
    double beta;
    double entropy;
    double bound;
    double slack;
};

/// Slack for one state pair under one bound, or nothing when the pair does
/// not produce a usable record (beta not positive, entropy infinite for the
/// unregularised bounds, or the pair failing density validation for the
/// regularised ones).
std::optional<SlackRecord> evaluate_pair_slack(const HermitianMatrix& rho,
                                               const HermitianMatrix& sigma, BoundKind which);

struct FuzzResult {
    std::vector<SlackRecord> records;  // sorted by slack ascending
    long skipped = 0;

    double min_slack() const;
    long violations(double tol = 1e-9) const;
};

/// Samples `samples` random density-matrix pairs from cfg (plus any injected
/// extra pairs), measures (T, alpha, beta), and records the slack of the
/// selected bound. Deterministic given cfg and independent of the thread
/// count: each pair derives its own stream from the base seed and its index.
FuzzResult fuzz_slack(const SamplerConfig& cfg, long samples, BoundKind which,
                      const std::vector<std::pair<HermitianMatrix, HermitianMatrix>>& extra_pairs =
                          {},
                      int threads = 1);

/// Pair of diagonal states on the probability simplex.
struct DiagonalFamily {
    int dim;
    std::vector<double> rho_diag;
    std::vector<double> sigma_diag;
};

struct OptimiserResult {
    DiagonalFamily family;
    double entropy;                 // S(rho||sigma) of the returned family
    double distance_residual;       // |T(family) - T(target)|
    double rho_floor_residual;      // |lambda_min(rho) - alpha|
    double sigma_floor_residual;    // |lambda_min(sigma) - beta|
    int restarts_used;
};

/// Pushes S(rho||sigma) toward its upper bound over diagonal pairs of
/// dimension d whose entries are clamped at the target minimal eigenvalues
/// and whose traces are 1 by construction; the trace-distance constraint is
/// enforced through an exact (absolute-value) penalty of weight 1e6.
/// Derivative-free simplex search, tolerance 1e-10, 1e4 iterations per
/// restart. Deterministic given (target, d, restarts, seed).
OptimiserResult maximize_entropy_at_constraints(const BoundInput& target, int d, int restarts,
                                                std::uint64_t seed = 0);

struct SharpnessRow {
    double t;
    double alpha;
    double beta;
    double bound;
    double best_entropy;
    double rel_gap;             // (bound - best)/max(bound, 1e-12)
    double distance_residual;
    bool attained;              // rel_gap <= 1e-4
};

/// Bound vs best-found entropy for every grid point; rows flag gaps above
/// 1e-4 as not numerically attained.
std::vector<SharpnessRow> sharpness_report(const std::vector<BoundInput>& grid, int d,
                                           int restarts = 10, std::uint64_t seed = 0);

}  // namespace entrobound
