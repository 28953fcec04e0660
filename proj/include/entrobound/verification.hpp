#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entrobound/hermitian.hpp"

namespace entrobound {

/// Outcome of one property check. `measured` is the worst observed value of
/// the checked quantity; `detail` carries reproduction hints on failure.
struct CheckResult {
    std::string name;
    double tolerance;
    double measured;
    bool pass;
    std::string detail;
};

/// All four bound slacks for one density-matrix pair, measured once.
/// Empty when the pair yields no usable bound input.
struct AllBoundSlacks {
    double theorem;
    double corollary1;
    double q;
    double q2;
};
std::optional<AllBoundSlacks> all_bound_slacks(const HermitianMatrix& rho,
                                               const HermitianMatrix& sigma);

/// Quadrature and superoperator identities: the logarithm integral against
/// its spectral form, T_A(A) = I, order preservation, linearity, the
/// finite-difference derivative, and the path representation of the
/// relative entropy.
std::vector<CheckResult> verify_integrals(std::uint64_t seed);

/// Matrix inequalities fuzzed on sampled pairs: the trace-distance floor,
/// the Loewner-order bound, the traceless norm inequalities, and sampler
/// determinism/coverage.
std::vector<CheckResult> verify_lemmas(std::uint64_t seed);

/// Bound validity fuzzing, monotonicity and dominance chains, the equality
/// families, and the entropy-measure identities.
std::vector<CheckResult> verify_bounds(std::uint64_t seed);

std::vector<CheckResult> verify_all(std::uint64_t seed);

}  // namespace entrobound
