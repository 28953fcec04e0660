#pragma once

#include <optional>
#include <utility>

#include "entrobound/entropy.hpp"
#include "entrobound/hermitian.hpp"

namespace entrobound {

/// Scalar triple (T, alpha, beta) feeding the bound formulas: half
/// trace-norm distance and the minimal eigenvalues of the two states.
/// Construction rejects triples violating T >= |alpha - beta| (with a
/// 1e-12 slack so values measured from floating-point states never fail),
/// and, when a dimension is supplied, minimal eigenvalues above 1/d.
class BoundInput {
public:
    BoundInput(double t, double alpha, double beta, std::optional<int> dim = std::nullopt);

    double t() const { return t_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

private:
    double t_;
    double alpha_;
    double beta_;
};

/// Scalars for the Loewner-order bound t/(gamma + t) on T_b(b - a).
struct LemmaThreeInput {
    double gamma;
    double t;

    double bound() const;
};

/// T - |alpha - beta| for an equal-trace PSD pair; nonnegative for all
/// valid inputs, exposed so that property can be fuzzed directly.
double feasibility_gap(const HermitianMatrix& a, const HermitianMatrix& b);

/// lambda_min( (t/(gamma+t)) I - T_b(b-a) ) for equal-trace PD a, b with
/// a >= gamma; nonnegative (to -1e-9) certifies the Loewner-order bound.
double lemma3_slack(const HermitianMatrix& a, const HermitianMatrix& b, double gamma);

/// (1+T)log(1+T) - alpha log(1+T/alpha): upper bound on S(A||B) for
/// equal-trace positive matrices with lambda_min(A)=alpha, lambda_min(B)=1.
/// The alpha = 0 limit term is 0.
double bound_proposition(double t, double alpha);

/// (beta+T)log(1+T/beta) - alpha log(1+T/alpha): sharp upper bound on
/// S(rho||sigma) for density matrices; alpha = 0 limit term is 0.
double bound_theorem(const BoundInput& in);

/// Bound with alpha unspecified (maximised over feasible alpha): two-case
/// formula switching at T = beta, continuous across the boundary.
double bound_corollary1(double t, double beta);

struct CorollaryTwoBounds {
    double q;   // eigenvalue-aware bound on the regularised relative entropy
    double q2;  // c_d T log(1+T), the alpha=beta=0 envelope; q <= q2 always
};

/// Both upper bounds on the regularised relative entropy.
CorollaryTwoBounds bound_corollary2(const BoundInput& in, const RegularisationConfig& cfg);

/// Scalar form admitting beta = 0 (the shift by I keeps the formula finite
/// there, and beta = 0 is exactly where the envelope is attained).
CorollaryTwoBounds bound_corollary2(double t, double alpha, double beta,
                                    const RegularisationConfig& cfg);

/// The 2x2 diagonal pair A=Diag(1+T, alpha), B=Diag(1, T+alpha) achieving
/// bound_proposition exactly; requires alpha > 0 and feasible (T, alpha).
std::pair<HermitianMatrix, HermitianMatrix> extremal_pair_proposition(double t, double alpha);

/// Padded diagonal density pair of dimension d >= 3 achieving bound_theorem:
/// rho = Diag(beta+T, alpha, r, ..., r), sigma = Diag(beta, alpha+T, r, ..., r)
/// with r = (1 - alpha - beta - T)/(d-2). Rejects triples whose padding r
/// would fall below max(alpha, beta).
std::pair<HermitianMatrix, HermitianMatrix> equality_states_theorem(const BoundInput& in, int d);

/// The qutrit pair rho = Diag(1-t, t, 0), sigma = Diag(1-t, 0, t) whose
/// regularised relative entropy (c_d = 1) equals t log(1+t).
std::pair<HermitianMatrix, HermitianMatrix> equality_states_corollary2(double t);

}  // namespace entrobound
