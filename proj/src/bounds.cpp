#include "entrobound/bounds.hpp"

#include <cmath>
#include <sstream>

#include "entrobound/integral.hpp"

namespace entrobound {

namespace {

constexpr double kFeasibilitySlack = 1e-12;
constexpr double kAlphaZero = 1e-300;  // below this the alpha log term is the 0 limit

void require(bool ok, const std::string& what) {
    if (!ok) throw std::domain_error(what);
}

}  // namespace

BoundInput::BoundInput(double t, double alpha, double beta, std::optional<int> dim)
    : t_(t), alpha_(alpha), beta_(beta) {
    require(std::isfinite(t) && std::isfinite(alpha) && std::isfinite(beta),
            "BoundInput: inputs must be finite");
    require(t >= 0.0, "BoundInput: T must be nonnegative");
    require(alpha >= 0.0, "BoundInput: alpha must be nonnegative");
    require(beta > 0.0, "BoundInput: beta must be positive");
    if (t < std::abs(alpha - beta) - kFeasibilitySlack) {
        std::ostringstream msg;
        msg << "BoundInput: infeasible triple, T=" << t << " < |alpha-beta|="
            << std::abs(alpha - beta) << " (the trace-norm distance of equal-trace states"
            << " cannot fall below the minimal-eigenvalue gap)";
        throw std::domain_error(msg.str());
    }
    if (dim) {
        require(*dim >= 1, "BoundInput: dimension must be positive");
        const double cap = 1.0 / *dim + kFeasibilitySlack;
        require(alpha <= cap, "BoundInput: alpha exceeds 1/d");
        require(beta <= cap, "BoundInput: beta exceeds 1/d");
    }
}

double LemmaThreeInput::bound() const {
    require(gamma >= 0.0 && t >= 0.0, "LemmaThreeInput: gamma and t must be nonnegative");
    require(gamma + t > 0.0, "LemmaThreeInput: gamma + t must be positive");
    return t / (gamma + t);
}

double feasibility_gap(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("feasibility_gap: dimension mismatch");
    require(std::abs(a.trace() - b.trace()) <= 1e-10, "feasibility_gap: traces must match");
    require(is_psd(a, 1e-10) && is_psd(b, 1e-10), "feasibility_gap: inputs must be PSD");
    const double t = trace_distance(a, b);
    return t - std::abs(min_eigenvalue(a) - min_eigenvalue(b));
}

double lemma3_slack(const HermitianMatrix& a, const HermitianMatrix& b, double gamma) {
    if (a.dim() != b.dim()) throw std::invalid_argument("lemma3_slack: dimension mismatch");
    require(gamma >= 0.0, "lemma3_slack: gamma must be nonnegative");
    require(std::abs(a.trace() - b.trace()) <= 1e-10, "lemma3_slack: traces must match");
    const double amin = min_eigenvalue(a);
    require(amin > 0.0 && min_eigenvalue(b) > 0.0, "lemma3_slack: inputs must be PD");
    require(amin >= gamma - 1e-10, "lemma3_slack: a >= gamma violated");

    const HermitianMatrix delta = b - a;
    const double t = 0.5 * trace_norm(delta);
    const double bound = LemmaThreeInput{gamma, t}.bound();
    const HermitianMatrix gap = bound * HermitianMatrix::identity(a.dim()) - t_super(b, delta);
    return min_eigenvalue(gap);
}

double bound_proposition(double t, double alpha) {
    require(t >= 0.0, "bound_proposition: T must be nonnegative");
    require(alpha >= 0.0, "bound_proposition: alpha must be nonnegative");
    if (t < std::abs(alpha - 1.0) - kFeasibilitySlack) {
        throw std::domain_error("bound_proposition: infeasible input, T < |alpha - 1|");
    }
    const double lead = (1.0 + t) * std::log1p(t);
    if (alpha < kAlphaZero) return lead;
    return lead - alpha * std::log1p(t / alpha);
}

double bound_theorem(const BoundInput& in) {
    const double lead = (in.beta() + in.t()) * std::log1p(in.t() / in.beta());
    if (in.alpha() < kAlphaZero) return lead;
    return lead - in.alpha() * std::log1p(in.t() / in.alpha());
}

double bound_corollary1(double t, double beta) {
    require(t >= 0.0, "bound_corollary1: T must be nonnegative");
    require(beta > 0.0, "bound_corollary1: beta must be positive");
    const double lead = (beta + t) * std::log1p(t / beta);
    if (t >= beta) return lead;
    // (beta-T) log(1-T/beta), written to stay accurate as T -> beta
    const double x = beta - t;
    return lead + x * std::log(x / beta);
}

CorollaryTwoBounds bound_corollary2(const BoundInput& in, const RegularisationConfig& cfg) {
    return bound_corollary2(in.t(), in.alpha(), in.beta(), cfg);
}

CorollaryTwoBounds bound_corollary2(double t, double alpha, double beta,
                                    const RegularisationConfig& cfg) {
    require(t >= 0.0 && t <= 1.0 + kFeasibilitySlack,
            "bound_corollary2: trace distance of density matrices must lie in [0, 1]");
    require(alpha >= 0.0 && beta >= 0.0,
            "bound_corollary2: minimal eigenvalues must be nonnegative");
    require(t >= std::abs(alpha - beta) - kFeasibilitySlack,
            "bound_corollary2: infeasible triple, T < |alpha - beta|");
    const double bp = beta + 1.0;
    const double ap = alpha + 1.0;
    const double q = cfg.c_d * ((bp + t) * std::log1p(t / bp) - ap * std::log1p(t / ap));
    const double q2 = cfg.c_d * t * std::log1p(t);
    return CorollaryTwoBounds{q, q2};
}

std::pair<HermitianMatrix, HermitianMatrix> extremal_pair_proposition(double t, double alpha) {
    require(alpha > 0.0, "extremal_pair_proposition: alpha must be positive");
    require(t >= 0.0, "extremal_pair_proposition: T must be nonnegative");
    if (t < std::abs(alpha - 1.0) - kFeasibilitySlack) {
        throw std::domain_error("extremal_pair_proposition: infeasible input, T < |alpha - 1|");
    }
    return {HermitianMatrix::diagonal({1.0 + t, alpha}),
            HermitianMatrix::diagonal({1.0, t + alpha})};
}

std::pair<HermitianMatrix, HermitianMatrix> equality_states_theorem(const BoundInput& in, int d) {
    require(d >= 3, "equality_states_theorem: dimension must be at least 3");
    const double t = in.t();
    const double alpha = in.alpha();
    const double beta = in.beta();
    const double r = (1.0 - alpha - beta - t) / (d - 2);
    if (r < std::max(alpha, beta) - kFeasibilitySlack) {
        std::ostringstream msg;
        msg << "equality_states_theorem: padding " << r << " falls below max(alpha, beta)="
            << std::max(alpha, beta) << "; no normalised diagonal family at d=" << d;
        throw std::domain_error(msg.str());
    }

    std::vector<double> rho{beta + t, alpha};
    std::vector<double> sigma{beta, alpha + t};
    rho.resize(static_cast<std::size_t>(d), r);
    sigma.resize(static_cast<std::size_t>(d), r);
    return {HermitianMatrix::diagonal(rho), HermitianMatrix::diagonal(sigma)};
}

std::pair<HermitianMatrix, HermitianMatrix> equality_states_corollary2(double t) {
    require(t >= 0.0 && t <= 1.0, "equality_states_corollary2: t must lie in [0, 1]");
    return {HermitianMatrix::diagonal({1.0 - t, t, 0.0}),
            HermitianMatrix::diagonal({1.0 - t, 0.0, t})};
}

}  // namespace entrobound
