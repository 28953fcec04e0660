#include "entrobound/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace entrobound {

namespace {

constexpr double kPsdTol = 1e-10;
constexpr double kSupportTol = 1e-12;

void check_psd_input(const EigenDecomposition& eig, const char* who) {
    if (eig.eigenvalues.front() < -kPsdTol) {
        std::ostringstream msg;
        msg << who << ": input is not positive semidefinite (eigenvalue "
            << eig.eigenvalues.front() << ")";
        throw std::domain_error(msg.str());
    }
}

double kernel_threshold(const EigenDecomposition& eig) {
    const double lmax = std::max(eig.eigenvalues.back(), 0.0);
    return static_cast<double>(eig.eigenvalues.size()) * 1e-14 * lmax;
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// diagonal of V^dagger A V: the weights of A in B's eigenbasis
std::vector<double> basis_weights(const HermitianMatrix& a, const ComplexMatrix& v) {
    const int d = a.dim();
    std::vector<double> w(static_cast<std::size_t>(d), 0.0);
    for (int j = 0; j < d; ++j) {
        Complex acc(0.0, 0.0);
        for (int i = 0; i < d; ++i) {
            Complex row(0.0, 0.0);
            for (int k = 0; k < d; ++k) row += a(i, k) * v(k, j);
            acc += std::conj(v(i, j)) * row;
        }
        w[static_cast<std::size_t>(j)] = acc.real();
    }
    return w;
}

}  // namespace

double von_neumann_entropy(const HermitianMatrix& a) {
    EigenDecomposition eig = eigh(a);
    check_psd_input(eig, "von_neumann_entropy");
    double s = 0.0;
    for (double lambda : eig.eigenvalues) s -= xlogx(std::max(lambda, 0.0));
    return s;
}

ExtendedReal relative_entropy(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("relative_entropy: dimension mismatch");
    }
    EigenDecomposition ea = eigh(a);
    EigenDecomposition eb = eigh(b);
    check_psd_input(ea, "relative_entropy");
    check_psd_input(eb, "relative_entropy");

    const double eps_ker = kernel_threshold(eb);
    const std::vector<double> weights = basis_weights(a, eb.eigenvectors);

    double kernel_weight = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (eb.eigenvalues[j] <= eps_ker) kernel_weight += std::max(weights[j], 0.0);
    }
    if (kernel_weight > kSupportTol) return ExtendedReal::infinity();

    const double eps_ker_a = kernel_threshold(ea);
    double tr_a_log_a = 0.0;
    for (double lambda : ea.eigenvalues) {
        if (lambda > eps_ker_a) tr_a_log_a += lambda * std::log(lambda);
    }

    double tr_a_log_b = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (eb.eigenvalues[j] > eps_ker) tr_a_log_b += weights[j] * std::log(eb.eigenvalues[j]);
    }

    return ExtendedReal::finite(tr_a_log_a - tr_a_log_b);
}

double scaling_check(const HermitianMatrix& a, const HermitianMatrix& b, double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("scaling_check: scale must be positive");
    ExtendedReal base = relative_entropy(a, b);
    ExtendedReal scaled = relative_entropy(scale * a, scale * b);
    if (base.is_infinite() || scaled.is_infinite()) {
        throw std::domain_error("scaling_check requires a pair with finite relative entropy");
    }
    return std::abs(scaled.value() - scale * base.value());
}

double regularised_relative_entropy(const HermitianMatrix& rho, const HermitianMatrix& sigma,
                                    const RegularisationConfig& cfg) {
    if (rho.dim() != cfg.dim || sigma.dim() != cfg.dim) {
        throw std::invalid_argument("regularised_relative_entropy: dimension mismatch");
    }
    for (const HermitianMatrix* m : {&rho, &sigma}) {
        if (std::abs(m->trace() - 1.0) > kPsdTol) {
            throw std::domain_error("regularised_relative_entropy requires unit-trace states");
        }
        if (!is_psd(*m, kPsdTol)) {
            throw std::domain_error("regularised_relative_entropy requires PSD states");
        }
    }
    ExtendedReal s = relative_entropy(rho.shifted(1.0), sigma.shifted(1.0));
    return cfg.c_d * s.value();  // shifted states are >= I, so always finite
}

double trace_distance(const HermitianMatrix& rho, const HermitianMatrix& sigma) {
    if (rho.dim() != sigma.dim()) {
        throw std::invalid_argument("trace_distance: dimension mismatch");
    }
    return 0.5 * trace_norm(rho - sigma);
}

}  // namespace entrobound
