#include "entrobound/integral.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace entrobound {

std::vector<QuadratureNode> gauss_legendre_unit(int node_count) {
    (void)QuadratureSpec(node_count);  // range validation
    const int n = node_count;
    std::vector<QuadratureNode> nodes(static_cast<std::size_t>(n));

    // Newton on P_n, symmetric roots; standard [-1,1] rule mapped to [0,1].
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        nodes[static_cast<std::size_t>(i)] = {0.5 * (1.0 - z), 0.5 * w};
        nodes[static_cast<std::size_t>(n - 1 - i)] = {0.5 * (1.0 + z), 0.5 * w};
    }
    return nodes;
}

namespace {

// Inverse of a Hermitian positive definite matrix by Cholesky; throws on a
// non-positive pivot.
ComplexMatrix hpd_inverse(const HermitianMatrix& h, double shift) {
    const int d = h.dim();
    ComplexMatrix l(d);
    for (int j = 0; j < d; ++j) {
        double diag = h(j, j).real() + shift;
        for (int k = 0; k < j; ++k) diag -= std::norm(l(j, k));
        if (!(diag > 0.0)) {
            std::ostringstream msg;
            msg << "resolvent singular: matrix + " << shift << " is not positive definite";
            throw std::domain_error(msg.str());
        }
        const double ljj = std::sqrt(diag);
        l(j, j) = ljj;
        for (int i = j + 1; i < d; ++i) {
            Complex acc = h(i, j);
            for (int k = 0; k < j; ++k) acc -= l(i, k) * std::conj(l(j, k));
            l(i, j) = acc / ljj;
        }
    }

    // solve L y = e_c, then L^dagger x = y, one column at a time
    ComplexMatrix inv(d);
    std::vector<Complex> y(static_cast<std::size_t>(d));
    std::vector<Complex> x(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) {
        for (int i = 0; i < d; ++i) {
            Complex acc = (i == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            for (int k = 0; k < i; ++k) acc -= l(i, k) * y[static_cast<std::size_t>(k)];
            y[static_cast<std::size_t>(i)] = acc / l(i, i).real();
        }
        for (int i = d - 1; i >= 0; --i) {
            Complex acc = y[static_cast<std::size_t>(i)];
            for (int k = i + 1; k < d; ++k) acc -= std::conj(l(k, i)) * x[static_cast<std::size_t>(k)];
            x[static_cast<std::size_t>(i)] = acc / l(i, i).real();
        }
        for (int i = 0; i < d; ++i) inv(i, c) = x[static_cast<std::size_t>(i)];
    }
    return inv;
}

// first divided difference of log, with the equal-argument limit 1/x
double log_divided_difference(double x, double y) {
    const double hi = std::max(x, y);
    if (std::abs(x - y) <= 1e-10 * hi) return 2.0 / (x + y);
    return std::log1p((x - y) / y) / (x - y);
}

}  // namespace

LinearPath::LinearPath(HermitianMatrix start, HermitianMatrix end)
    : start_(std::move(start)), end_(std::move(end)) {
    if (start_.dim() != end_.dim()) {
        throw std::invalid_argument("LinearPath endpoints must share a dimension");
    }
}

HermitianMatrix log_quadrature(const HermitianMatrix& m, const QuadratureSpec& q) {
    const int d = m.dim();
    ComplexMatrix acc(d);
    for (const QuadratureNode& node : gauss_legendre_unit(q.node_count)) {
        const double u = node.x;
        const double s = u / (1.0 - u);
        const double jac = 1.0 / ((1.0 - u) * (1.0 - u));
        const double weight = node.w * jac;

        ComplexMatrix term = hpd_inverse(m, s);
        term *= Complex(-weight, 0.0);
        const double scalar = weight / (1.0 + s);
        for (int i = 0; i < d; ++i) term(i, i) += scalar;
        acc += term;
    }
    return HermitianMatrix::hermitian_part(acc);
}

HermitianMatrix t_super(const HermitianMatrix& a, const HermitianMatrix& delta) {
    if (a.dim() != delta.dim()) {
        throw std::invalid_argument("t_super: dimension mismatch");
    }
    const int d = a.dim();
    EigenDecomposition eig = eigh(a);
    const double lmax = std::max(eig.eigenvalues.back(), 0.0);
    const double ker_tol = d * 1e-14 * lmax;
    if (eig.eigenvalues.front() < -ker_tol) {
        std::ostringstream msg;
        msg << "t_super: matrix is not positive semidefinite (eigenvalue "
            << eig.eigenvalues.front() << ")";
        throw std::domain_error(msg.str());
    }

    // transform delta into the eigenbasis
    const ComplexMatrix& u = eig.eigenvectors;
    ComplexMatrix dt = u.adjoint() * (delta.matrix() * u);

    const double kernel_weight_tol = 1e-10 * (1.0 + delta.max_abs());
    for (int i = 0; i < d; ++i) {
        const double li = eig.eigenvalues[static_cast<std::size_t>(i)];
        for (int j = 0; j < d; ++j) {
            const double lj = eig.eigenvalues[static_cast<std::size_t>(j)];
            if (li <= ker_tol || lj <= ker_tol) {
                if (std::abs(dt(i, j)) > kernel_weight_tol) {
                    throw std::domain_error(
                        "t_super: kernel of the base point does not annihilate the direction");
                }
                dt(i, j) = 0.0;
            } else {
                dt(i, j) *= log_divided_difference(li, lj);
            }
        }
    }
    return HermitianMatrix::hermitian_part(u * (dt * u.adjoint()));
}

HermitianMatrix t_super_quadrature(const HermitianMatrix& a, const HermitianMatrix& delta,
                                   const QuadratureSpec& q) {
    if (a.dim() != delta.dim()) {
        throw std::invalid_argument("t_super_quadrature: dimension mismatch");
    }
    const int d = a.dim();
    ComplexMatrix acc(d);
    for (const QuadratureNode& node : gauss_legendre_unit(q.node_count)) {
        const double u = node.x;
        const double s = u / (1.0 - u);
        const double weight = node.w / ((1.0 - u) * (1.0 - u));

        const ComplexMatrix resolvent = hpd_inverse(a, s);
        ComplexMatrix term = resolvent * (delta.matrix() * resolvent);
        term *= Complex(weight, 0.0);
        acc += term;
    }
    return HermitianMatrix::hermitian_part(acc);
}

double log_directional_derivative_check(const HermitianMatrix& a, const HermitianMatrix& delta,
                                        double h) {
    if (!(h > 0.0)) throw std::invalid_argument("step h must be positive");
    const HermitianMatrix forward = matrix_log(a + h * delta);
    const HermitianMatrix backward = matrix_log(a + (-h) * delta);
    const HermitianMatrix fd = (0.5 / h) * (forward - backward);
    const HermitianMatrix ts = t_super(a, delta);
    const double scale = std::max(ts.max_abs(), 1e-300);
    return (fd - ts).max_abs() / scale;
}

double relative_entropy_path_integral(const LinearPath& path, const QuadratureSpec& q) {
    const HermitianMatrix& a = path.start();
    const HermitianMatrix& b = path.end();
    for (const HermitianMatrix* endpoint : {&a, &b}) {
        if (min_eigenvalue(*endpoint) <= 0.0) {
            throw std::domain_error(
                "relative_entropy_path_integral requires positive definite endpoints");
        }
    }

    const HermitianMatrix delta = b - a;
    double value = a.trace() - b.trace() + trace_product(delta, matrix_log(b));

    for (const QuadratureNode& node : gauss_legendre_unit(q.node_count)) {
        HermitianMatrix c = a + node.x * delta;
        try {
            value -= node.w * trace_product(delta, matrix_log(c));
        } catch (const std::domain_error& err) {
            std::ostringstream msg;
            msg << "path not positive definite at s=" << node.x << ": " << err.what();
            throw std::domain_error(msg.str());
        }
    }
    return value;
}

}  // namespace entrobound
