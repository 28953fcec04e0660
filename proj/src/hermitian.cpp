#include "entrobound/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace entrobound {

namespace {

void check_dim(int dim) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    if (dim > kMaxDim) {
        throw std::invalid_argument("matrix dimension " + std::to_string(dim) +
                                    " exceeds the cap of " + std::to_string(kMaxDim));
    }
}

void check_same_dim(int a, int b) {
    if (a != b) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " +
                                    std::to_string(b));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    check_dim(dim);
    data_.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    check_same_dim(dim_, other.dim_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    check_same_dim(dim_, other.dim_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (Complex& z : data_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a.dim_, b.dim_);
    const int d = a.dim_;
    ComplexMatrix out(d);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

HermitianMatrix HermitianMatrix::from_entries(const ComplexMatrix& m) {
    const int d = m.dim();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
                throw std::invalid_argument("matrix entries must be finite");
            }
        }
    }
    const double tol_herm = 1e-12 * m.max_abs();
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            worst = std::max(worst, 0.5 * std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    if (worst > tol_herm) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian: anti-Hermitian part has max entry " << worst
            << ", tolerance " << tol_herm;
        throw std::invalid_argument(msg.str());
    }
    return hermitian_part(m);
}

HermitianMatrix HermitianMatrix::hermitian_part(const ComplexMatrix& m) {
    const int d = m.dim();
    ComplexMatrix out(d);
    for (int i = 0; i < d; ++i) {
        out(i, i) = Complex(m(i, i).real(), 0.0);
        for (int j = i + 1; j < d; ++j) {
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            out(i, j) = avg;
            out(j, i) = std::conj(avg);
        }
    }
    return HermitianMatrix(std::move(out));
}

HermitianMatrix HermitianMatrix::zero(int dim) { return HermitianMatrix(ComplexMatrix(dim)); }

HermitianMatrix HermitianMatrix::identity(int dim) {
    return HermitianMatrix(ComplexMatrix::identity(dim));
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& entries) {
    ComplexMatrix m(static_cast<int>(entries.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
    return HermitianMatrix(std::move(m));
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim(); ++i) t += m_(i, i).real();
    return t;
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& other) const {
    ComplexMatrix out = m_;
    out += other.m_;
    return HermitianMatrix(std::move(out));
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& other) const {
    ComplexMatrix out = m_;
    out -= other.m_;
    return HermitianMatrix(std::move(out));
}

HermitianMatrix operator*(double scale, const HermitianMatrix& m) {
    ComplexMatrix out = m.m_;
    out *= Complex(scale, 0.0);
    return HermitianMatrix(std::move(out));
}

HermitianMatrix HermitianMatrix::shifted(double c) const {
    ComplexMatrix out = m_;
    for (int i = 0; i < dim(); ++i) out(i, i) += c;
    return HermitianMatrix(std::move(out));
}

namespace {

// One cyclic sweep of complex Jacobi rotations. The (p,q) rotation zeroes
// A(p,q) exactly; the unitary is accumulated into u.
void jacobi_sweep(ComplexMatrix& a, ComplexMatrix& u) {
    const int d = a.dim();
    for (int p = 0; p < d - 1; ++p) {
        for (int q = p + 1; q < d; ++q) {
            const Complex apq = a(p, q);
            const double r = std::abs(apq);
            if (r == 0.0) continue;
            const Complex phase = apq / r;
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const double theta = (aqq - app) / (2.0 * r);
            const double sign = theta >= 0.0 ? 1.0 : -1.0;
            const double t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;

            for (int k = 0; k < d; ++k) {
                if (k == p || k == q) continue;
                const Complex akp = a(k, p);
                const Complex akq = a(k, q);
                a(k, p) = c * akp - s * std::conj(phase) * akq;
                a(k, q) = s * phase * akp + c * akq;
                a(p, k) = std::conj(a(k, p));
                a(q, k) = std::conj(a(k, q));
            }
            a(p, p) = c * c * app + s * s * aqq - 2.0 * s * c * r;
            a(q, q) = s * s * app + c * c * aqq + 2.0 * s * c * r;
            a(p, q) = 0.0;
            a(q, p) = 0.0;

            for (int k = 0; k < d; ++k) {
                const Complex ukp = u(k, p);
                const Complex ukq = u(k, q);
                u(k, p) = c * ukp - s * std::conj(phase) * ukq;
                u(k, q) = s * phase * ukp + c * ukq;
            }
        }
    }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition eigh(const HermitianMatrix& m) {
    const int d = m.dim();
    ComplexMatrix a = m.matrix();
    ComplexMatrix u = ComplexMatrix::identity(d);

    const double fro = a.frobenius_norm();
    const double threshold = 1e-14 * fro;
    constexpr int kMaxSweeps = 100;

    if (fro > 0.0 && d > 1) {
        bool converged = false;
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            if (off_diagonal_norm(a) <= threshold) {
                converged = true;
                break;
            }
            jacobi_sweep(a, u);
        }
        if (!converged && off_diagonal_norm(a) > threshold) {
            const double residual = off_diagonal_norm(a);
            std::ostringstream msg;
            msg << "eigensolver did not converge after " << kMaxSweeps
                << " sweeps; off-diagonal residual " << residual << " (threshold " << threshold
                << ")";
            throw EigensolverError(msg.str(), residual);
        }
    }

    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out{std::vector<double>(static_cast<std::size_t>(d)), ComplexMatrix(d)};
    for (int j = 0; j < d; ++j) {
        const int src = order[static_cast<std::size_t>(j)];
        out.eigenvalues[static_cast<std::size_t>(j)] = a(src, src).real();
        for (int i = 0; i < d; ++i) out.eigenvectors(i, j) = u(i, src);
    }
    return out;
}

HermitianMatrix spectral_map(const EigenDecomposition& eig,
                             const std::function<double(double)>& f) {
    const int d = eig.eigenvectors.dim();
    std::vector<double> fv(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) fv[static_cast<std::size_t>(i)] = f(eig.eigenvalues[static_cast<std::size_t>(i)]);

    ComplexMatrix out(d);
    const ComplexMatrix& u = eig.eigenvectors;
    for (int i = 0; i < d; ++i) {
        for (int k = i; k < d; ++k) {
            Complex acc(0.0, 0.0);
            for (int j = 0; j < d; ++j) acc += u(i, j) * fv[static_cast<std::size_t>(j)] * std::conj(u(k, j));
            out(i, k) = acc;
            out(k, i) = std::conj(acc);
        }
    }
    return HermitianMatrix::hermitian_part(out);
}

ComplexMatrix reconstruct(const EigenDecomposition& eig) {
    const int d = eig.eigenvectors.dim();
    ComplexMatrix out(d);
    const ComplexMatrix& u = eig.eigenvectors;
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            Complex acc(0.0, 0.0);
            for (int j = 0; j < d; ++j)
                acc += u(i, j) * eig.eigenvalues[static_cast<std::size_t>(j)] * std::conj(u(k, j));
            out(i, k) = acc;
        }
    return out;
}

HermitianMatrix matrix_log(const HermitianMatrix& m) {
    EigenDecomposition eig = eigh(m);
    for (double lambda : eig.eigenvalues) {
        if (lambda <= 0.0) {
            std::ostringstream msg;
            msg << "matrix_log requires a positive definite matrix; eigenvalue " << lambda
                << " is not positive";
            throw std::domain_error(msg.str());
        }
    }
    return spectral_map(eig, [](double x) { return std::log(x); });
}

double trace_norm(const HermitianMatrix& m) {
    double s = 0.0;
    for (double lambda : eigh(m).eigenvalues) s += std::abs(lambda);
    return s;
}

double operator_norm(const HermitianMatrix& m) {
    double s = 0.0;
    for (double lambda : eigh(m).eigenvalues) s = std::max(s, std::abs(lambda));
    return s;
}

JordanParts jordan_decompose(const HermitianMatrix& delta) {
    EigenDecomposition eig = eigh(delta);
    HermitianMatrix plus = spectral_map(eig, [](double x) { return std::max(x, 0.0); });
    HermitianMatrix minus = spectral_map(eig, [](double x) { return std::max(-x, 0.0); });
    return JordanParts{std::move(plus), std::move(minus)};
}

double min_eigenvalue(const HermitianMatrix& m) { return eigh(m).eigenvalues.front(); }

bool is_psd(const HermitianMatrix& m, double tol) {
    if (tol < 0.0) throw std::invalid_argument("is_psd tolerance must be nonnegative");
    return min_eigenvalue(m) >= -tol;
}

double trace_product(const HermitianMatrix& a, const HermitianMatrix& b) {
    check_same_dim(a.dim(), b.dim());
    const int d = a.dim();
    double s = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s += (a(i, j) * b(j, i)).real();
    return s;
}

}  // namespace entrobound
