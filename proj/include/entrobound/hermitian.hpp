#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace entrobound {

using Complex = std::complex<double>;

// Soft cap on matrix dimension; this library targets desk-scale dense algebra.
inline constexpr int kMaxDim = 256;

/// Dense row-major square complex matrix with no structural guarantees.
/// Used for eigenvector bases and intermediate products.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);
    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    Complex& operator()(int i, int j) {
        return data_[static_cast<std::size_t>(i) * dim_ + j];
    }
    const Complex& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * dim_ + j];
    }

    ComplexMatrix adjoint() const;
    double max_abs() const;
    double frobenius_norm() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

private:
    int dim_;
    std::vector<Complex> data_;
};

/// Immutable d x d Hermitian matrix. Construction from raw entries rejects
/// inputs whose anti-Hermitian part exceeds 1e-12 times the largest entry
/// magnitude, then stores (M + M^dagger)/2 so the invariant holds exactly.
class HermitianMatrix {
public:
    static HermitianMatrix from_entries(const ComplexMatrix& m);
    static HermitianMatrix zero(int dim);
    static HermitianMatrix identity(int dim);
    static HermitianMatrix diagonal(const std::vector<double>& entries);

    /// (M + M^dagger)/2 without the tolerance gate; for results of spectral
    /// synthesis and quadrature sums that are Hermitian up to rounding.
    static HermitianMatrix hermitian_part(const ComplexMatrix& m);

    int dim() const { return m_.dim(); }
    Complex operator()(int i, int j) const { return m_(i, j); }
    const ComplexMatrix& matrix() const { return m_; }

    double trace() const;
    double max_abs() const { return m_.max_abs(); }

    HermitianMatrix operator+(const HermitianMatrix& other) const;
    HermitianMatrix operator-(const HermitianMatrix& other) const;
    friend HermitianMatrix operator*(double scale, const HermitianMatrix& m);

    /// M + c*I.
    HermitianMatrix shifted(double c) const;

private:
    explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

/// Spectral factorization M = U diag(lambda) U^dagger with eigenvalues
/// ascending and eigenvector columns unitary.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Orthogonal positive/negative parts of a Hermitian matrix,
/// Delta = plus - minus with plus*minus = 0.
struct JordanParts {
    HermitianMatrix plus;
    HermitianMatrix minus;
};

/// Thrown when the Jacobi sweep cap is reached before the off-diagonal mass
/// drops below threshold; carries the residual for diagnostics.
struct EigensolverError : std::runtime_error {
    EigensolverError(const std::string& what, double residual)
        : std::runtime_error(what), off_diagonal_residual(residual) {}
    double off_diagonal_residual;
};

/// Cyclic Jacobi eigendecomposition with complex rotations. Converges when
/// the off-diagonal Frobenius mass falls below 1e-14 of the Frobenius norm;
/// gives up after 100 sweeps.
EigenDecomposition eigh(const HermitianMatrix& m);

/// U diag(f(lambda)) U^dagger for a given decomposition.
HermitianMatrix spectral_map(const EigenDecomposition& eig,
                             const std::function<double(double)>& f);

/// U diag(lambda) U^dagger, for checking reconstruction residuals.
ComplexMatrix reconstruct(const EigenDecomposition& eig);

/// Natural matrix logarithm of a positive definite matrix.
HermitianMatrix matrix_log(const HermitianMatrix& m);

/// Sum of absolute eigenvalues.
double trace_norm(const HermitianMatrix& m);

/// Largest absolute eigenvalue.
double operator_norm(const HermitianMatrix& m);

JordanParts jordan_decompose(const HermitianMatrix& delta);

double min_eigenvalue(const HermitianMatrix& m);

/// True iff the smallest eigenvalue is >= -tol.
bool is_psd(const HermitianMatrix& m, double tol);

/// Re Tr(a*b); real whenever both arguments are Hermitian.
double trace_product(const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace entrobound
