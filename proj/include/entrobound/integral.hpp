#pragma once

#include <vector>

#include "entrobound/hermitian.hpp"

namespace entrobound {

enum class QuadratureScheme { gauss_legendre };

struct QuadratureSpec {
    int node_count = 200;
    QuadratureScheme scheme = QuadratureScheme::gauss_legendre;

    QuadratureSpec() = default;
    explicit QuadratureSpec(int nodes, QuadratureScheme s = QuadratureScheme::gauss_legendre)
        : node_count(nodes), scheme(s) {
        if (node_count < 2) throw std::invalid_argument("node_count must be >= 2");
        if (node_count > 100000) throw std::invalid_argument("node_count too large");
    }
};

struct QuadratureNode {
    double x;
    double w;
};

/// Gauss-Legendre nodes and weights on (0, 1).
std::vector<QuadratureNode> gauss_legendre_unit(int node_count);

/// Straight segment (1-s)*start + s*end between two states of equal
/// dimension. Positive definiteness along the segment is checked at the
/// quadrature nodes when the path is consumed.
class LinearPath {
public:
    LinearPath(HermitianMatrix start, HermitianMatrix end);
    const HermitianMatrix& start() const { return start_; }
    const HermitianMatrix& end() const { return end_; }

private:
    HermitianMatrix start_;
    HermitianMatrix end_;
};

/// Matrix logarithm as the quadrature value of
/// integral_0^inf ds (I/(1+s) - (M+s)^-1), after the substitution
/// s = u/(1-u). Resolvents are computed by Cholesky solves, keeping this
/// path independent of the spectral implementation it cross-checks.
HermitianMatrix log_quadrature(const HermitianMatrix& m, const QuadratureSpec& q);

/// Derivative of the matrix logarithm at A in direction delta, in closed
/// form: first divided differences of log across A's eigenbasis. Valid for
/// PSD A when the kernel of A annihilates delta.
HermitianMatrix t_super(const HermitianMatrix& a, const HermitianMatrix& delta);

/// Same map as the quadrature value of
/// integral_0^inf ds (A+s)^-1 delta (A+s)^-1; kept as an independent oracle.
HermitianMatrix t_super_quadrature(const HermitianMatrix& a, const HermitianMatrix& delta,
                                   const QuadratureSpec& q);

/// Max-entry deviation between the central finite difference
/// (log(A+h delta) - log(A-h delta))/(2h) and t_super(A, delta), relative
/// to the largest entry of the closed form.
double log_directional_derivative_check(const HermitianMatrix& a, const HermitianMatrix& delta,
                                        double h);

/// Relative entropy between PD endpoints via the linear-path representation
/// Tr(A-B) + Tr(B-A)log B - integral_0^1 ds Tr((B-A) log C(s)).
double relative_entropy_path_integral(const LinearPath& path, const QuadratureSpec& q);

}  // namespace entrobound
