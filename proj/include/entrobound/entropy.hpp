#pragma once

#include <cmath>
#include <stdexcept>

#include "entrobound/hermitian.hpp"

namespace entrobound {

/// A real number or +infinity. Relative entropy returns this; the infinite
/// branch is a value, not an error state.
class ExtendedReal {
public:
    static ExtendedReal finite(double v) {
        if (std::isnan(v)) throw std::invalid_argument("ExtendedReal cannot hold NaN");
        return ExtendedReal(v, true);
    }
    static ExtendedReal infinity() { return ExtendedReal(0.0, false); }

    bool is_finite() const { return finite_; }
    bool is_infinite() const { return !finite_; }

    double value() const {
        if (!finite_) throw std::logic_error("ExtendedReal: value() on +infinity");
        return value_;
    }

private:
    ExtendedReal(double v, bool finite) : value_(v), finite_(finite) {}
    double value_;
    bool finite_;
};

/// Dimension and normalisation constant for the regularised relative
/// entropy. The constant is caller-configurable; 1/log 2 normalises the
/// measure to 1 on orthogonal pure states.
struct RegularisationConfig {
    int dim;
    double c_d;

    RegularisationConfig(int dim_, double c_d_) : dim(dim_), c_d(c_d_) {
        if (dim < 1) throw std::invalid_argument("RegularisationConfig: dim must be >= 1");
        if (!(c_d > 0.0)) throw std::invalid_argument("RegularisationConfig: c_d must be positive");
    }

    static RegularisationConfig with_default_constant(int dim_) {
        return RegularisationConfig(dim_, 1.0 / std::log(2.0));
    }
};

/// -Tr A log A with the 0 log 0 = 0 convention; A must be PSD at tolerance
/// 1e-10 (eigenvalues in [-1e-10, 0] are clamped to zero).
double von_neumann_entropy(const HermitianMatrix& a);

/// Tr A (log A - log B) evaluated spectrally, or +infinity when A has
/// weight above 1e-12 on the kernel of B. Non-PSD inputs are a domain
/// error, distinct from the infinite return.
ExtendedReal relative_entropy(const HermitianMatrix& a, const HermitianMatrix& b);

/// |S(aA||aB) - a S(A||B)|; test utility for the scaling identity.
double scaling_check(const HermitianMatrix& a, const HermitianMatrix& b, double scale);

/// c_d * S(rho + I || sigma + I) for density matrices; always finite.
double regularised_relative_entropy(const HermitianMatrix& rho, const HermitianMatrix& sigma,
                                    const RegularisationConfig& cfg);

/// ||rho - sigma||_1 / 2.
double trace_distance(const HermitianMatrix& rho, const HermitianMatrix& sigma);

}  // namespace entrobound
