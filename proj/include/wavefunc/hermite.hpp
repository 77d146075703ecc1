#pragma once

#include <optional>
#include <vector>

namespace wavefunc {

/// Values of the orthonormal Hermite functions h_0(x)..h_K(x) at one point,
/// optionally with first derivatives.
///
/// h_n(x) = H_n(x) exp(-x^2/2) / sqrt(sqrt(pi) 2^n n!), where H_n is the
/// physicists' Hermite polynomial.  The family is orthonormal on the real
/// line: \int h_n h_m dx = delta_nm.
struct BasisValues {
    double x = 0.0;
    std::vector<double> values;                 // h_0(x) .. h_K(x)
    std::optional<std::vector<double>> derivs;  // h_0'(x) .. h_K'(x)
};

/// Evaluate h_0..h_K at x via the normalized three-term recurrence
///   h_{n+1}(x) = x sqrt(2/(n+1)) h_n(x) - sqrt(n/(n+1)) h_{n-1}(x),
/// which avoids the 2^n n! overflow of the naive normalization constant and
/// stays finite for any K up to several hundred.
///
/// Throws std::invalid_argument for non-finite x or negative K.
BasisValues eval_basis(double x, int degree);

/// As eval_basis, but also fills derivs using
///   h_n'(x) = sqrt(2n) h_{n-1}(x) - x h_n(x).
BasisValues eval_basis_deriv(double x, int degree);

/// Evaluate the exp-free scaled polynomials H_n(x)/sqrt(sqrt(pi) 2^n n!)
/// for n = 0..K.  These equal h_n(x) exp(+x^2/2) and are orthonormal with
/// respect to the weight exp(-x^2); quadrature code folds the Gaussian
/// factor into the quadrature weights instead.
std::vector<double> eval_basis_scaled(double x, int degree);

}  // namespace wavefunc
