#pragma once

#include <functional>
#include <vector>

#include "wavefunc/model.hpp"

namespace wavefunc {

/// Gauss-Hermite rule for the weight function exp(-x^2):
///   int g(x) exp(-x^2) dx  ~=  sum_j weights[j] * g(nodes[j]),
/// exact for polynomials g of degree <= 2*order - 1.
struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;    // ascending, symmetric about 0
    std::vector<double> weights;  // positive, symmetric, sum = sqrt(pi)
};

/// Build the rule of the given order (1..200).  Nodes are the roots of the
/// physicists' Hermite polynomial H_order, located by Newton iteration on
/// the normalized recurrence with interlacing-based initial guesses;
/// weights come from the derivative relation w_j = 2 / (p'_order(x_j))^2
/// with p_n the exp(-x^2)-orthonormal polynomials.
QuadratureRule gauss_hermite(int order);

/// Raw moment E[X^p] of the model's density.  On the standardized scale the
/// integrand is a polynomial of degree 2K + p times exp(-z^2), so the result
/// is exact up to roundoff.  Original-scale moments expand
/// (scale*z + location)^p binomially over the standardized ones.
enum class MomentScale { standardized, original };
double moment(const WaveModel& m, int p, MomentScale scale = MomentScale::original);

/// Differential entropy -int f log f.  The integrand is not polynomial, so
/// this is an over-resolved quadrature estimate (order max(64, 4K)), not an
/// exact value.  Original scale = standardized entropy + log(scale).
double entropy(const WaveModel& m, MomentScale scale = MomentScale::original);

/// Basis coefficients of a known square-root density:
///   w_k = int h_k(x) sqrt_f(x) dx,  k = 0..K,
/// each computed by adaptive Simpson integration on [-12, 12] with the given
/// per-interval tolerance.  sqrt_f must already be standardized (mean ~ 0,
/// variance ~ 1/2).  The returned coefficients are NOT renormalized;
/// partial_mass = sum w_k^2 <= 1 measures how much of the density the
/// truncated basis captures.
struct ProjectionResult {
    std::vector<double> coefficients;
    double partial_mass = 0.0;
};
ProjectionResult project_density(const std::function<double(double)>& sqrt_f, int degree,
                                 double tol = 1e-10);

/// Adaptive Simpson quadrature of f on [a, b].  Accepts an interval when the
/// Richardson error estimate is below 15*tol, recursing with the same
/// per-interval tolerance; throws QuadratureError past max_depth.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 50);

}  // namespace wavefunc
