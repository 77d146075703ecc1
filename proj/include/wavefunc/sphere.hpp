#pragma once

#include <vector>

namespace wavefunc {

/// Stereographic projection between unit-norm coefficient vectors
/// w = (w_0, ..., w_K) on the K-sphere and unconstrained gamma vectors of
/// length K, projecting from the pole (1, 0, ..., 0).
///
/// gamma slot j holds the coordinate with one-based index j+1 of the image
/// point; the coordinate with index 0 is identically zero on the projection
/// plane and is dropped.

/// gamma_k = w_k / (1 - w_0), k = 1..K.
///
/// Requires |w| = 1 (within 1e-8) and w_0 away from the pole: throws
/// std::domain_error when |w_0 - 1| < 1e-12, where the projection has no
/// finite image.
std::vector<double> project(const std::vector<double>& w);

/// Inverse projection.  With S^2 = sum gamma_k^2:
///   w_0 = (S^2 - 1)/(S^2 + 1),   w_k = 2 gamma_k/(S^2 + 1).
///
/// The result is exactly unit-norm up to roundoff for any finite gamma;
/// gamma = 0 maps to (-1, 0, ..., 0).
std::vector<double> unproject(const std::vector<double>& gamma);

}  // namespace wavefunc
