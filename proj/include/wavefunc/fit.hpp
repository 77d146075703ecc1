#pragma once

#include <vector>

#include "wavefunc/model.hpp"

namespace wavefunc {

struct FitOptions {
    int degree = 10;
    int max_iterations = 500;
    double gradient_tolerance = 1e-8;   // infinity norm at termination
    std::vector<double> initial_gamma;  // defaults to all zeros (length degree)
};

struct FitReport {
    bool converged = false;
    int iterations = 0;
    double final_log_likelihood = 0.0;
    double gradient_norm = 0.0;
};

struct Standardization {
    double location = 0.0;  // sample mean
    double scale = 0.0;     // sqrt(2) * sample standard deviation
    std::vector<double> z;  // standardized sample, variance 1/2
};

/// Shift/stretch the sample so that z = (x - location)/scale has mean 0 and
/// variance 1/2, putting a Gaussian sample near the single basis function
/// h_0.  Uses the unbiased sample standard deviation.  Requires n >= 2 and
/// at least two distinct values; throws DataError otherwise.
Standardization standardize(const std::vector<double>& data);

/// Log-likelihood of the standardized sample z under the density
/// (sum_k w_k h_k(z))^2 with w = unproject(gamma):
///   l(gamma) = sum_i log max(amplitude(z_i)^2, density_floor).
double log_likelihood(const std::vector<double>& gamma, const std::vector<double>& z);

/// Analytic gradient dl/dgamma via the chain rule through the inverse
/// stereographic projection.  Length K vector.
std::vector<double> grad_log_likelihood(const std::vector<double>& gamma,
                                        const std::vector<double>& z);

/// Maximum-likelihood fit: standardizes the data, then maximizes l(gamma)
/// from initial_gamma (default 0, i.e. the standardized Gaussian up to
/// amplitude sign) with a quasi-Newton optimizer and analytic gradients.
/// The returned log-likelihood is never below the initial point's.
/// Non-convergence is reported through the FitReport, not thrown.
std::pair<WaveModel, FitReport> fit_mle(const std::vector<double>& data,
                                        const FitOptions& options = {});

}  // namespace wavefunc
