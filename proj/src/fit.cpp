#include "wavefunc/fit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "wavefunc/errors.hpp"
#include "wavefunc/hermite.hpp"
#include "wavefunc/lbfgs.hpp"
#include "wavefunc/sphere.hpp"

namespace wavefunc {

Standardization standardize(const std::vector<double>& data) {
    const std::size_t n = data.size();
    if (n < 2) {
        throw DataError("standardize: need at least 2 observations, got " + std::to_string(n));
    }
    double mean = 0.0;
    for (double x : data) {
        if (!std::isfinite(x)) throw DataError("standardize: non-finite observation");
        mean += x;
    }
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double x : data) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (sd == 0.0) {
        throw DataError("standardize: degenerate sample (all values equal)");
    }
    Standardization s;
    s.location = mean;
    s.scale = std::sqrt(2.0) * sd;
    s.z.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.z[i] = (data[i] - mean) / s.scale;
    return s;
}

namespace {

// Shared evaluation: l(gamma) and optionally its gradient.
double eval_likelihood(const std::vector<double>& gamma, const std::vector<double>& z,
                       std::vector<double>* grad_out) {
    const int K = static_cast<int>(gamma.size());
    const std::vector<double> w = unproject(gamma);

    double s2 = 0.0;
    for (double g : gamma) s2 += g * g;
    const double c = s2 + 1.0;

    double ll = 0.0;
    if (grad_out) grad_out->assign(gamma.size(), 0.0);
    double cross_sum = 0.0;  // sum_i (h_0(z_i) - sum_k gamma_k h_k(z_i)) / A_i

    for (double zi : z) {
        const BasisValues bv = eval_basis(zi, K);
        double amp = 0.0;
        for (int k = 0; k <= K; ++k) amp += w[k] * bv.values[k];
        const double density = amp * amp;
        if (density > WaveModel::density_floor) {
            ll += std::log(density);
        } else {
            ll += std::log(WaveModel::density_floor);
            continue;  // floored terms are locally constant: zero gradient
        }
        if (grad_out) {
            const double inv = 1.0 / amp;
            double t = 0.0;
            for (int k = 1; k <= K; ++k) {
                (*grad_out)[k - 1] += (2.0 / c) * bv.values[k] * inv;
                t += gamma[k - 1] * bv.values[k];
            }
            cross_sum += (bv.values[0] - t) * inv;
        }
    }
    if (grad_out) {
        for (int j = 0; j < K; ++j) {
            (*grad_out)[j] = 2.0 * ((*grad_out)[j] + gamma[j] * (2.0 / (c * c)) * 2.0 * cross_sum);
        }
    }
    return ll;
}

}  // namespace

double log_likelihood(const std::vector<double>& gamma, const std::vector<double>& z) {
    return eval_likelihood(gamma, z, nullptr);
}

std::vector<double> grad_log_likelihood(const std::vector<double>& gamma,
                                        const std::vector<double>& z) {
    std::vector<double> grad;
    eval_likelihood(gamma, z, &grad);
    return grad;
}

std::pair<WaveModel, FitReport> fit_mle(const std::vector<double>& data,
                                        const FitOptions& options) {
    if (options.degree < 0) {
        throw std::invalid_argument("fit_mle: degree must be >= 0");
    }
    const Standardization st = standardize(data);

    std::vector<double> gamma0 = options.initial_gamma;
    if (gamma0.empty()) {
        gamma0.assign(static_cast<std::size_t>(options.degree), 0.0);
    } else if (gamma0.size() != static_cast<std::size_t>(options.degree)) {
        throw std::invalid_argument("fit_mle: initial_gamma length must equal degree");
    }

    Objective negative_ll = [&st](const std::vector<double>& gamma, std::vector<double>& grad) {
        const double ll = eval_likelihood(gamma, st.z, &grad);
        for (double& g : grad) g = -g;
        return -ll;
    };

    MinimizeOptions mopt;
    mopt.max_iterations = options.max_iterations;
    mopt.gradient_tolerance = options.gradient_tolerance;
    const MinimizeResult mr = minimize_lbfgs(negative_ll, std::move(gamma0), mopt);

    FitReport report;
    report.converged = mr.converged;
    report.iterations = mr.iterations;
    report.final_log_likelihood = -mr.value;
    report.gradient_norm = mr.gradient_inf_norm;

    WaveModel model(unproject(mr.x), st.location, st.scale);
    return {std::move(model), report};
}

}  // namespace wavefunc
