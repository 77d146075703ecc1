#include "wavefunc/sphere.hpp"

#include <cmath>
#include <stdexcept>

namespace wavefunc {

namespace {
constexpr double kPoleTolerance = 1e-12;
constexpr double kNormTolerance = 1e-8;
}  // namespace

std::vector<double> project(const std::vector<double>& w) {
    if (w.empty()) {
        throw std::invalid_argument("project: empty coefficient vector");
    }
    double norm2 = 0.0;
    for (double v : w) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("project: non-finite coefficient");
        }
        norm2 += v * v;
    }
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("project: coefficient vector is not unit-norm");
    }
    if (std::abs(w[0] - 1.0) < kPoleTolerance) {
        throw std::domain_error("project: w is at the projection pole (1, 0, ..., 0)");
    }
    const double denom = 1.0 - w[0];
    std::vector<double> gamma(w.size() - 1);
    for (std::size_t k = 1; k < w.size(); ++k) {
        gamma[k - 1] = w[k] / denom;
    }
    return gamma;
}

std::vector<double> unproject(const std::vector<double>& gamma) {
    double s2 = 0.0;
    for (double g : gamma) {
        if (!std::isfinite(g)) {
            throw std::invalid_argument("unproject: non-finite gamma entry");
        }
        s2 += g * g;
    }
    const double denom = s2 + 1.0;
    std::vector<double> w(gamma.size() + 1);
    w[0] = (s2 - 1.0) / denom;
    for (std::size_t k = 0; k < gamma.size(); ++k) {
        w[k + 1] = 2.0 * gamma[k] / denom;
    }
    return w;
}

}  // namespace wavefunc
