#include "wavefunc/hermite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wavefunc {

namespace {

constexpr double kPiQuarterInv = 0.7511255444649425;  // pi^(-1/4)

void check_args(double x, int degree) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("eval_basis: x must be finite");
    }
    if (degree < 0) {
        throw std::invalid_argument("eval_basis: degree must be >= 0, got " +
                                    std::to_string(degree));
    }
}

// Shared recurrence body.  seed is h_0 (with Gaussian factor) or the scaled
// polynomial value pi^(-1/4) (without).
void run_recurrence(double x, int degree, double seed, std::vector<double>& out) {
    out.resize(static_cast<std::size_t>(degree) + 1);
    out[0] = seed;
    if (degree >= 1) {
        out[1] = std::sqrt(2.0) * x * out[0];
    }
    for (int n = 1; n < degree; ++n) {
        out[n + 1] = x * std::sqrt(2.0 / (n + 1)) * out[n] -
                     std::sqrt(static_cast<double>(n) / (n + 1)) * out[n - 1];
    }
}

}  // namespace

BasisValues eval_basis(double x, int degree) {
    check_args(x, degree);
    BasisValues bv;
    bv.x = x;
    run_recurrence(x, degree, kPiQuarterInv * std::exp(-0.5 * x * x), bv.values);
    return bv;
}

BasisValues eval_basis_deriv(double x, int degree) {
    BasisValues bv = eval_basis(x, degree);
    std::vector<double> d(static_cast<std::size_t>(degree) + 1);
    d[0] = -x * bv.values[0];
    for (int n = 1; n <= degree; ++n) {
        d[n] = std::sqrt(2.0 * n) * bv.values[n - 1] - x * bv.values[n];
    }
    bv.derivs = std::move(d);
    return bv;
}

std::vector<double> eval_basis_scaled(double x, int degree) {
    check_args(x, degree);
    std::vector<double> out;
    run_recurrence(x, degree, kPiQuarterInv, out);
    return out;
}

}  // namespace wavefunc
