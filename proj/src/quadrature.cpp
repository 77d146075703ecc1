#include "wavefunc/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wavefunc/errors.hpp"
#include "wavefunc/hermite.hpp"

namespace wavefunc {

namespace {

constexpr double kPiQuarterInv = 0.7511255444649425;  // pi^(-1/4)

// p_n(z) and p_{n-1}(z) for the exp(-x^2)-orthonormal polynomials
// p_n = H_n / sqrt(sqrt(pi) 2^n n!).
void ortho_poly_pair(int n, double z, double& pn, double& pnm1) {
    double p1 = kPiQuarterInv;
    double p2 = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
    }
    pn = p1;
    pnm1 = p2;
}

}  // namespace

namespace {

// Number of roots of p_n below x: Sturm count on the LDL^T factorization of
// the (shifted) Jacobi matrix, whose eigenvalues are the roots.  Diagonal
// entries are 0 and squared off-diagonals are i/2, so the recurrence is
// d_i = -x - (i/2)/d_{i-1}.
int roots_below(int n, double x) {
    int count = 0;
    double d = -x;
    if (d < 0.0) ++count;
    for (int i = 1; i < n; ++i) {
        if (d == 0.0) d = 1e-300;
        d = -x - 0.5 * i / d;
        if (d < 0.0) ++count;
    }
    return count;
}

double weight_at(int order, double z) {
    double pn = 0.0, pnm1 = 0.0;
    ortho_poly_pair(order, z, pn, pnm1);
    const double deriv = std::sqrt(2.0 * order) * pnm1;  // p_n'(z) at a root of p_n
    return 2.0 / (deriv * deriv);
}

}  // namespace

QuadratureRule gauss_hermite(int order) {
    if (order < 1 || order > 200) {
        throw std::invalid_argument("gauss_hermite: order must be in [1, 200], got " +
                                    std::to_string(order));
    }
    QuadratureRule rule;
    rule.order = order;
    rule.nodes.assign(order, 0.0);
    rule.weights.assign(order, 0.0);

    const double bound = std::sqrt(2.0 * order + 1);  // all roots lie inside
    for (int idx = 0; idx < order / 2; ++idx) {
        // Isolate the (order-1-idx)-th ascending root by Sturm bisection...
        const int target = order - 1 - idx;
        double lo = 0.0, hi = bound;
        for (int it = 0; it < 80 && hi - lo >= 1e-10; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (roots_below(order, mid) <= target) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        // ...then polish with Newton on the recurrence, falling back to
        // sign bisection whenever a step would leave the bracket.
        double z = 0.5 * (lo + hi);
        double plo, unused;
        ortho_poly_pair(order, lo, plo, unused);
        for (int it = 0; it < 60; ++it) {
            double pn, pnm1;
            ortho_poly_pair(order, z, pn, pnm1);
            const double deriv = std::sqrt(2.0 * order) * pnm1;
            double next = z - pn / deriv;
            if (!(next > lo && next < hi)) {
                if ((pn > 0.0) == (plo > 0.0)) {
                    lo = z;
                } else {
                    hi = z;
                }
                next = 0.5 * (lo + hi);
            }
            const bool settled = std::abs(next - z) <= 1e-16 * std::max(1.0, std::abs(next));
            z = next;
            if (settled) break;
        }
        rule.nodes[target] = z;
        rule.nodes[idx] = -z;
        rule.weights[target] = weight_at(order, z);
        rule.weights[idx] = rule.weights[target];
    }
    if (order % 2 == 1) {
        const int mid = order / 2;
        rule.nodes[mid] = 0.0;
        rule.weights[mid] = weight_at(order, 0.0);
    }
    return rule;
}

namespace {

// Standardized moments E[Z^p], computed exactly: the integrand
// z^p (sum_k w_k p_k(z))^2 exp(-z^2) is quadrature-exact at order
// K + ceil(p/2) + 1.
double standardized_moment(const WaveModel& m, int p) {
    const int K = m.degree();
    const int order = K + (p + 1) / 2 + 1;
    const QuadratureRule rule = gauss_hermite(order);
    const auto& w = m.coefficients();
    double acc = 0.0;
    for (int j = 0; j < rule.order; ++j) {
        const double z = rule.nodes[j];
        const std::vector<double> poly = eval_basis_scaled(z, K);
        double amp = 0.0;
        for (int k = 0; k <= K; ++k) amp += w[k] * poly[k];
        acc += rule.weights[j] * std::pow(z, p) * amp * amp;
    }
    return acc;
}

}  // namespace

double moment(const WaveModel& m, int p, MomentScale scale) {
    if (p < 0) {
        throw std::invalid_argument("moment: p must be >= 0");
    }
    if (scale == MomentScale::standardized) {
        return standardized_moment(m, p);
    }
    // E[(s Z + mu)^p] = sum_q C(p, q) s^q mu^(p-q) E[Z^q]
    double acc = 0.0;
    double binom = 1.0;
    for (int q = 0; q <= p; ++q) {
        if (q > 0) binom *= static_cast<double>(p - q + 1) / q;
        acc += binom * std::pow(m.scale(), q) * std::pow(m.location(), p - q) *
               standardized_moment(m, q);
    }
    return acc;
}

double entropy(const WaveModel& m, MomentScale scale) {
    const int K = m.degree();
    const QuadratureRule rule = gauss_hermite(std::max(64, 4 * K));
    const auto& w = m.coefficients();
    double acc = 0.0;
    for (int j = 0; j < rule.order; ++j) {
        const double z = rule.nodes[j];
        const std::vector<double> poly = eval_basis_scaled(z, K);
        double amp = 0.0;
        for (int k = 0; k <= K; ++k) amp += w[k] * poly[k];
        const double g = amp * amp;               // density * exp(+z^2)
        const double f = g * std::exp(-z * z);    // standardized density
        acc -= rule.weights[j] * g * std::log(std::max(f, WaveModel::density_floor));
    }
    return scale == MomentScale::original ? acc + std::log(m.scale()) : acc;
}

namespace {

struct SimpsonWorker {
    const std::function<double(double)>& f;
    double tol;
    int max_depth;
    // Intervals are always split this many times before the error estimate
    // may accept them.  A coarse stencil can land entirely on zeros of an
    // oscillatory integrand (Hermite functions vanish at the center and the
    // tails) and report a spurious zero; forced refinement breaks that
    // alignment.
    static constexpr int min_depth = 6;

    double recurse(double a, double fa, double b, double fb, double c, double fc, double whole,
                   int level) const {
        const double d = 0.5 * (a + c);
        const double e = 0.5 * (c + b);
        const double fd = f(d);
        const double fe = f(e);
        const double left = (c - a) / 6.0 * (fa + 4.0 * fd + fc);
        const double right = (b - c) / 6.0 * (fc + 4.0 * fe + fb);
        const double diff = left + right - whole;
        if (level >= min_depth && std::abs(diff) <= 15.0 * tol) {
            return left + right + diff / 15.0;
        }
        if (level >= max_depth) {
            throw QuadratureError("adaptive_simpson: tolerance not reached within subdivision limit");
        }
        return recurse(a, fa, c, fc, d, fd, left, level + 1) +
               recurse(c, fc, b, fb, e, fe, right, level + 1);
    }
};

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("adaptive_simpson: tolerance must be positive");
    }
    const double c = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fc = f(c);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fc + fb);
    return SimpsonWorker{f, tol, max_depth}.recurse(a, fa, b, fb, c, fc, whole, 0);
}

ProjectionResult project_density(const std::function<double(double)>& sqrt_f, int degree,
                                 double tol) {
    if (degree < 0) {
        throw std::invalid_argument("project_density: degree must be >= 0");
    }
    // h_k(x) sqrt_f(x) carries exp(-x^2/2); for standardized densities the
    // integrand is below 1e-30 outside |x| <= 12.
    constexpr double kRadius = 12.0;
    ProjectionResult result;
    result.coefficients.resize(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k <= degree; ++k) {
        auto integrand = [&, k](double x) { return eval_basis(x, k).values[k] * sqrt_f(x); };
        const double wk = adaptive_simpson(integrand, -kRadius, kRadius, tol);
        result.coefficients[k] = wk;
        result.partial_mass += wk * wk;
    }
    return result;
}

}  // namespace wavefunc
