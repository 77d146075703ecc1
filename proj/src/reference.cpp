#include "wavefunc/reference.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace wavefunc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double normal_pdf(double x, double mu, double sigma) {
    const double z = (x - mu) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * kPi));
}

double normal_cdf(double x, double mu, double sigma) {
    return 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
}

double box_muller(std::function<double()>& u) {
    const double u1 = u();
    const double u2 = u();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

// Gamma(k, 1) for small integer k as a sum of exponentials.
double gamma_integer(int k, std::function<double()>& u) {
    double prod = 1.0;
    for (int i = 0; i < k; ++i) prod *= u();
    return -std::log(prod);
}

}  // namespace

std::vector<double> ReferenceDensity::sample(std::size_t n, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::function<double()> uniform = [&rng]() {
        return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
    };
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(draw_(uniform));
    return out;
}

ReferenceDensity make_reference(const std::string& name) {
    ReferenceDensity r;
    r.name = name;
    if (name == "gaussian_half") {
        r.mean = 0.0;
        r.variance = 0.5;
        r.density = [](double x) { return std::exp(-x * x) / std::sqrt(kPi); };
        r.cdf = [](double x) { return 0.5 * std::erfc(-x); };
        r.draw_ = [](std::function<double()>& u) {
            return std::sqrt(0.5) * box_muller(u);
        };
    } else if (name == "student_t4") {
        r.mean = 0.0;
        r.variance = 2.0;  // nu/(nu - 2); moments of order >= 4 do not exist
        r.density = [](double x) {
            const double b = 1.0 + 0.25 * x * x;
            return 0.375 / (b * b * std::sqrt(b));
        };
        r.cdf = [](double x) {
            const double u = x / std::sqrt(4.0 + x * x);
            return 0.5 + 0.75 * u - 0.25 * u * u * u;
        };
        r.draw_ = [](std::function<double()>& u) {
            const double z = box_muller(u);
            const double chi2 = 2.0 * gamma_integer(2, u);  // chi-squared, 4 dof
            return z * std::sqrt(4.0 / chi2);
        };
    } else if (name == "uniform01") {
        r.mean = 0.5;
        r.variance = 1.0 / 12.0;
        r.density = [](double x) { return (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0; };
        r.cdf = [](double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); };
        r.draw_ = [](std::function<double()>& u) { return u(); };
    } else if (name == "bimodal_mixture") {
        // 0.5 N(-2, 0.5^2) + 0.5 N(+2, 0.5^2): well-separated modes.
        r.mean = 0.0;
        r.variance = 4.25;  // 0.25 within-component + 4 between
        r.density = [](double x) {
            return 0.5 * normal_pdf(x, -2.0, 0.5) + 0.5 * normal_pdf(x, 2.0, 0.5);
        };
        r.cdf = [](double x) {
            return 0.5 * normal_cdf(x, -2.0, 0.5) + 0.5 * normal_cdf(x, 2.0, 0.5);
        };
        r.draw_ = [](std::function<double()>& u) {
            const double side = u() < 0.5 ? -2.0 : 2.0;
            return side + 0.5 * box_muller(u);
        };
    } else if (name == "beta_3_5") {
        r.mean = 3.0 / 8.0;
        r.variance = 15.0 / 576.0;
        r.density = [](double x) {
            if (x <= 0.0 || x >= 1.0) return 0.0;
            const double q = 1.0 - x;
            return 105.0 * x * x * q * q * q * q;  // 1/B(3,5) = 105
        };
        r.cdf = [](double x) {
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            // Regularized incomplete beta with integer parameters:
            // I_x(3, 5) = sum_{j=3}^{7} C(7, j) x^j (1-x)^(7-j)
            const double binom[] = {35.0, 35.0, 21.0, 7.0, 1.0};  // C(7, 3..7)
            double acc = 0.0;
            for (int j = 3; j <= 7; ++j) {
                acc += binom[j - 3] * std::pow(x, j) * std::pow(1.0 - x, 7 - j);
            }
            return acc;
        };
        r.draw_ = [](std::function<double()>& u) {
            const double g1 = gamma_integer(3, u);
            const double g2 = gamma_integer(5, u);
            return g1 / (g1 + g2);
        };
    } else {
        throw std::invalid_argument("make_reference: unknown reference \"" + name + "\"");
    }
    return r;
}

const std::vector<std::string>& reference_names() {
    static const std::vector<std::string> names = {
        "gaussian_half", "student_t4", "uniform01", "bimodal_mixture", "beta_3_5"};
    return names;
}

}  // namespace wavefunc
