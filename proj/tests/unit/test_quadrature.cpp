#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "wavefunc/errors.hpp"
#include "wavefunc/hermite.hpp"
#include "wavefunc/model.hpp"
#include "wavefunc/quadrature.hpp"
#include "wavefunc/reference.hpp"

using wavefunc::adaptive_simpson;
using wavefunc::gauss_hermite;
using wavefunc::MomentScale;
using wavefunc::project_density;
using wavefunc::QuadratureError;
using wavefunc::WaveModel;

namespace {

constexpr double kSqrtPi = 1.7724538509055159;

// int x^(2m) exp(-x^2) dx = (2m-1)!! sqrt(pi) / 2^m
double even_monomial_integral(int p) {
    if (p % 2 == 1) return 0.0;
    double acc = kSqrtPi;
    for (int k = p - 1; k > 0; k -= 2) acc *= 0.5 * k;
    return acc;
}

WaveModel random_model(oracles::TestRng& rng, int degree, double location, double scale) {
    std::vector<double> w(degree + 1);
    double n2 = 0.0;
    for (auto& v : w) {
        v = rng.normal();
        n2 += v * v;
    }
    for (auto& v : w) v /= std::sqrt(n2);
    return WaveModel(std::move(w), location, scale);
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("tiny rules have closed forms") {
    const auto one = gauss_hermite(1);
    CHECK(one.nodes[0] == 0.0);
    CHECK(one.weights[0] == doctest::Approx(kSqrtPi).epsilon(1e-15));

    const auto two = gauss_hermite(2);
    CHECK(two.nodes[0] == doctest::Approx(-0.7071067811865476).epsilon(1e-14));
    CHECK(two.nodes[1] == doctest::Approx(0.7071067811865476).epsilon(1e-14));
    CHECK(two.weights[0] == doctest::Approx(0.8862269254527580).epsilon(1e-14));
    CHECK(two.weights[1] == doctest::Approx(0.8862269254527580).epsilon(1e-14));
}

TEST_CASE("order 20 integrates x^38 exactly") {
    const auto rule = gauss_hermite(20);
    double acc = 0.0;
    for (int j = 0; j < rule.order; ++j) {
        acc += rule.weights[j] * std::pow(rule.nodes[j], 38);
    }
    const double exact = even_monomial_integral(38);
    CHECK(std::abs(acc - exact) <= 1e-12 * exact);
}

TEST_CASE("rule invariants across orders") {
    for (int order : {1, 2, 3, 5, 16, 31, 64, 128, 200}) {
        CAPTURE(order);
        const auto rule = gauss_hermite(order);
        double sum = 0.0;
        for (double w : rule.weights) {
            CHECK(w > 0.0);
            sum += w;
        }
        CHECK(std::abs(sum - kSqrtPi) < 1e-12);
        for (int j = 0; j < order; ++j) {
            CHECK(rule.nodes[j] == -rule.nodes[order - 1 - j]);
            CHECK(rule.weights[j] == rule.weights[order - 1 - j]);
            if (j > 0) CHECK(rule.nodes[j] > rule.nodes[j - 1]);
        }
        // exact through degree 2n-1: check the top even monomial
        const int p = 2 * ((order * 2 - 1) / 2);
        if (p <= 250) {
            double acc = 0.0;
            for (int j = 0; j < order; ++j) {
                acc += rule.weights[j] * std::pow(rule.nodes[j], p);
            }
            const double exact = even_monomial_integral(p);
            if (std::isfinite(exact) && exact > 0.0) {
                CHECK(std::abs(acc - exact) <= 1e-11 * exact);
            }
        }
    }
}

TEST_CASE("random polynomials integrate exactly up to degree 2n-1") {
    oracles::TestRng rng(101);
    for (int order : {4, 9, 16}) {
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<double> coef(2 * order);  // degree 2n-1
            for (auto& c : coef) c = rng.uniform(-2.0, 2.0);
            double exact = 0.0;
            for (std::size_t p = 0; p < coef.size(); p += 2) {
                exact += coef[p] * even_monomial_integral(static_cast<int>(p));
            }
            const auto rule = gauss_hermite(order);
            double acc = 0.0;
            for (int j = 0; j < rule.order; ++j) {
                double poly = 0.0;
                double xp = 1.0;
                for (double c : coef) {
                    poly += c * xp;
                    xp *= rule.nodes[j];
                }
                acc += rule.weights[j] * poly;
            }
            CHECK(std::abs(acc - exact) <= 1e-11 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("order bounds") {
    CHECK_THROWS_AS(gauss_hermite(0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_hermite(201), std::invalid_argument);
}

TEST_CASE("moments of single basis functions") {
    std::vector<double> w0(11, 0.0);
    w0[0] = 1.0;
    const WaveModel gaussian(std::move(w0), 0.0, 1.0);
    CHECK(std::abs(wavefunc::moment(gaussian, 1)) < 1e-14);
    CHECK(wavefunc::moment(gaussian, 2) == doctest::Approx(0.5).epsilon(1e-13));

    std::vector<double> w1(11, 0.0);
    w1[1] = 1.0;
    const WaveModel excited(std::move(w1), 0.0, 1.0);
    CHECK(wavefunc::moment(excited, 2) == doctest::Approx(1.5).epsilon(1e-13));

    std::vector<double> mix(11, 0.0);
    mix[0] = mix[1] = 1.0 / std::sqrt(2.0);
    const WaveModel cross(std::move(mix), 0.0, 1.0);
    CHECK(wavefunc::moment(cross, 1) == doctest::Approx(0.7071067811865476).epsilon(1e-13));
}

TEST_CASE("moments match fine-grid integration") {
    oracles::TestRng rng(57);
    for (int rep = 0; rep < 10; ++rep) {
        const int degree = 2 + static_cast<int>(rng.uniform(0.0, 10.49));
        const double loc = rng.uniform(-2.0, 2.0);
        const double scale = rng.uniform(0.5, 3.0);
        const auto m = random_model(rng, degree, loc, scale);
        for (int p = 0; p <= 6; ++p) {
            const double grid = oracles::simpson_grid(
                [&](double z) {
                    const double a = m.amplitude(z);
                    return std::pow(scale * z + loc, p) * a * a;
                },
                -12.0, 12.0, 48001);
            const double q = wavefunc::moment(m, p);
            CHECK(std::abs(q - grid) <= 1e-8 * std::max(1.0, std::abs(grid)));
        }
    }
}

TEST_CASE("entropy of the exact Gaussian") {
    std::vector<double> w(11, 0.0);
    w[0] = 1.0;
    const WaveModel m(std::move(w), 0.0, 1.0);
    CHECK(wavefunc::entropy(m) == doctest::Approx(1.0723649429247001).epsilon(1e-9));

    std::vector<double> w2(11, 0.0);
    w2[0] = 1.0;
    const WaveModel scaled(std::move(w2), 0.0, 2.0);
    CHECK(wavefunc::entropy(scaled) ==
          doctest::Approx(1.0723649429247001 + std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("entropy matches a fine-grid oracle for random models") {
    oracles::TestRng rng(71);
    for (int rep = 0; rep < 5; ++rep) {
        const auto m = random_model(rng, 10, 0.0, 1.0);
        const double grid = oracles::simpson_grid(
            [&](double z) {
                const double f = m.density(z);
                return f > 1e-300 ? -f * std::log(f) : 0.0;
            },
            -12.0, 12.0, 200001);
        CHECK(wavefunc::entropy(m) == doctest::Approx(grid).epsilon(1e-6));
    }
}

TEST_CASE("standardized vs original moments") {
    oracles::TestRng rng(83);
    const auto m = random_model(rng, 8, 1.5, 2.0);
    const double m1s = wavefunc::moment(m, 1, MomentScale::standardized);
    const double m1o = wavefunc::moment(m, 1, MomentScale::original);
    CHECK(m1o == doctest::Approx(2.0 * m1s + 1.5).epsilon(1e-12));
    CHECK_THROWS_AS(wavefunc::moment(m, -1), std::invalid_argument);
}

TEST_CASE("projecting the exact Gaussian recovers e_0") {
    const auto ref = wavefunc::make_reference("gaussian_half");
    const auto result = project_density(
        [&ref](double z) { return ref.standardized_sqrt_density(z); }, 10);
    CHECK(std::abs(result.coefficients[0] - 1.0) < 1e-8);
    for (int k = 1; k <= 10; ++k) {
        CHECK(std::abs(result.coefficients[k]) < 1e-8);
    }
    CHECK(result.partial_mass == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("symmetric densities have vanishing odd coefficients") {
    const auto ref = wavefunc::make_reference("student_t4");
    const auto result = project_density(
        [&ref](double z) { return ref.standardized_sqrt_density(z); }, 10);
    for (int k = 1; k <= 10; k += 2) {
        CHECK(std::abs(result.coefficients[k]) < 1e-6);
    }
}

TEST_CASE("partial mass obeys the Bessel bound and grows with degree") {
    for (const auto& name : wavefunc::reference_names()) {
        CAPTURE(name);
        const auto ref = wavefunc::make_reference(name);
        double previous = 0.0;
        for (int degree : {2, 6, 10, 14}) {
            const auto result = project_density(
                [&ref](double z) { return ref.standardized_sqrt_density(z); }, degree, 1e-9);
            CHECK(result.partial_mass >= 0.0);
            CHECK(result.partial_mass <= 1.0 + 1e-6);
            CHECK(result.partial_mass >= previous - 1e-9);
            previous = result.partial_mass;
        }
    }
}

TEST_CASE("projected Beta(3,5) captures most of the mass at K=10") {
    const auto ref = wavefunc::make_reference("beta_3_5");
    const auto result = project_density(
        [&ref](double z) { return ref.standardized_sqrt_density(z); }, 10);
    CHECK(result.partial_mass > 0.99);
}

TEST_CASE("adaptive Simpson basics") {
    const double s = adaptive_simpson([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(s == doctest::Approx(2.0).epsilon(1e-10));
    CHECK_THROWS_AS(adaptive_simpson([](double) { return 1.0; }, 0.0, 1.0, -1.0),
                    std::invalid_argument);
}

TEST_CASE("adaptive Simpson reports an unreachable tolerance") {
    auto step = [](double x) { return x > 0.1234 ? 1.0 : 0.0; };
    CHECK_THROWS_AS(adaptive_simpson(step, -1.0, 1.0, 1e-18, 50), QuadratureError);
    // a reachable tolerance handles the same discontinuity
    const double v = adaptive_simpson(step, -1.0, 1.0, 1e-10, 50);
    CHECK(v == doctest::Approx(1.0 - 0.1234).epsilon(1e-6));
}

}  // TEST_SUITE
