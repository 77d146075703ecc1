#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "wavefunc/sphere.hpp"

using wavefunc::project;
using wavefunc::unproject;

namespace {

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

std::vector<double> random_gamma(oracles::TestRng& rng, int K, double radius) {
    std::vector<double> g(K);
    double n2 = 0.0;
    for (auto& x : g) {
        x = rng.normal();
        n2 += x * x;
    }
    for (auto& x : g) x *= radius / std::sqrt(n2);
    return g;
}

}  // namespace

TEST_SUITE("sphere") {

TEST_CASE("antipode of the pole maps to the origin") {
    std::vector<double> w(11, 0.0);
    w[0] = -1.0;
    const auto gamma = project(w);
    CHECK(gamma.size() == 10);
    for (double g : gamma) CHECK(g == 0.0);
}

TEST_CASE("equator point") {
    std::vector<double> w(11, 0.0);
    w[1] = 1.0;
    const auto gamma = project(w);
    CHECK(gamma[0] == doctest::Approx(1.0));
    for (std::size_t k = 1; k < gamma.size(); ++k) CHECK(gamma[k] == 0.0);

    std::vector<double> g2(10, 0.0);
    g2[0] = 1.0;
    const auto w2 = unproject(g2);
    CHECK(w2[0] == doctest::Approx(0.0));
    CHECK(w2[1] == doctest::Approx(1.0));
}

TEST_CASE("the pole has no finite image") {
    std::vector<double> w(5, 0.0);
    w[0] = 1.0;
    CHECK_THROWS_AS(project(w), std::domain_error);
    w[0] = 1.0 - 1e-13;  // within pole tolerance
    w[1] = std::sqrt(1.0 - w[0] * w[0]);
    CHECK_THROWS_AS(project(w), std::domain_error);
}

TEST_CASE("gamma = 0 maps to (-1, 0, ..., 0)") {
    const auto w = unproject(std::vector<double>(7, 0.0));
    CHECK(w[0] == -1.0);
    for (std::size_t k = 1; k < w.size(); ++k) CHECK(w[k] == 0.0);
}

TEST_CASE("unproject always lands on the sphere") {
    oracles::TestRng rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<double> g(10);
        for (auto& x : g) x = rng.uniform(-5.0, 5.0);
        CHECK(std::abs(std::sqrt(norm2(unproject(g))) - 1.0) < 1e-13);
    }
}

TEST_CASE("large gamma approaches the pole smoothly") {
    oracles::TestRng rng(5);
    const auto g = random_gamma(rng, 8, 1e8);
    const auto w = unproject(g);
    CHECK(std::abs(std::sqrt(norm2(w)) - 1.0) < 1e-13);
    CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("round trip gamma -> w -> gamma") {
    oracles::TestRng rng(23);
    for (int rep = 0; rep < 500; ++rep) {
        const double radius = std::pow(10.0, rng.uniform(-3.0, 3.0));
        const auto g = random_gamma(rng, 10, radius);
        const auto back = project(unproject(g));
        for (std::size_t k = 0; k < g.size(); ++k) {
            CHECK(std::abs(back[k] - g[k]) <= 1e-10 * std::max(1.0, std::abs(g[k])));
        }
    }
}

TEST_CASE("round trip w -> gamma -> w") {
    oracles::TestRng rng(29);
    for (int rep = 0; rep < 500; ++rep) {
        std::vector<double> w(11);
        double n2 = 0.0;
        do {
            n2 = 0.0;
            for (auto& x : w) {
                x = rng.normal();
                n2 += x * x;
            }
        } while (n2 == 0.0);
        for (auto& x : w) x /= std::sqrt(n2);
        if (w[0] >= 1.0 - 1e-6) continue;
        const auto back = unproject(project(w));
        for (std::size_t k = 0; k < w.size(); ++k) {
            CHECK(std::abs(back[k] - w[k]) <= 1e-10);
        }
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(project({}), std::invalid_argument);
    CHECK_THROWS_AS(project({0.5, 0.5}), std::invalid_argument);  // not unit norm
    CHECK_THROWS_AS(unproject({std::nan("")}), std::invalid_argument);
}

}  // TEST_SUITE
