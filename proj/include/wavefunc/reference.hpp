#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wavefunc {

/// An analytic test distribution with exact density, CDF, moments, and a
/// seeded exact sampler.  Serves as an oracle for fitting, projection, and
/// sampling tests.
struct ReferenceDensity {
    std::string name;
    std::function<double(double)> density;
    std::function<double(double)> cdf;
    double mean = 0.0;
    double variance = 0.0;

    double sqrt_density(double x) const { return std::sqrt(density(x)); }

    /// Standardization constants mapping this density to mean 0, variance
    /// 1/2: z = (x - location)/scale with scale = sqrt(2 * variance).
    double standardized_location() const { return mean; }
    double standardized_scale() const { return std::sqrt(2.0 * variance); }

    /// Density of the standardized variable z = (x - mean)/scale.
    double standardized_density(double z) const {
        const double s = standardized_scale();
        return s * density(s * z + mean);
    }
    double standardized_sqrt_density(double z) const {
        return std::sqrt(standardized_density(z));
    }

    /// n exact i.i.d. draws, deterministic in the seed.
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

  private:
    friend ReferenceDensity make_reference(const std::string&);
    std::function<double(std::function<double()>&)> draw_;  // one draw from uniforms
};

/// Recognized names: gaussian_half (N(0, 1/2)), student_t4, uniform01,
/// bimodal_mixture (0.5 N(-2, 0.25) + 0.5 N(2, 0.25)), beta_3_5.
/// Throws std::invalid_argument for anything else.
ReferenceDensity make_reference(const std::string& name);

/// All recognized reference names, for CLI help and error messages.
const std::vector<std::string>& reference_names();

}  // namespace wavefunc
