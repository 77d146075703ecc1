#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wavefunc/model.hpp"

namespace wavefunc {

/// Univariate slice sampler (stepping-out and shrinkage) targeting the
/// standardized density A(z)^2 of a WaveModel.  Draws are returned on the
/// original scale.  Because fitted densities are standardized to variance
/// 1/2, a fixed initial slice width of 4.0 covers the bulk of any model in
/// a handful of steps.
///
/// Deterministic: (seed, model) fully determines the stream.  Uniforms are
/// derived from raw mt19937_64 output (whose sequence the standard pins
/// down), so streams are reproducible across platforms.  One state per
/// thread; the model itself is shared read-only.
class SliceSampler {
  public:
    static constexpr double default_width = 4.0;
    static constexpr int default_max_step_out = 64;

    /// Chain starts at the standardized point z = 0.
    SliceSampler(const WaveModel& model, std::uint64_t seed,
                 double width = default_width, int max_step_out = default_max_step_out);

    /// One slice-sampling transition; returns the new point on the original
    /// scale (scale * z + location).
    double next();

    /// Number of times stepping-out hit the max_step_out cap (diagnostic;
    /// hitting the cap is not an error).
    long step_out_cap_hits() const { return cap_hits_; }

    /// Identifier of the generator backing the stream, recorded in sample
    /// file headers for reproducibility.
    static const char* generator_name() { return "mt19937_64"; }

  private:
    double standardized_density(double z) const;
    double uniform01();  // in (0, 1)

    const WaveModel& model_;
    std::mt19937_64 rng_;
    double current_;
    double width_;
    int max_step_out_;
    long cap_hits_ = 0;
};

/// Draws n samples after discarding burn_in transitions, keeping every
/// thinning-th draw.  n = 0 yields an empty vector.
std::vector<double> sample_n(const WaveModel& model, std::size_t n, std::uint64_t seed,
                             int burn_in = 100, int thinning = 1);

}  // namespace wavefunc
