#include "wavefunc/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace wavefunc {

SliceSampler::SliceSampler(const WaveModel& model, std::uint64_t seed, double width,
                           int max_step_out)
    : model_(model), rng_(seed), current_(0.0), width_(width), max_step_out_(max_step_out) {
    if (!(width > 0.0)) {
        throw std::invalid_argument("SliceSampler: width must be positive");
    }
    if (max_step_out < 0) {
        throw std::invalid_argument("SliceSampler: max_step_out must be >= 0");
    }
}

double SliceSampler::standardized_density(double z) const {
    const double a = model_.amplitude(z);
    return a * a;
}

double SliceSampler::uniform01() {
    // 53 random bits, offset by half a grid step: lands strictly inside (0, 1).
    return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1p-53;
}

double SliceSampler::next() {
    const double f_current = standardized_density(current_);

    // Vertical draw: slice level in (0, f(current)).
    const double level = uniform01() * f_current;

    // Stepping out: place an interval of width_ randomly around the current
    // point, then extend each end until it falls below the slice.
    double left = current_ - width_ * uniform01();
    double right = left + width_;
    int steps = max_step_out_;
    while (steps > 0 && standardized_density(left) > level) {
        left -= width_;
        --steps;
    }
    if (steps == 0) ++cap_hits_;
    steps = max_step_out_;
    while (steps > 0 && standardized_density(right) > level) {
        right += width_;
        --steps;
    }
    if (steps == 0) ++cap_hits_;

    // Shrinkage: sample uniformly in [left, right], shrinking toward the
    // current point on rejection.  Terminates because the interval always
    // contains a neighborhood of current_ where f >= level.
    for (int guard = 0; guard < 10000; ++guard) {
        const double candidate = left + uniform01() * (right - left);
        if (standardized_density(candidate) > level) {
            current_ = candidate;
            return model_.scale() * current_ + model_.location();
        }
        if (candidate < current_) {
            left = candidate;
        } else {
            right = candidate;
        }
    }
    throw std::runtime_error("SliceSampler: shrinkage failed to accept (invalid model?)");
}

std::vector<double> sample_n(const WaveModel& model, std::size_t n, std::uint64_t seed,
                             int burn_in, int thinning) {
    if (burn_in < 0 || thinning < 1) {
        throw std::invalid_argument("sample_n: burn_in must be >= 0 and thinning >= 1");
    }
    SliceSampler sampler(model, seed);
    for (int i = 0; i < burn_in; ++i) sampler.next();
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double x = sampler.next();
        for (int t = 1; t < thinning; ++t) x = sampler.next();
        out.push_back(x);
    }
    return out;
}

}  // namespace wavefunc
