#pragma once

#include <string>
#include <vector>

namespace wavefunc {

/// A fitted wave-function density.
///
/// The density on the original data scale is
///   f(x) = A(z)^2 / scale,   z = (x - location)/scale,
/// where A(z) = sum_k w_k h_k(z) is the amplitude in the orthonormal Hermite
/// basis.  The coefficients w lie on the unit sphere, so the standardized
/// density A(z)^2 integrates to one, and the Jacobian 1/scale keeps the
/// original-scale density normalized.
///
/// Immutable after construction; safe to share across threads.
class WaveModel {
  public:
    /// Validates: coefficients non-empty and unit-norm within 1e-10,
    /// scale > 0, everything finite.  Throws std::invalid_argument.
    WaveModel(std::vector<double> coefficients, double location, double scale);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coefficients() const { return coeffs_; }
    double location() const { return location_; }
    double scale() const { return scale_; }

    /// A(z) = sum_k w_k h_k(z) on the standardized scale.
    double amplitude(double z) const;

    /// f(x) = A((x - location)/scale)^2 / scale on the original scale.
    double density(double x) const;

    /// log f(x), floored at log(1e-300) so amplitude roots stay finite.
    double log_density(double x) const;

    /// Lowest density value log_density will report.  Keeps likelihood
    /// line searches defined at amplitude roots; far below any achievable
    /// density contribution.
    static constexpr double density_floor = 1e-300;

  private:
    std::vector<double> coeffs_;
    double location_;
    double scale_;
};

/// Model document: a versioned JSON object
///   {"format_version": 1, "degree": K, "location": ..., "scale": ...,
///    "coefficients": [w_0, ..., w_K]}
/// with every number printed to 17 significant digits, so a write/read
/// round trip reproduces the doubles bit-identically.
std::string serialize(const WaveModel& m);

/// Parses a model document.  Rejects malformed documents, unknown format
/// versions, degree/coefficient-count mismatches, non-positive scales, and
/// coefficient norms off by more than 1e-6 (smaller deviations are
/// renormalized).  Throws DataError.
WaveModel deserialize(const std::string& document);

}  // namespace wavefunc
