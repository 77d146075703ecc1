#include "wavefunc/model.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "wavefunc/errors.hpp"
#include "wavefunc/hermite.hpp"

namespace wavefunc {

namespace {

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

// 17 significant digits: enough to reproduce any double exactly on parse.
std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

WaveModel::WaveModel(std::vector<double> coefficients, double location, double scale)
    : coeffs_(std::move(coefficients)), location_(location), scale_(scale) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("WaveModel: coefficient vector is empty");
    }
    for (double w : coeffs_) {
        if (!std::isfinite(w)) {
            throw std::invalid_argument("WaveModel: non-finite coefficient");
        }
    }
    if (!std::isfinite(location_)) {
        throw std::invalid_argument("WaveModel: non-finite location");
    }
    if (!(scale_ > 0.0) || !std::isfinite(scale_)) {
        throw std::invalid_argument("WaveModel: scale must be positive and finite");
    }
    if (std::abs(norm2(coeffs_) - 1.0) > 1e-10) {
        throw std::invalid_argument("WaveModel: coefficients are not unit-norm");
    }
}

double WaveModel::amplitude(double z) const {
    const BasisValues bv = eval_basis(z, degree());
    double a = 0.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        a += coeffs_[k] * bv.values[k];
    }
    return a;
}

double WaveModel::density(double x) const {
    const double a = amplitude((x - location_) / scale_);
    return a * a / scale_;
}

double WaveModel::log_density(double x) const {
    return std::log(std::max(density(x), density_floor));
}

std::string serialize(const WaveModel& m) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"format_version\": 1,\n";
    out << "  \"degree\": " << m.degree() << ",\n";
    out << "  \"location\": " << format_double(m.location()) << ",\n";
    out << "  \"scale\": " << format_double(m.scale()) << ",\n";
    out << "  \"coefficients\": [";
    const auto& w = m.coefficients();
    for (std::size_t k = 0; k < w.size(); ++k) {
        out << (k ? ", " : "") << format_double(w[k]);
    }
    out << "]\n}\n";
    return out.str();
}

WaveModel deserialize(const std::string& document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("model document: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw DataError("model document: top level is not an object");
    }
    for (const char* field : {"format_version", "degree", "location", "scale", "coefficients"}) {
        if (!doc.contains(field)) {
            throw DataError(std::string("model document: missing field \"") + field + "\"");
        }
    }
    if (!doc["format_version"].is_number_integer() || doc["format_version"].get<int>() != 1) {
        throw DataError("model document: unknown format_version");
    }
    if (!doc["degree"].is_number_integer() || !doc["coefficients"].is_array() ||
        !doc["location"].is_number() || !doc["scale"].is_number()) {
        throw DataError("model document: field has wrong type");
    }
    const int degree = doc["degree"].get<int>();
    std::vector<double> coeffs;
    for (const auto& c : doc["coefficients"]) {
        if (!c.is_number()) {
            throw DataError("model document: non-numeric coefficient");
        }
        coeffs.push_back(c.get<double>());
    }
    if (degree < 0 || coeffs.size() != static_cast<std::size_t>(degree) + 1) {
        throw DataError("model document: coefficient count does not match degree");
    }
    const double n2 = norm2(coeffs);
    const double norm = std::sqrt(n2);
    if (std::abs(norm - 1.0) > 1e-6) {
        throw DataError("model document: coefficient norm violates unit constraint");
    }
    if (std::abs(n2 - 1.0) > 1e-10) {
        // Tolerate decimal round-trip noise without disturbing documents
        // that are already unit-norm bit-for-bit.
        for (double& w : coeffs) w /= norm;
    }

    const double location = doc["location"].get<double>();
    const double scale = doc["scale"].get<double>();
    try {
        return WaveModel(std::move(coeffs), location, scale);
    } catch (const std::invalid_argument& e) {
        throw DataError(std::string("model document: ") + e.what());
    }
}

}  // namespace wavefunc
