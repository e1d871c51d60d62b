#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

#include "isst/rng.hpp"

namespace isst {

/// Parameters of a triangular distribution in minutes.
struct TriangularParams {
    double min_minutes = 0.0;
    double mode_minutes = 0.0;
    double max_minutes = 0.0;

    void validate(const std::string& what) const {
        if (!(min_minutes >= 0.0) || !std::isfinite(min_minutes) ||
            !std::isfinite(mode_minutes) || !std::isfinite(max_minutes))
            throw std::invalid_argument(what + ": triangular parameters must be finite and min >= 0");
        if (!(min_minutes <= mode_minutes && mode_minutes <= max_minutes))
            throw std::invalid_argument(what + ": triangular requires min <= mode <= max");
    }

    double mean() const { return (min_minutes + mode_minutes + max_minutes) / 3.0; }

    double variance() const {
        const double a = min_minutes, m = mode_minutes, b = max_minutes;
        return (a * a + m * m + b * b - a * m - a * b - m * b) / 18.0;
    }
};

/// Inverse CDF of the triangular distribution at u in [0, 1).
inline double triangular_icdf(const TriangularParams& p, double u) {
    const double a = p.min_minutes, m = p.mode_minutes, b = p.max_minutes;
    if (b == a) return a;  // point mass
    const double cut = (m - a) / (b - a);
    if (u < cut) return a + std::sqrt(u * (b - a) * (m - a));
    return b - std::sqrt((1.0 - u) * (b - a) * (b - m));
}

inline double sample_triangular(const TriangularParams& p, RngStream& s) {
    return triangular_icdf(p, s.uniform01());
}

/// Inverse CDF of the exponential distribution, -ln(1-u)/rate.
inline double exponential_icdf(double rate_per_minute, double u) {
    if (!(rate_per_minute > 0.0))
        throw std::invalid_argument("exponential rate must be positive");
    return -std::log1p(-u) / rate_per_minute;
}

inline double sample_exponential(double rate_per_minute, RngStream& s) {
    return exponential_icdf(rate_per_minute, s.uniform01());
}

/// Exponential service is only used by the analytic queueing reductions; the
/// calibrated scenarios use triangular service everywhere.
struct ExponentialService {
    double mean_minutes = 1.0;
};

using ServiceDistribution = std::variant<TriangularParams, ExponentialService>;

inline double service_mean(const ServiceDistribution& d) {
    if (const auto* tri = std::get_if<TriangularParams>(&d)) return tri->mean();
    return std::get<ExponentialService>(d).mean_minutes;
}

inline double sample_service(const ServiceDistribution& d, RngStream& s) {
    if (const auto* tri = std::get_if<TriangularParams>(&d)) return sample_triangular(*tri, s);
    const auto& e = std::get<ExponentialService>(d);
    return sample_exponential(1.0 / e.mean_minutes, s);
}

inline void validate_service(const ServiceDistribution& d, const std::string& what) {
    if (const auto* tri = std::get_if<TriangularParams>(&d)) {
        tri->validate(what);
    } else if (!(std::get<ExponentialService>(d).mean_minutes > 0.0)) {
        throw std::invalid_argument(what + ": exponential mean must be positive");
    }
}

}  // namespace isst
