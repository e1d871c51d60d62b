#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isst/calendar.hpp"
#include "isst/distributions.hpp"
#include "isst/rng.hpp"

namespace isst {

/// Piecewise-constant hourly arrival rates (expected arrivals per hour).
/// Scenario files always carry exactly one bucket per operating hour of the
/// 8-hour day; the analytic reduction tests build longer schedules in code.
/// The rate is zero outside the covered buckets.
struct ArrivalSchedule {
    std::vector<double> hourly_rates;

    void validate(const std::string& what, std::size_t required_buckets = 0) const {
        if (required_buckets != 0 && hourly_rates.size() != required_buckets)
            throw std::invalid_argument(what + ": expected " + std::to_string(required_buckets) +
                                        " hourly rates, got " + std::to_string(hourly_rates.size()));
        for (double r : hourly_rates)
            if (!(r >= 0.0) || !std::isfinite(r))
                throw std::invalid_argument(what + ": hourly rates must be finite and >= 0");
    }

    double rate_at(SimTime t) const {
        if (t < 0.0) return 0.0;
        const auto hour = static_cast<std::size_t>(t / minutes_per_hour);
        if (hour >= hourly_rates.size()) return 0.0;
        return hourly_rates[hour];
    }

    double max_rate() const {
        double m = 0.0;
        for (double r : hourly_rates) m = std::max(m, r);
        return m;
    }

    double total_expected() const {
        double s = 0.0;
        for (double r : hourly_rates) s += r;
        return s;
    }
};

/// Next event time of the non-homogeneous Poisson process with the given
/// hourly rate steps, by thinning against the dominating constant rate
/// lambda_max: propose exponential gaps at lambda_max, accept a candidate at
/// time t with probability rate(t)/lambda_max. Exact for piecewise-constant
/// rates. Returns nothing if no arrival lands before `horizon`.
inline std::optional<SimTime> next_arrival(const ArrivalSchedule& sched, SimTime now,
                                           SimTime horizon, RngStream& s) {
    const double max_per_hour = sched.max_rate();
    if (max_per_hour <= 0.0) return std::nullopt;
    const double lambda_max = max_per_hour / minutes_per_hour;  // per minute
    SimTime t = now;
    for (;;) {
        t += exponential_icdf(lambda_max, s.uniform01());
        if (t >= horizon) return std::nullopt;
        const double accept = sched.rate_at(t) / max_per_hour;
        if (s.uniform01() < accept) return t;
    }
}

}  // namespace isst
