#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "isst/arrivals.hpp"
#include "isst/behavior.hpp"
#include "isst/distributions.hpp"

namespace isst {

enum class SimMode : std::uint8_t { des = 0, hybrid = 1 };

inline std::string_view mode_label(SimMode m) {
    return m == SimMode::des ? "des" : "hybrid";
}

/// Raised on any scenario parse or validation failure; the message names the
/// offending key.
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full description of one simulated day: clock windows, staffing, arrival
/// schedules, service distributions, and behaviour rules.
struct ScenarioConfig {
    SimMode mode = SimMode::des;

    SimTime day_open = 0.0;
    SimTime day_close = 480.0;      // 9 am - 5 pm
    SimTime walkin_open = 240.0;    // 1 pm
    SimTime walkin_close = 420.0;   // 4 pm

    int reception_capacity = 1;
    int advisory_capacity = 2;
    bool split_phone_queue = false;  // sensitivity option: own phone queue, desk priority

    ServiceDistribution reception_service = TriangularParams{0.5, 1.5, 4.0};
    ServiceDistribution advisory_service = TriangularParams{4.0, 9.0, 18.0};

    // One schedule per arrival process, hourly buckets from day open.
    ArrivalSchedule arrivals_general{{0, 0, 0, 0, 0, 0, 0, 0}};
    ArrivalSchedule arrivals_advisory{{0, 0, 0, 0, 0, 0, 0, 0}};
    ArrivalSchedule arrivals_phone{{0, 0, 0, 0, 0, 0, 0, 0}};

    BehaviorRuleSet rules;

    const ArrivalSchedule& schedule_for(EntityKind k) const {
        switch (k) {
            case EntityKind::StudentGeneral: return arrivals_general;
            case EntityKind::StudentAdvisory: return arrivals_advisory;
            case EntityKind::PhoneCall: return arrivals_phone;
        }
        throw std::logic_error("unknown entity kind");
    }

    /// Validates every field; throws ScenarioError naming the bad key.
    void validate() const;
};

/// Parses the key = value scenario format (see README for the schema).
/// Unknown keys are rejected with the exact key path. Scenario files must
/// give arrival schedules exactly one rate per operating hour.
ScenarioConfig parse_scenario(std::istream& in, const std::string& source_name = "<scenario>");

ScenarioConfig load_scenario_file(const std::string& path);

/// Applies dotted-key overrides like "rules.speedup_factor=0.75" on top of a
/// parsed scenario. Each entry must be key=value with a known key.
void apply_overrides(ScenarioConfig& cfg, const std::vector<std::string>& overrides);

/// Canonical text form of a config (parseable back; used for determinism
/// checks and run manifests).
std::string scenario_to_text(const ScenarioConfig& cfg);

}  // namespace isst
