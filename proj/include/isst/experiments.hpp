#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "isst/model.hpp"
#include "isst/scenario.hpp"

namespace isst {

/// The five behaviour experiments: E1 is the reactive baseline, E2-E4 switch
/// on one proactive rule each (stop-numbers, speedup, skip), E5 all three.
enum class ExperimentId : std::uint8_t { E1 = 1, E2 = 2, E3 = 3, E4 = 4, E5 = 5 };

inline constexpr std::array<ExperimentId, 5> all_experiments = {
    ExperimentId::E1, ExperimentId::E2, ExperimentId::E3, ExperimentId::E4, ExperimentId::E5};

std::string experiment_label(ExperimentId id);
ExperimentId parse_experiment(const std::string& s);

/// Applies the experiment's rule toggles onto a base rule set; parameters are
/// left as configured, only the three enable flags change.
BehaviorRuleSet apply_experiment_toggles(BehaviorRuleSet base, ExperimentId id);

/// Master seed actually used for a run: with common random numbers every
/// experiment/mode shares the caller's seed (paired comparisons); without,
/// each (experiment, mode) pair gets its own derived seed.
std::uint64_t effective_master_seed(std::uint64_t master_seed, ExperimentId id, SimMode mode,
                                    bool crn);

struct ExperimentRun {
    ExperimentId experiment = ExperimentId::E1;
    SimMode mode = SimMode::des;
    int replications = 0;
    std::uint64_t master_seed = 0;
    bool crn = false;
    std::vector<ReplicationMetrics> results;  // ordered by replication index
};

/// Runs `replications` independent days of the experiment; replication i uses
/// streams derived from (effective master seed, i).
ExperimentRun run_experiment(const ScenarioConfig& cfg, ExperimentId id, SimMode mode,
                             int replications, std::uint64_t master_seed, bool crn = false);

/// Mean / sample std / 95% CI of one metric across replications.
struct MetricSummary {
    int n = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double ci_half_width = 0.0;
    bool low_n = false;  // n < 2: no spread or CI available
};

MetricSummary summarize(const std::vector<double>& samples);

struct ExperimentSummary {
    MetricSummary mean_wait;
    MetricSummary not_served;
    MetricSummary served;
    MetricSummary turned_away;
    MetricSummary leftover;
};

ExperimentSummary aggregate(const ExperimentRun& run);

/// Per-replication samples of the two headline measures.
std::vector<double> waiting_time_samples(const ExperimentRun& run);
std::vector<double> not_served_samples(const ExperimentRun& run);

/// Per-replication CSV block (header + one row per replication):
/// experiment,mode,replication,mean_wait_minutes,n_served,n_not_served,turned_away,leftover
std::string replication_csv_header();
void append_replication_csv(std::string& out, const ExperimentRun& run);

}  // namespace isst
