#include "isst/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "isst/stats.hpp"

namespace isst {

std::string experiment_label(ExperimentId id) {
    return "E" + std::to_string(static_cast<int>(id));
}

ExperimentId parse_experiment(const std::string& s) {
    for (ExperimentId id : all_experiments)
        if (s == experiment_label(id)) return id;
    throw std::invalid_argument("unknown experiment '" + s + "' (expected E1..E5)");
}

BehaviorRuleSet apply_experiment_toggles(BehaviorRuleSet base, ExperimentId id) {
    base.stop_numbers_enabled = (id == ExperimentId::E2 || id == ExperimentId::E5);
    base.speedup_enabled = (id == ExperimentId::E3 || id == ExperimentId::E5);
    base.skip_enabled = (id == ExperimentId::E4 || id == ExperimentId::E5);
    return base;
}

std::uint64_t effective_master_seed(std::uint64_t master_seed, ExperimentId id, SimMode mode,
                                    bool crn) {
    if (crn) return master_seed;
    const std::uint64_t salt =
        static_cast<std::uint64_t>(id) * 2u + static_cast<std::uint64_t>(mode);
    return mix_seed(master_seed, salt);
}

ExperimentRun run_experiment(const ScenarioConfig& cfg, ExperimentId id, SimMode mode,
                             int replications, std::uint64_t master_seed, bool crn) {
    if (replications < 2)
        throw std::invalid_argument("run_experiment: need at least 2 replications");
    ScenarioConfig run_cfg = cfg;
    run_cfg.mode = mode;
    run_cfg.rules = apply_experiment_toggles(cfg.rules, id);
    run_cfg.validate();

    ExperimentRun run;
    run.experiment = id;
    run.mode = mode;
    run.replications = replications;
    run.master_seed = master_seed;
    run.crn = crn;
    run.results.reserve(static_cast<std::size_t>(replications));
    const std::uint64_t seed = effective_master_seed(master_seed, id, mode, crn);
    for (int i = 0; i < replications; ++i)
        run.results.push_back(run_day(run_cfg, seed, static_cast<std::uint64_t>(i)));
    return run;
}

MetricSummary summarize(const std::vector<double>& samples) {
    if (samples.empty()) throw std::invalid_argument("summarize: no samples");
    MetricSummary s;
    s.n = static_cast<int>(samples.size());
    s.mean = sample_mean(samples);
    if (s.n < 2) {
        s.low_n = true;
        return s;
    }
    s.stddev = std::sqrt(sample_variance(samples));
    const double q = student_t_two_sided_quantile(0.95, static_cast<double>(s.n - 1));
    s.ci_half_width = q * s.stddev / std::sqrt(static_cast<double>(s.n));
    return s;
}

namespace {

std::vector<double> metric_samples(const ExperimentRun& run, double (*pick)(const ReplicationMetrics&)) {
    std::vector<double> out;
    out.reserve(run.results.size());
    for (const auto& m : run.results) out.push_back(pick(m));
    return out;
}

}  // namespace

std::vector<double> waiting_time_samples(const ExperimentRun& run) {
    return metric_samples(run, [](const ReplicationMetrics& m) { return m.mean_wait_minutes; });
}

std::vector<double> not_served_samples(const ExperimentRun& run) {
    return metric_samples(run,
                          [](const ReplicationMetrics& m) { return double(m.not_served); });
}

ExperimentSummary aggregate(const ExperimentRun& run) {
    if (run.results.empty()) throw std::invalid_argument("aggregate: empty experiment run");
    ExperimentSummary s;
    s.mean_wait = summarize(waiting_time_samples(run));
    s.not_served = summarize(not_served_samples(run));
    s.served = summarize(metric_samples(run, [](const ReplicationMetrics& m) { return double(m.served); }));
    s.turned_away = summarize(metric_samples(run, [](const ReplicationMetrics& m) { return double(m.turned_away); }));
    s.leftover = summarize(metric_samples(run, [](const ReplicationMetrics& m) {
        return double(m.reception_leftover + m.advisory_leftover);
    }));
    return s;
}

std::string replication_csv_header() {
    return "experiment,mode,replication,mean_wait_minutes,n_served,n_not_served,turned_away,leftover\n";
}

void append_replication_csv(std::string& out, const ExperimentRun& run) {
    char buf[160];
    for (std::size_t i = 0; i < run.results.size(); ++i) {
        const ReplicationMetrics& m = run.results[i];
        std::snprintf(buf, sizeof buf, "%s,%s,%zu,%.17g,%d,%d,%d,%d\n",
                      experiment_label(run.experiment).c_str(),
                      std::string(mode_label(run.mode)).c_str(), i, m.mean_wait_minutes,
                      m.served, m.not_served, m.turned_away,
                      m.reception_leftover + m.advisory_leftover);
        out += buf;
    }
}

}  // namespace isst
