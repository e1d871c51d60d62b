#pragma once

#include <map>
#include <string>
#include <vector>

#include "isst/experiments.hpp"
#include "isst/stats.hpp"

namespace isst {

/// Per-experiment, per-mode means of the two headline measures.
struct SummaryTableRow {
    ExperimentId experiment;
    SimMode mode;
    ExperimentSummary summary;
};

/// One baseline comparison: E1 vs `experiment` on one measure in one mode.
struct ComparisonRow {
    ExperimentId experiment;
    std::string measure;  // "waiting_time" | "customers_not_served"
    SimMode mode;
    double baseline_mean = 0.0;
    double experiment_mean = 0.0;
    TTestResult test;
};

/// The two report tables: per-experiment summaries and the E1-vs-Ex
/// hypothesis tests.
struct ReportTables {
    double alpha = 0.05;
    std::vector<SummaryTableRow> summary;      // table 2 analog
    std::vector<ComparisonRow> comparisons;    // table 3 analog
};

/// Builds both tables from a set of experiment runs. Each mode present must
/// include its E1 baseline; comparisons are produced for every other
/// experiment of that mode, both measures.
ReportTables render_tables(const std::vector<ExperimentRun>& runs, double alpha = 0.05,
                           bool pooled = false);

std::string tables_to_markdown(const ReportTables& t);
std::string summary_table_csv(const ReportTables& t);
std::string comparison_table_csv(const ReportTables& t);
std::string tables_to_json(const ReportTables& t);  // stable schema, golden-tested

/// Full single-replication metrics as JSON (round-trips bit-exactly).
std::string metrics_to_json(const ReplicationMetrics& m);
ReplicationMetrics metrics_from_json(const std::string& text);

/// Per-replication sample columns loaded back from a replications CSV
/// (the format written by append_replication_csv), keyed by measure name,
/// plus the (experiment, mode) labels seen, for the compare command.
struct SampleFile {
    std::vector<std::string> columns;
    std::map<std::string, std::vector<double>> samples;  // per numeric measure
};

SampleFile load_replication_csv(const std::string& path);

/// Rebuilds experiment runs (metrics restricted to the CSV columns) from a
/// combined replications CSV, for re-rendering tables.
std::vector<ExperimentRun> runs_from_replication_csv(const std::string& path);

}  // namespace isst
