// isstsim: service-office simulator CLI.
//
// Subcommands: run (one day), experiment (one experiment, many replications),
// suite (all experiments in both modes plus report tables), compare (t-tests
// between two results files), render (rebuild tables from a results file).
// Exit codes: 0 success, 2 input error, 3 I/O error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isst/experiments.hpp"
#include "isst/model.hpp"
#include "isst/report.hpp"
#include "isst/scenario.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input_error = 2;
constexpr int exit_io_error = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string default_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;  // flags beat the environment
    if (const char* env = std::getenv("ISSTSIM_OUT_DIR"); env && *env) return env;
    return ".";
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw IoError("short write to '" + path.string() + "'");
}

isst::ScenarioConfig load_with_overrides(const std::string& path,
                                         const std::vector<std::string>& overrides) {
    isst::ScenarioConfig cfg = isst::load_scenario_file(path);
    isst::apply_overrides(cfg, overrides);
    return cfg;
}

isst::SimMode parse_mode(const std::string& s) {
    if (s == "des") return isst::SimMode::des;
    if (s == "hybrid") return isst::SimMode::hybrid;
    throw isst::ScenarioError("mode: expected des|hybrid, got '" + s + "'");
}

int cmd_run(const std::string& scenario, const std::string& mode_flag, std::uint64_t seed,
            std::uint64_t replication, bool trace, const std::string& out_flag,
            const std::vector<std::string>& overrides) {
    isst::ScenarioConfig cfg = load_with_overrides(scenario, overrides);
    if (!mode_flag.empty()) cfg.mode = parse_mode(mode_flag);
    const fs::path out_dir = default_out_dir(out_flag);
    ensure_dir(out_dir);

    std::string trace_log;
    isst::RunOptions opts;
    if (trace)
        opts.trace = [&trace_log](std::string_view line) {
            trace_log.append(line);
            trace_log.push_back('\n');
        };
    const isst::ReplicationMetrics m = isst::run_day(cfg, seed, replication, opts);
    write_file(out_dir / "metrics.json", isst::metrics_to_json(m));
    if (trace) write_file(out_dir / "trace.log", trace_log);
    std::cout << "wrote " << (out_dir / "metrics.json").string() << "\n";
    return exit_ok;
}

int cmd_experiment(const std::string& scenario, const std::string& exp_flag,
                   const std::string& mode_flag, int replications, std::uint64_t seed, bool crn,
                   const std::string& out_flag, const std::vector<std::string>& overrides) {
    isst::ScenarioConfig cfg = load_with_overrides(scenario, overrides);
    const isst::ExperimentId exp = isst::parse_experiment(exp_flag);
    const isst::SimMode mode = mode_flag.empty() ? cfg.mode : parse_mode(mode_flag);
    const fs::path out_dir = default_out_dir(out_flag);
    ensure_dir(out_dir);

    const isst::ExperimentRun run =
        isst::run_experiment(cfg, exp, mode, replications, seed, crn);
    std::string csv = isst::replication_csv_header();
    isst::append_replication_csv(csv, run);
    write_file(out_dir / "replications.csv", csv);

    const isst::ExperimentSummary s = isst::aggregate(run);
    std::string summary_json = "{\n";
    auto metric = [](const char* name, const isst::MetricSummary& ms, bool last = false) {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "  \"%s\": {\"n\": %d, \"mean\": %.17g, \"stddev\": %.17g, "
                      "\"ci_half_width\": %.17g, \"low_n\": %s}%s\n",
                      name, ms.n, ms.mean, ms.stddev, ms.ci_half_width,
                      ms.low_n ? "true" : "false", last ? "" : ",");
        return std::string(buf);
    };
    summary_json += metric("waiting_time", s.mean_wait);
    summary_json += metric("customers_not_served", s.not_served);
    summary_json += metric("customers_served", s.served);
    summary_json += metric("turned_away", s.turned_away);
    summary_json += metric("leftover", s.leftover, true);
    summary_json += "}\n";
    write_file(out_dir / "aggregate.json", summary_json);
    std::cout << "wrote " << (out_dir / "replications.csv").string() << "\n";
    return exit_ok;
}

int cmd_suite(const std::string& scenario, int replications, std::uint64_t seed, bool crn,
              double alpha, bool pooled, const std::string& out_flag,
              const std::vector<std::string>& overrides) {
    const isst::ScenarioConfig cfg = load_with_overrides(scenario, overrides);
    const fs::path out_dir = default_out_dir(out_flag);
    ensure_dir(out_dir);

    std::vector<isst::ExperimentRun> runs;
    std::string csv = isst::replication_csv_header();
    for (isst::SimMode mode : {isst::SimMode::des, isst::SimMode::hybrid}) {
        for (isst::ExperimentId exp : isst::all_experiments) {
            runs.push_back(isst::run_experiment(cfg, exp, mode, replications, seed, crn));
            isst::append_replication_csv(csv, runs.back());
        }
    }
    write_file(out_dir / "replications.csv", csv);

    const isst::ReportTables tables = isst::render_tables(runs, alpha, pooled);
    write_file(out_dir / "tables.md", isst::tables_to_markdown(tables));
    write_file(out_dir / "summary_table.csv", isst::summary_table_csv(tables));
    write_file(out_dir / "comparison_table.csv", isst::comparison_table_csv(tables));
    write_file(out_dir / "tables.json", isst::tables_to_json(tables));
    std::cout << isst::tables_to_markdown(tables);
    return exit_ok;
}

int cmd_compare(const std::string& file_a, const std::string& file_b, double alpha, bool pooled,
                const std::string& format) {
    isst::SampleFile a, b;
    try {
        a = isst::load_replication_csv(file_a);
        b = isst::load_replication_csv(file_b);
    } catch (const std::exception& e) {
        throw isst::ScenarioError(e.what());
    }
    if (a.columns != b.columns)
        throw isst::ScenarioError("results files have different column layouts");

    struct Row {
        std::string measure;
        double mean_a, mean_b;
        isst::TTestResult test;
    };
    std::vector<Row> rows;
    for (const auto& [measure, sa] : a.samples) {
        const auto& sb = b.samples.at(measure);
        rows.push_back({measure, isst::sample_mean(sa), isst::sample_mean(sb),
                        isst::welch_t_test(sa, sb, alpha, pooled)});
    }

    char buf[256];
    if (format == "csv") {
        std::cout << "measure,mean_a,mean_b,diff,t,df,p,reject\n";
        for (const Row& r : rows) {
            std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s\n",
                          r.measure.c_str(), r.mean_a, r.mean_b, r.mean_a - r.mean_b, r.test.t,
                          r.test.df, r.test.p, r.test.reject ? "Reject" : "FailToReject");
            std::cout << buf;
        }
    } else {
        std::cout << "| measure | mean A | mean B | diff | p | decision |\n";
        std::cout << "|---|---|---|---|---|---|\n";
        for (const Row& r : rows) {
            std::snprintf(buf, sizeof buf, "| %s | %.4f | %.4f | %+.4f | %.6g | %s |\n",
                          r.measure.c_str(), r.mean_a, r.mean_b, r.mean_a - r.mean_b, r.test.p,
                          r.test.reject ? "Reject" : "Fail to reject");
            std::cout << buf;
        }
    }
    return exit_ok;
}

int cmd_render(const std::string& results, double alpha, bool pooled, const std::string& format,
               const std::string& out_flag) {
    std::vector<isst::ExperimentRun> runs;
    try {
        runs = isst::runs_from_replication_csv(results);
    } catch (const std::exception& e) {
        throw isst::ScenarioError(e.what());
    }
    isst::ReportTables tables;
    try {
        tables = isst::render_tables(runs, alpha, pooled);
    } catch (const std::invalid_argument& e) {
        throw isst::ScenarioError(e.what());
    }
    std::string text;
    if (format == "json")
        text = isst::tables_to_json(tables);
    else if (format == "csv")
        text = isst::summary_table_csv(tables) + "\n" + isst::comparison_table_csv(tables);
    else
        text = isst::tables_to_markdown(tables);
    if (!out_flag.empty()) {
        ensure_dir(fs::path(out_flag).parent_path().empty() ? "." : fs::path(out_flag).parent_path());
        write_file(out_flag, text);
    }
    std::cout << text;
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"isstsim: dual-paradigm service-office simulator"};
    app.require_subcommand(1);

    std::string scenario, mode, out_dir, experiment_flag, format = "md";
    std::string file_a, file_b, results;
    std::vector<std::string> overrides;
    std::uint64_t seed = 1;
    std::uint64_t replication = 0;
    int replications = 100;
    double alpha = 0.05;
    bool trace = false, crn = false, pooled = false;

    auto* run = app.add_subcommand("run", "simulate one day and write metrics");
    run->add_option("--scenario", scenario, "scenario file")->required();
    run->add_option("--mode", mode, "des|hybrid (default: scenario's mode)");
    run->add_option("--seed", seed, "master seed");
    run->add_option("--replication", replication, "replication index");
    run->add_flag("--trace", trace, "write a per-event trace log");
    run->add_option("--out", out_dir, "output directory (default: $ISSTSIM_OUT_DIR or .)");
    run->add_option("--set", overrides, "override scenario keys, e.g. rules.speedup_factor=0.7");

    auto* exp = app.add_subcommand("experiment", "run one experiment across replications");
    exp->add_option("--scenario", scenario, "scenario file")->required();
    exp->add_option("--experiment", experiment_flag, "E1..E5")->required();
    exp->add_option("--mode", mode, "des|hybrid (default: scenario's mode)");
    exp->add_option("--replications", replications, "number of replications (>= 2)");
    exp->add_option("--seed", seed, "master seed");
    exp->add_flag("--crn", crn, "common random numbers across experiments/modes");
    exp->add_option("--out", out_dir, "output directory");
    exp->add_option("--set", overrides, "override scenario keys");

    auto* suite = app.add_subcommand("suite", "run E1..E5 in both modes and render tables");
    suite->add_option("--scenario", scenario, "scenario file")->required();
    suite->add_option("--replications", replications, "replications per experiment");
    suite->add_option("--seed", seed, "master seed");
    suite->add_flag("--crn", crn, "common random numbers across experiments/modes");
    suite->add_option("--alpha", alpha, "significance level");
    suite->add_flag("--pooled", pooled, "pooled-variance t-tests instead of Welch");
    suite->add_option("--out", out_dir, "output directory");
    suite->add_option("--set", overrides, "override scenario keys");

    auto* cmp = app.add_subcommand("compare", "t-tests between two replication CSV files");
    cmp->add_option("file_a", file_a, "first replications.csv")->required();
    cmp->add_option("file_b", file_b, "second replications.csv")->required();
    cmp->add_option("--alpha", alpha, "significance level");
    cmp->add_flag("--pooled", pooled, "pooled-variance t-tests instead of Welch");
    cmp->add_option("--format", format, "md|csv");

    auto* render = app.add_subcommand("render", "rebuild tables from a replications CSV");
    render->add_option("--results", results, "combined replications.csv")->required();
    render->add_option("--alpha", alpha, "significance level");
    render->add_flag("--pooled", pooled, "pooled-variance t-tests instead of Welch");
    render->add_option("--format", format, "md|csv|json");
    render->add_option("--out", out_dir, "also write the rendering to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(run))
            return cmd_run(scenario, mode, seed, replication, trace, out_dir, overrides);
        if (app.got_subcommand(exp))
            return cmd_experiment(scenario, experiment_flag, mode, replications, seed, crn,
                                  out_dir, overrides);
        if (app.got_subcommand(suite))
            return cmd_suite(scenario, replications, seed, crn, alpha, pooled, out_dir, overrides);
        if (app.got_subcommand(cmp)) return cmd_compare(file_a, file_b, alpha, pooled, format);
        if (app.got_subcommand(render))
            return cmd_render(results, alpha, pooled, format, out_dir);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
