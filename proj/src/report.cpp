#include "isst/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace isst {

namespace {

using nlohmann::json;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_short(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

/// Display form of a p-value: full p-values below 1e-4 print as "<0.0001"
/// rather than a misleading 0.0000.
std::string fmt_p(double p) {
    if (p < 1e-4) return "<0.0001";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", p);
    return buf;
}

const ExperimentRun* find_run(const std::vector<ExperimentRun>& runs, ExperimentId id,
                              SimMode mode) {
    for (const auto& r : runs)
        if (r.experiment == id && r.mode == mode) return &r;
    return nullptr;
}

json summary_to_json(const MetricSummary& s) {
    return json{{"n", s.n},
                {"mean", s.mean},
                {"stddev", s.stddev},
                {"ci_half_width", s.ci_half_width},
                {"low_n", s.low_n}};
}

}  // namespace

ReportTables render_tables(const std::vector<ExperimentRun>& runs, double alpha, bool pooled) {
    ReportTables t;
    t.alpha = alpha;
    for (SimMode mode : {SimMode::des, SimMode::hybrid}) {
        bool mode_present = false;
        for (const auto& r : runs) mode_present |= (r.mode == mode);
        if (!mode_present) continue;
        const ExperimentRun* baseline = find_run(runs, ExperimentId::E1, mode);
        if (!baseline)
            throw std::invalid_argument("render_tables: missing baseline E1 for mode " +
                                        std::string(mode_label(mode)));
        for (ExperimentId id : all_experiments) {
            const ExperimentRun* r = find_run(runs, id, mode);
            if (!r) continue;
            t.summary.push_back({id, mode, aggregate(*r)});
            if (id == ExperimentId::E1) continue;
            const auto base_wait = waiting_time_samples(*baseline);
            const auto exp_wait = waiting_time_samples(*r);
            const auto base_ns = not_served_samples(*baseline);
            const auto exp_ns = not_served_samples(*r);
            t.comparisons.push_back({id, "waiting_time", mode, sample_mean(base_wait),
                                     sample_mean(exp_wait),
                                     welch_t_test(base_wait, exp_wait, alpha, pooled)});
            t.comparisons.push_back({id, "customers_not_served", mode, sample_mean(base_ns),
                                     sample_mean(exp_ns),
                                     welch_t_test(base_ns, exp_ns, alpha, pooled)});
        }
    }
    return t;
}

std::string tables_to_markdown(const ReportTables& t) {
    std::ostringstream out;
    bool has_des = false, has_hybrid = false;
    for (const auto& row : t.summary) {
        has_des |= (row.mode == SimMode::des);
        has_hybrid |= (row.mode == SimMode::hybrid);
    }

    out << "## Performance measures per experiment\n\n";
    out << "| Experiment |";
    if (has_des) out << " DES waiting time (min) | DES not served |";
    if (has_hybrid) out << " Hybrid waiting time (min) | Hybrid not served |";
    out << "\n|---|";
    if (has_des) out << "---|---|";
    if (has_hybrid) out << "---|---|";
    out << "\n";
    for (ExperimentId id : all_experiments) {
        const SummaryTableRow* des = nullptr;
        const SummaryTableRow* hyb = nullptr;
        for (const auto& row : t.summary) {
            if (row.experiment != id) continue;
            (row.mode == SimMode::des ? des : hyb) = &row;
        }
        if (!des && !hyb) continue;
        out << "| " << experiment_label(id) << " |";
        if (has_des) {
            if (des)
                out << " " << fmt_short(des->summary.mean_wait.mean) << " | "
                    << fmt_short(des->summary.not_served.mean) << " |";
            else
                out << " - | - |";
        }
        if (has_hybrid) {
            if (hyb)
                out << " " << fmt_short(hyb->summary.mean_wait.mean) << " | "
                    << fmt_short(hyb->summary.not_served.mean) << " |";
            else
                out << " - | - |";
        }
        out << "\n";
    }

    out << "\n## t-tests: E1 vs E2..E5 (alpha = " << fmt_short(t.alpha) << ")\n\n";
    out << "| Experiments | Measure |";
    if (has_des) out << " DES p-value | DES decision |";
    if (has_hybrid) out << " Hybrid p-value | Hybrid decision |";
    out << "\n|---|---|";
    if (has_des) out << "---|---|";
    if (has_hybrid) out << "---|---|";
    out << "\n";
    for (ExperimentId id : {ExperimentId::E2, ExperimentId::E3, ExperimentId::E4,
                            ExperimentId::E5}) {
        for (const char* measure : {"waiting_time", "customers_not_served"}) {
            const ComparisonRow* des = nullptr;
            const ComparisonRow* hyb = nullptr;
            for (const auto& row : t.comparisons) {
                if (row.experiment != id || row.measure != measure) continue;
                (row.mode == SimMode::des ? des : hyb) = &row;
            }
            if (!des && !hyb) continue;
            out << "| E1 vs " << experiment_label(id) << " | " << measure << " |";
            auto cell = [&](const ComparisonRow* row) {
                if (!row) {
                    out << " - | - |";
                    return;
                }
                out << " " << fmt_p(row->test.p) << " | "
                    << (row->test.reject ? "Reject" : "Fail to reject") << " |";
            };
            if (has_des) cell(des);
            if (has_hybrid) cell(hyb);
            out << "\n";
        }
    }
    return out.str();
}

std::string summary_table_csv(const ReportTables& t) {
    std::string out =
        "experiment,mode,mean_wait,mean_wait_std,mean_wait_ci_half,mean_not_served,"
        "not_served_std,not_served_ci_half,mean_served,mean_turned_away,mean_leftover\n";
    for (const auto& row : t.summary) {
        out += experiment_label(row.experiment) + "," + std::string(mode_label(row.mode)) + "," +
               fmt(row.summary.mean_wait.mean) + "," + fmt(row.summary.mean_wait.stddev) + "," +
               fmt(row.summary.mean_wait.ci_half_width) + "," + fmt(row.summary.not_served.mean) +
               "," + fmt(row.summary.not_served.stddev) + "," +
               fmt(row.summary.not_served.ci_half_width) + "," + fmt(row.summary.served.mean) +
               "," + fmt(row.summary.turned_away.mean) + "," + fmt(row.summary.leftover.mean) +
               "\n";
    }
    return out;
}

std::string comparison_table_csv(const ReportTables& t) {
    std::string out = "pair,measure,mode,baseline_mean,experiment_mean,t,df,p,reject,degenerate\n";
    for (const auto& row : t.comparisons) {
        out += "E1 vs " + experiment_label(row.experiment) + "," + row.measure + "," +
               std::string(mode_label(row.mode)) + "," + fmt(row.baseline_mean) + "," +
               fmt(row.experiment_mean) + "," + fmt(row.test.t) + "," + fmt(row.test.df) + "," +
               fmt(row.test.p) + "," + (row.test.reject ? "Reject" : "FailToReject") + "," +
               (row.test.degenerate ? "true" : "false") + "\n";
    }
    return out;
}

std::string tables_to_json(const ReportTables& t) {
    json j;
    j["alpha"] = t.alpha;
    j["summary"] = json::array();
    for (const auto& row : t.summary) {
        j["summary"].push_back(json{{"experiment", experiment_label(row.experiment)},
                                    {"mode", std::string(mode_label(row.mode))},
                                    {"waiting_time", summary_to_json(row.summary.mean_wait)},
                                    {"customers_not_served", summary_to_json(row.summary.not_served)},
                                    {"customers_served", summary_to_json(row.summary.served)},
                                    {"turned_away", summary_to_json(row.summary.turned_away)},
                                    {"leftover", summary_to_json(row.summary.leftover)}});
    }
    j["comparisons"] = json::array();
    for (const auto& row : t.comparisons) {
        j["comparisons"].push_back(json{{"pair", "E1 vs " + experiment_label(row.experiment)},
                                        {"measure", row.measure},
                                        {"mode", std::string(mode_label(row.mode))},
                                        {"baseline_mean", row.baseline_mean},
                                        {"experiment_mean", row.experiment_mean},
                                        {"t", row.test.t},
                                        {"df", row.test.df},
                                        {"p", row.test.p},
                                        {"alpha", row.test.alpha},
                                        {"reject", row.test.reject},
                                        {"degenerate", row.test.degenerate}});
    }
    return j.dump(2) + "\n";
}

// -- single-replication metrics ----------------------------------------------

namespace {

json kind_to_json(const KindBreakdown& k) {
    return json{{"arrivals", k.arrivals},
                {"served", k.served},
                {"not_served", k.not_served},
                {"total_wait", k.total_wait},
                {"mean_wait", k.mean_wait}};
}

void kind_from_json(const json& j, KindBreakdown& k) {
    k.arrivals = j.at("arrivals");
    k.served = j.at("served");
    k.not_served = j.at("not_served");
    k.total_wait = j.at("total_wait");
    k.mean_wait = j.at("mean_wait");
}

json queue_to_json(const QueueBreakdown& q) {
    return json{{"stays", q.stays},
                {"total_wait", q.total_wait},
                {"mean_wait", q.mean_wait},
                {"time_avg_length", q.time_avg_length}};
}

void queue_from_json(const json& j, QueueBreakdown& q) {
    q.stays = j.at("stays");
    q.total_wait = j.at("total_wait");
    q.mean_wait = j.at("mean_wait");
    q.time_avg_length = j.at("time_avg_length");
}

}  // namespace

std::string metrics_to_json(const ReplicationMetrics& m) {
    json j;
    j["arrivals"] = m.arrivals;
    j["served"] = m.served;
    j["not_served"] = m.not_served;
    j["turned_away"] = m.turned_away;
    j["redirected"] = m.redirected;
    j["reception_leftover"] = m.reception_leftover;
    j["advisory_leftover"] = m.advisory_leftover;
    j["tickets_issued"] = m.tickets_issued;
    j["skips"] = m.skips;
    j["total_wait_minutes"] = m.total_wait_minutes;
    j["mean_wait_minutes"] = m.mean_wait_minutes;
    j["by_kind"] = json::object();
    for (std::size_t i = 0; i < entity_kind_count; ++i)
        j["by_kind"][std::string(kind_label(static_cast<EntityKind>(i)))] =
            kind_to_json(m.by_kind[i]);
    j["queues"] = json{{"reception", queue_to_json(m.reception_queue)},
                       {"phone", queue_to_json(m.phone_queue)},
                       {"advisory", queue_to_json(m.advisory_queue)}};
    return j.dump(2) + "\n";
}

ReplicationMetrics metrics_from_json(const std::string& text) {
    const json j = json::parse(text);
    ReplicationMetrics m;
    m.arrivals = j.at("arrivals");
    m.served = j.at("served");
    m.not_served = j.at("not_served");
    m.turned_away = j.at("turned_away");
    m.redirected = j.at("redirected");
    m.reception_leftover = j.at("reception_leftover");
    m.advisory_leftover = j.at("advisory_leftover");
    m.tickets_issued = j.at("tickets_issued");
    m.skips = j.at("skips");
    m.total_wait_minutes = j.at("total_wait_minutes");
    m.mean_wait_minutes = j.at("mean_wait_minutes");
    for (std::size_t i = 0; i < entity_kind_count; ++i)
        kind_from_json(j.at("by_kind").at(std::string(kind_label(static_cast<EntityKind>(i)))),
                       m.by_kind[i]);
    queue_from_json(j.at("queues").at("reception"), m.reception_queue);
    queue_from_json(j.at("queues").at("phone"), m.phone_queue);
    queue_from_json(j.at("queues").at("advisory"), m.advisory_queue);
    return m;
}

// -- replication CSV loading ---------------------------------------------------

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

SampleFile load_replication_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open results file '" + path + "'");
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("results file '" + path + "' is empty");
    SampleFile f;
    f.columns = split_csv_line(line);
    const std::vector<std::string> numeric = {"mean_wait_minutes", "n_served", "n_not_served",
                                              "turned_away", "leftover"};
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < f.columns.size(); ++i) index[f.columns[i]] = i;
    for (const auto& col : numeric)
        if (!index.count(col))
            throw std::runtime_error("results file '" + path + "' lacks column '" + col + "'");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != f.columns.size())
            throw std::runtime_error("results file '" + path + "': ragged row");
        for (const auto& col : numeric)
            f.samples[col].push_back(std::stod(cells[index[col]]));
    }
    return f;
}

std::vector<ExperimentRun> runs_from_replication_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open results file '" + path + "'");
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("results file '" + path + "' is empty");
    const auto header = split_csv_line(line);
    const auto expect = split_csv_line(replication_csv_header().substr(
        0, replication_csv_header().size() - 1));
    if (header != expect)
        throw std::runtime_error("results file '" + path + "': unexpected column layout");
    std::map<std::pair<std::string, std::string>, ExperimentRun> by_key;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw std::runtime_error("results file '" + path + "': ragged row");
        auto& run = by_key[{cells[0], cells[1]}];
        run.experiment = parse_experiment(cells[0]);
        if (cells[1] != "des" && cells[1] != "hybrid")
            throw std::runtime_error("results file '" + path + "': unknown mode '" + cells[1] + "'");
        run.mode = cells[1] == "des" ? SimMode::des : SimMode::hybrid;
        ReplicationMetrics m;
        m.mean_wait_minutes = std::stod(cells[3]);
        m.served = std::stoi(cells[4]);
        m.not_served = std::stoi(cells[5]);
        m.turned_away = std::stoi(cells[6]);
        m.reception_leftover = std::stoi(cells[7]);  // combined leftover lands here
        m.arrivals = m.served + m.not_served;
        run.results.push_back(m);
    }
    std::vector<ExperimentRun> runs;
    for (auto& [key, run] : by_key) {
        run.replications = static_cast<int>(run.results.size());
        runs.push_back(std::move(run));
    }
    return runs;
}

}  // namespace isst
