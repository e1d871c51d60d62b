#include "isst/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace isst {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw ScenarioError(key + ": expected a number, got '" + v + "'");
    }
}

int parse_int(const std::string& key, const std::string& v) {
    const double x = parse_number(key, v);
    if (x != std::floor(x)) throw ScenarioError(key + ": expected an integer, got '" + v + "'");
    return static_cast<int>(x);
}

bool parse_flag(const std::string& key, const std::string& v) {
    if (v == "on" || v == "true" || v == "yes" || v == "1") return true;
    if (v == "off" || v == "false" || v == "no" || v == "0") return false;
    throw ScenarioError(key + ": expected on/off, got '" + v + "'");
}

std::vector<double> parse_numbers(const std::string& key, const std::string& v) {
    std::string cleaned = v;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream ss(cleaned);
    std::vector<double> out;
    std::string tok;
    while (ss >> tok) out.push_back(parse_number(key, tok));
    return out;
}

ServiceDistribution parse_service(const std::string& key, const std::string& v) {
    std::istringstream ss(v);
    std::string tag;
    ss >> tag;
    std::string rest;
    std::getline(ss, rest);
    const std::vector<double> nums = parse_numbers(key, rest);
    if (tag == "tri") {
        if (nums.size() != 3)
            throw ScenarioError(key + ": 'tri' takes min mode max (3 numbers)");
        return TriangularParams{nums[0], nums[1], nums[2]};
    }
    if (tag == "exp") {
        if (nums.size() != 1) throw ScenarioError(key + ": 'exp' takes the mean (1 number)");
        return ExponentialService{nums[0]};
    }
    throw ScenarioError(key + ": expected 'tri min mode max' or 'exp mean', got '" + v + "'");
}

std::string service_to_text(const ServiceDistribution& d) {
    char buf[96];
    if (const auto* tri = std::get_if<TriangularParams>(&d)) {
        std::snprintf(buf, sizeof buf, "tri %.17g %.17g %.17g", tri->min_minutes,
                      tri->mode_minutes, tri->max_minutes);
    } else {
        std::snprintf(buf, sizeof buf, "exp %.17g",
                      std::get<ExponentialService>(d).mean_minutes);
    }
    return buf;
}

std::string rates_to_text(const ArrivalSchedule& s) {
    std::string out;
    char buf[32];
    for (std::size_t i = 0; i < s.hourly_rates.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s%.17g", i ? " " : "", s.hourly_rates[i]);
        out += buf;
    }
    return out;
}

using Setter = std::function<void(ScenarioConfig&, const std::string& key, const std::string& value)>;

// The whole schema: one entry per scenario key. `hourly_buckets` is the
// number of rates a schedule must carry when set from text.
const std::map<std::string, Setter>& key_table() {
    static const std::map<std::string, Setter> table = {
        {"mode",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) {
             if (v == "des") c.mode = SimMode::des;
             else if (v == "hybrid") c.mode = SimMode::hybrid;
             else throw ScenarioError(k + ": expected des|hybrid, got '" + v + "'");
         }},
        {"day.open", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.day_open = parse_number(k, v); }},
        {"day.close", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.day_close = parse_number(k, v); }},
        {"walkin.open", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.walkin_open = parse_number(k, v); }},
        {"walkin.close", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.walkin_close = parse_number(k, v); }},
        {"reception.capacity", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.reception_capacity = parse_int(k, v); }},
        {"advisory.capacity", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.advisory_capacity = parse_int(k, v); }},
        {"reception.split_phone_queue", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.split_phone_queue = parse_flag(k, v); }},
        {"service.reception", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.reception_service = parse_service(k, v); }},
        {"service.advisory", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.advisory_service = parse_service(k, v); }},
        {"arrivals.general", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.arrivals_general.hourly_rates = parse_numbers(k, v); }},
        {"arrivals.advisory", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.arrivals_advisory.hourly_rates = parse_numbers(k, v); }},
        {"arrivals.phone", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.arrivals_phone.hourly_rates = parse_numbers(k, v); }},
        {"rules.stop_numbers", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.rules.stop_numbers_enabled = parse_flag(k, v); }},
        {"rules.stop_slack_minutes", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.rules.stop_slack_minutes = parse_number(k, v); }},
        {"rules.speedup", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.rules.speedup_enabled = parse_flag(k, v); }},
        {"rules.speedup_factor", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.rules.speedup_factor = parse_number(k, v); }},
        {"rules.speedup_close", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.rules.speedup_close = parse_number(k, v); }},
        {"rules.skip", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.rules.skip_enabled = parse_flag(k, v); }},
        {"rules.skip_threshold_len", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.rules.skip_threshold_len = parse_int(k, v); }},
        {"rules.quick_enquiry_prob", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.rules.quick_enquiry_prob = parse_number(k, v); }},
        {"rules.quick_service",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) {
             const ServiceDistribution d = parse_service(k, v);
             const auto* tri = std::get_if<TriangularParams>(&d);
             if (!tri) throw ScenarioError(k + ": quick service must be triangular");
             c.rules.quick_service = *tri;
         }},
        {"rules.denied_policy",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) {
             if (v == "redirect") c.rules.denied_policy = DeniedPolicy::redirect;
             else if (v == "exit") c.rules.denied_policy = DeniedPolicy::exit;
             else throw ScenarioError(k + ": expected redirect|exit, got '" + v + "'");
         }},
    };
    return table;
}

void set_key(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
    const auto& table = key_table();
    const auto it = table.find(key);
    if (it == table.end()) throw ScenarioError("unknown scenario key '" + key + "'");
    it->second(cfg, key, value);
}

}  // namespace

void ScenarioConfig::validate() const {
    if (day_open != 0.0)
        throw ScenarioError("day.open: must be 0 (arrival schedules are indexed from opening)");
    if (!(day_close > day_open))
        throw ScenarioError("day.close: must be after day.open");
    if (!(walkin_open >= day_open && walkin_close >= walkin_open && walkin_close <= day_close))
        throw ScenarioError("walkin.open/walkin.close: walk-in window must nest inside the day");
    if (reception_capacity < 1) throw ScenarioError("reception.capacity: must be >= 1");
    if (advisory_capacity < 1) throw ScenarioError("advisory.capacity: must be >= 1");
    validate_service(reception_service, "service.reception");
    validate_service(advisory_service, "service.advisory");
    arrivals_general.validate("arrivals.general");
    arrivals_advisory.validate("arrivals.advisory");
    arrivals_phone.validate("arrivals.phone");
    try {
        rules.validate();
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(e.what());
    }
}

ScenarioConfig parse_scenario(std::istream& in, const std::string& source_name) {
    ScenarioConfig cfg;
    std::string line;
    int lineno = 0;
    const std::size_t hours =
        static_cast<std::size_t>(std::ceil((cfg.day_close - cfg.day_open) / minutes_per_hour));
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ScenarioError(source_name + ":" + std::to_string(lineno) +
                                ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        set_key(cfg, key, value);
    }
    // Scenario files describe a standard day: one rate bucket per hour.
    cfg.arrivals_general.validate("arrivals.general", hours);
    cfg.arrivals_advisory.validate("arrivals.advisory", hours);
    cfg.arrivals_phone.validate("arrivals.phone", hours);
    cfg.validate();
    return cfg;
}

ScenarioConfig load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file '" + path + "'");
    return parse_scenario(in, path);
}

void apply_overrides(ScenarioConfig& cfg, const std::vector<std::string>& overrides) {
    for (const std::string& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos)
            throw ScenarioError("override '" + ov + "': expected key=value");
        set_key(cfg, trim(ov.substr(0, eq)), trim(ov.substr(eq + 1)));
    }
    cfg.validate();
}

std::string scenario_to_text(const ScenarioConfig& cfg) {
    char buf[64];
    std::ostringstream out;
    auto num = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return std::string(buf);
    };
    out << "mode = " << mode_label(cfg.mode) << "\n";
    out << "day.open = " << num(cfg.day_open) << "\n";
    out << "day.close = " << num(cfg.day_close) << "\n";
    out << "walkin.open = " << num(cfg.walkin_open) << "\n";
    out << "walkin.close = " << num(cfg.walkin_close) << "\n";
    out << "reception.capacity = " << cfg.reception_capacity << "\n";
    out << "advisory.capacity = " << cfg.advisory_capacity << "\n";
    out << "reception.split_phone_queue = " << (cfg.split_phone_queue ? "on" : "off") << "\n";
    out << "service.reception = " << service_to_text(cfg.reception_service) << "\n";
    out << "service.advisory = " << service_to_text(cfg.advisory_service) << "\n";
    out << "arrivals.general = " << rates_to_text(cfg.arrivals_general) << "\n";
    out << "arrivals.advisory = " << rates_to_text(cfg.arrivals_advisory) << "\n";
    out << "arrivals.phone = " << rates_to_text(cfg.arrivals_phone) << "\n";
    out << "rules.stop_numbers = " << (cfg.rules.stop_numbers_enabled ? "on" : "off") << "\n";
    out << "rules.stop_slack_minutes = " << num(cfg.rules.stop_slack_minutes) << "\n";
    out << "rules.speedup = " << (cfg.rules.speedup_enabled ? "on" : "off") << "\n";
    out << "rules.speedup_factor = " << num(cfg.rules.speedup_factor) << "\n";
    out << "rules.speedup_close = " << num(cfg.rules.speedup_close) << "\n";
    out << "rules.skip = " << (cfg.rules.skip_enabled ? "on" : "off") << "\n";
    out << "rules.skip_threshold_len = " << cfg.rules.skip_threshold_len << "\n";
    out << "rules.quick_enquiry_prob = " << num(cfg.rules.quick_enquiry_prob) << "\n";
    out << "rules.quick_service = tri " << num(cfg.rules.quick_service.min_minutes) << " "
        << num(cfg.rules.quick_service.mode_minutes) << " "
        << num(cfg.rules.quick_service.max_minutes) << "\n";
    out << "rules.denied_policy = "
        << (cfg.rules.denied_policy == DeniedPolicy::redirect ? "redirect" : "exit") << "\n";
    return out.str();
}

}  // namespace isst
