#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "isst/calendar.hpp"
#include "isst/distributions.hpp"
#include "isst/queueing.hpp"
#include "isst/rng.hpp"

namespace isst {

/// What happens to an advisory student the receptionist declines to ticket.
/// `redirect` answers them at the desk as a quick enquiry (they leave served);
/// `exit` turns them away unserved.
enum class DeniedPolicy : std::uint8_t { redirect = 0, exit = 1 };

/// Toggles and parameters of the three proactive rules.
///
/// Type 1a (stop_numbers): the receptionist stops handing out waiting numbers
/// when the projected advisory workload no longer fits the remaining walk-in
/// window. Type 1b (speedup): advisors shorten their service time when the
/// queued workload no longer fits the time left before `speedup_close`.
/// Type 2 (skip): students facing a reception line sometimes jump to the front
/// for a quick enquiry. Parameter defaults are calibration values.
struct BehaviorRuleSet {
    bool stop_numbers_enabled = false;
    bool speedup_enabled = false;
    bool skip_enabled = false;

    double stop_slack_minutes = 0.0;    // negative = stop earlier than the projection
    double speedup_factor = 0.8;        // in (0, 1]
    SimTime speedup_close = 480.0;      // advisors aim to clear the queue by this time
    int skip_threshold_len = 4;         // minimum reception line length to tempt a skip
    double quick_enquiry_prob = 0.15;   // chance a student skips when tempted
    TriangularParams quick_service{0.5, 1.0, 2.0};  // minutes for a quick enquiry
    DeniedPolicy denied_policy = DeniedPolicy::redirect;

    void validate() const {
        if (!(speedup_factor > 0.0 && speedup_factor <= 1.0))
            throw std::invalid_argument("rules.speedup_factor: must be in (0, 1]");
        if (skip_threshold_len < 1)
            throw std::invalid_argument("rules.skip_threshold_len: must be >= 1");
        if (!(quick_enquiry_prob >= 0.0 && quick_enquiry_prob <= 1.0))
            throw std::invalid_argument("rules.quick_enquiry_prob: must be in [0, 1]");
        if (!std::isfinite(stop_slack_minutes))
            throw std::invalid_argument("rules.stop_slack_minutes: must be finite");
        if (!std::isfinite(speedup_close))
            throw std::invalid_argument("rules.speedup_close: must be finite");
        quick_service.validate("rules.quick_service");
    }

    static BehaviorRuleSet all_off(const BehaviorRuleSet& base) {
        BehaviorRuleSet r = base;
        r.stop_numbers_enabled = false;
        r.speedup_enabled = false;
        r.skip_enabled = false;
        return r;
    }
};

/// Type 1a. May the receptionist issue the next waiting number, given the
/// advisory queue length right now? Projects the queued workload (including
/// the would-be holder) against the time left in the walk-in window, with
/// `stop_slack_minutes` of tolerance. After the window shuts the answer is
/// always no.
inline bool should_issue_number(int queue_len, SimTime now, double mean_adv_service,
                                int advisors, const BehaviorRuleSet& rules,
                                SimTime walkin_close) {
    if (advisors < 1) throw std::invalid_argument("should_issue_number: advisors must be >= 1");
    if (now > walkin_close) return false;  // window shut
    if (!rules.stop_numbers_enabled) return true;
    const double projected = (queue_len + 1) * mean_adv_service / advisors;
    return projected <= (walkin_close - now) + rules.stop_slack_minutes;
}

/// Type 1b. Service duration the advisor actually takes: `base` as drawn, or
/// `base * speedup_factor` when the waiting workload no longer fits before
/// `speedup_close`. Never longer than `base`.
inline double effective_service_time(double base, int waiting, SimTime now,
                                     double mean_adv_service, int advisors,
                                     const BehaviorRuleSet& rules) {
    if (!rules.speedup_enabled) return base;
    const double projected = waiting * mean_adv_service / advisors;
    if (projected <= rules.speedup_close - now) return base;
    return base * rules.speedup_factor;
}

/// Type 2. Does this arriving customer skip the reception line to ask a quick
/// question? Phone calls never skip. Consumes one behaviour-stream draw only
/// when the rule is live and the line is at least `skip_threshold_len` long,
/// so disabled runs stay aligned with enabled ones on every other stream.
inline bool decide_skip(EntityKind kind, int reception_len, const BehaviorRuleSet& rules,
                        RngStream& s) {
    if (kind == EntityKind::PhoneCall) return false;
    if (!rules.skip_enabled) return false;
    if (reception_len < rules.skip_threshold_len) return false;
    return s.uniform01() < rules.quick_enquiry_prob;
}

// ---------------------------------------------------------------------------
// State charts (hybrid mode's agent machinery)
// ---------------------------------------------------------------------------

/// A trigger dispatched into a chart: a named message, a named timer firing,
/// or a condition poll (re-evaluate guard transitions).
struct Trigger {
    enum class Kind : std::uint8_t { message, timer, condition };

    Kind kind = Kind::message;
    std::string name;

    static Trigger message(std::string n) { return {Kind::message, std::move(n)}; }
    static Trigger timer(std::string n) { return {Kind::timer, std::move(n)}; }
    static Trigger poll() { return {Kind::condition, {}}; }
};

/// One declared transition. Messages and timers match by name; condition
/// transitions match a poll when their guard evaluates true. `action` runs
/// after the state switches.
struct Transition {
    std::string from;
    std::string to;
    Trigger::Kind kind;
    std::string name;                  // empty for condition transitions
    std::function<bool()> guard;       // condition transitions only
    std::function<void()> action;
};

/// Deterministic flat state chart: on dispatch, the first declared transition
/// out of the current state that matches fires; no match leaves the chart
/// unchanged. Construction validates that every transition endpoint is a
/// declared state.
class StateChart {
public:
    StateChart(std::string name, std::vector<std::string> states, std::string initial)
        : name_(std::move(name)), states_(std::move(states)), current_(std::move(initial)) {
        if (!is_state(current_))
            throw std::invalid_argument("StateChart " + name_ + ": initial state not declared");
    }

    void add_message_transition(std::string from, std::string msg, std::string to,
                                std::function<void()> action = nullptr) {
        add({std::move(from), std::move(to), Trigger::Kind::message, std::move(msg), nullptr,
             std::move(action)});
    }

    void add_timer_transition(std::string from, std::string timer, std::string to,
                              std::function<void()> action = nullptr) {
        add({std::move(from), std::move(to), Trigger::Kind::timer, std::move(timer), nullptr,
             std::move(action)});
    }

    void add_condition_transition(std::string from, std::function<bool()> guard, std::string to,
                                  std::function<void()> action = nullptr) {
        add({std::move(from), std::move(to), Trigger::Kind::condition, {}, std::move(guard),
             std::move(action)});
    }

    /// Dispatches a trigger; returns true when a transition fired.
    bool dispatch(const Trigger& trig) {
        for (const Transition& t : transitions_) {
            if (t.from != current_ || t.kind != trig.kind) continue;
            if (t.kind == Trigger::Kind::condition) {
                if (!t.guard || !t.guard()) continue;
            } else if (t.name != trig.name) {
                continue;
            }
            current_ = t.to;
            if (t.action) t.action();
            return true;
        }
        return false;
    }

    const std::string& current() const { return current_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& states() const { return states_; }
    bool is_state(const std::string& s) const {
        for (const auto& st : states_)
            if (st == s) return true;
        return false;
    }

private:
    void add(Transition t) {
        if (!is_state(t.from) || !is_state(t.to))
            throw std::invalid_argument("StateChart " + name_ + ": transition uses undeclared state");
        transitions_.push_back(std::move(t));
    }

    std::string name_;
    std::vector<std::string> states_;
    std::string current_;
    std::vector<Transition> transitions_;
};

enum class AgentRole : std::uint8_t { Receptionist, Advisor, Student, PhoneCaller };

/// Bare chart template for a role: the declared states and initial state,
/// without wired actions. The hybrid model binds actions onto copies of these;
/// tests exercise the topology directly.
StateChart make_role_chart(AgentRole role);

}  // namespace isst
