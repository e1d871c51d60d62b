#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace isst {

/// Simulation time in minutes since the office opens (0.0 = 9:00 am).
using SimTime = double;

inline constexpr SimTime minutes_per_hour = 60.0;

/// One entry of the future event list. `seq` is the insertion counter that
/// makes (time, seq) a total order, so equal-time events dispatch in the
/// order they were scheduled.
struct SimEvent {
    SimTime time = 0.0;
    std::uint64_t seq = 0;
    std::function<void(SimTime)> action;
};

/// Time-ordered future event list shared by both simulation modes.
class EventCalendar {
public:
    /// Schedules `action` at `time`. Scheduling before the current clock is a
    /// model bug and throws.
    void schedule(SimTime time, std::function<void(SimTime)> action) {
        if (time < clock_)
            throw std::logic_error("EventCalendar: scheduling in the past");
        pending_.push(SimEvent{time, next_seq_++, std::move(action)});
    }

    /// Pops the minimal (time, seq) event and advances the clock to its time.
    /// Returns nothing when the calendar is empty (the run is over).
    std::optional<SimEvent> pop_next() {
        if (pending_.empty()) return std::nullopt;
        SimEvent ev = pending_.top();
        pending_.pop();
        clock_ = ev.time;
        return ev;
    }

    /// Runs events until the calendar drains.
    void run() {
        while (auto ev = pop_next()) ev->action(ev->time);
    }

    SimTime clock() const { return clock_; }
    bool empty() const { return pending_.empty(); }
    std::size_t size() const { return pending_.size(); }

private:
    struct Later {
        bool operator()(const SimEvent& a, const SimEvent& b) const {
            if (a.time != b.time) return a.time > b.time;
            return a.seq > b.seq;
        }
    };

    std::priority_queue<SimEvent, std::vector<SimEvent>, Later> pending_;
    SimTime clock_ = 0.0;
    std::uint64_t next_seq_ = 0;
};

}  // namespace isst
