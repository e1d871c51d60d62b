#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "isst/scenario.hpp"

namespace isst {

struct KindBreakdown {
    int arrivals = 0;
    int served = 0;
    int not_served = 0;
    double total_wait = 0.0;
    double mean_wait = 0.0;
};

struct QueueBreakdown {
    std::int64_t stays = 0;
    double total_wait = 0.0;
    double mean_wait = 0.0;
    double time_avg_length = 0.0;
};

/// Output of one simulated day. The waiting-time metric averages every
/// customer's total queueing time across both queues; customers still queued
/// when a queue shuts have their stay truncated at the shutdown time.
struct ReplicationMetrics {
    int arrivals = 0;
    int served = 0;
    int not_served = 0;          // == turned_away + reception_leftover + advisory_leftover
    int turned_away = 0;         // denied a ticket and sent away (exit policy)
    int redirected = 0;          // denied a ticket, answered at the desk instead
    int reception_leftover = 0;  // still in a reception queue at day close
    int advisory_leftover = 0;   // ticket holders the advisors never reached
    int tickets_issued = 0;
    int skips = 0;

    double total_wait_minutes = 0.0;
    double mean_wait_minutes = 0.0;

    std::array<KindBreakdown, entity_kind_count> by_kind{};
    QueueBreakdown reception_queue{};
    QueueBreakdown phone_queue{};  // all zero unless the phone queue is split
    QueueBreakdown advisory_queue{};
};

/// Fixed arrival times per kind, replacing the Poisson processes. Used by the
/// deterministic trace tests; times must be sorted ascending.
struct ScriptedArrivals {
    std::vector<SimTime> general;
    std::vector<SimTime> advisory;
    std::vector<SimTime> phone;
};

using TraceFn = std::function<void(std::string_view line)>;

struct RunOptions {
    const ScriptedArrivals* scripted = nullptr;
    TraceFn trace;  // receives one formatted line per event when set
};

/// Runs one day in the mode selected by cfg.mode.
ReplicationMetrics run_day(const ScenarioConfig& cfg, std::uint64_t master_seed,
                           std::uint64_t replication_index, const RunOptions& opts = {});

/// Process-oriented implementation: entities are passive records flowing
/// through event handlers with the behaviour rules as branch points.
ReplicationMetrics run_day_des(const ScenarioConfig& cfg, std::uint64_t master_seed,
                               std::uint64_t replication_index, const RunOptions& opts = {});

/// Agent-based implementation on the same kernel: staff and customers are
/// state-chart agents; the behaviour rules appear as transition guards.
ReplicationMetrics run_day_hybrid(const ScenarioConfig& cfg, std::uint64_t master_seed,
                                  std::uint64_t replication_index, const RunOptions& opts = {});

}  // namespace isst
