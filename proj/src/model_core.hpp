#pragma once

// Shared per-replication state used by both paradigm drivers: the kernel
// objects, arrival generation, trace formatting, and metrics finalization.
// The service-flow control logic itself lives in the drivers.

#include <cstdio>
#include <optional>
#include <string>

#include "isst/arrivals.hpp"
#include "isst/calendar.hpp"
#include "isst/model.hpp"
#include "isst/queueing.hpp"
#include "isst/rng.hpp"

namespace isst::detail {

/// How a reception service, decided when it starts, settles when it ends.
enum class ReceptionOutcome : std::uint8_t {
    normal,          // general enquiry or phone call, served
    quick,           // skipper's quick enquiry, served
    ticket,          // advisory request granted: issue a number at completion
    deny_redirect,   // number refused, answered at the desk instead, served
    deny_exit,       // number refused, customer leaves unserved
};

inline const char* outcome_label(ReceptionOutcome o) {
    switch (o) {
        case ReceptionOutcome::normal: return "normal";
        case ReceptionOutcome::quick: return "quick";
        case ReceptionOutcome::ticket: return "ticket";
        case ReceptionOutcome::deny_redirect: return "deny_redirect";
        case ReceptionOutcome::deny_exit: return "deny_exit";
    }
    return "?";
}

class RunContext {
public:
    RunContext(const ScenarioConfig& cfg, std::uint64_t master_seed,
               std::uint64_t replication_index, const RunOptions& opts)
        : cfg(cfg),
          streams(master_seed, replication_index),
          reception_q(QueueId::reception),
          phone_q(QueueId::phone),
          advisory_q(QueueId::advisory),
          reception(ResourceId::reception, cfg.reception_capacity),
          advisory(ResourceId::advisory, cfg.advisory_capacity),
          mean_advisory_service(service_mean(cfg.advisory_service)),
          scripted_(opts.scripted),
          trace_(opts.trace) {
        cfg.validate();
    }

    const ScenarioConfig& cfg;
    EventCalendar cal;
    StreamSet streams;
    EntityStore entities;
    FifoQueue reception_q;
    FifoQueue phone_q;  // used only when cfg.split_phone_queue
    FifoQueue advisory_q;
    Resource reception;
    Resource advisory;
    TicketCounter tickets;
    const double mean_advisory_service;
    int skip_count = 0;

    bool reception_may_start(SimTime now) const { return now < cfg.day_close; }

    bool advisory_may_start(SimTime now) const {
        return now >= cfg.walkin_open && now < cfg.walkin_close;
    }

    /// The queue an arriving customer of this kind waits in.
    FifoQueue& entry_queue(EntityKind k) {
        if (cfg.split_phone_queue && k == EntityKind::PhoneCall) return phone_q;
        return reception_q;
    }

    /// Line length a student weighs up before skipping: the desk queue.
    int desk_queue_length() const { return static_cast<int>(reception_q.length()); }

    /// Next reception queue to serve from: desk before phone when split.
    FifoQueue* next_reception_queue() {
        if (!reception_q.empty()) return &reception_q;
        if (cfg.split_phone_queue && !phone_q.empty()) return &phone_q;
        return nullptr;
    }

    // -- arrivals ------------------------------------------------------------

    /// Schedules the first arrival of every kind plus the window and close
    /// events. Both drivers call this with their arrival handler, so event
    /// insertion order (and therefore tie-breaking) is identical across modes.
    template <typename OnArrival, typename OnWalkinOpen, typename OnWalkinClose,
              typename OnDayClose>
    void setup_day(OnArrival on_arrival, OnWalkinOpen on_open, OnWalkinClose on_close,
                   OnDayClose on_day_close) {
        cal.schedule(cfg.walkin_open, [on_open](SimTime t) { on_open(t); });
        cal.schedule(cfg.walkin_close, [on_close](SimTime t) { on_close(t); });
        cal.schedule(cfg.day_close, [on_day_close](SimTime t) { on_day_close(t); });
        schedule_next_arrival(EntityKind::StudentGeneral, cfg.day_open, on_arrival);
        schedule_next_arrival(EntityKind::StudentAdvisory, cfg.day_open, on_arrival);
        schedule_next_arrival(EntityKind::PhoneCall, cfg.day_open, on_arrival);
    }

    template <typename OnArrival>
    void schedule_next_arrival(EntityKind kind, SimTime now, OnArrival on_arrival) {
        std::optional<SimTime> t;
        if (scripted_) {
            auto& idx = scripted_index_[static_cast<std::size_t>(kind)];
            const auto& times = scripted_times(kind);
            if (idx < times.size()) t = times[idx++];
        } else {
            t = next_arrival(cfg.schedule_for(kind), now, cfg.day_close,
                             streams[arrival_stream(kind)]);
        }
        if (!t) return;
        cal.schedule(*t, [this, kind, on_arrival](SimTime at) {
            schedule_next_arrival(kind, at, on_arrival);
            on_arrival(kind, at);
        });
    }

    static StreamId arrival_stream(EntityKind k) {
        switch (k) {
            case EntityKind::StudentGeneral: return StreamId::arrivals_general;
            case EntityKind::StudentAdvisory: return StreamId::arrivals_advisory;
            case EntityKind::PhoneCall: return StreamId::arrivals_phone;
        }
        throw std::logic_error("unknown entity kind");
    }

    // -- tracing -------------------------------------------------------------

    void trace(SimTime t, const char* event, const Entity* e = nullptr,
               const char* extra_key = nullptr, const std::string& extra_value = {}) {
        if (!trace_) return;
        char buf[160];
        int n = std::snprintf(buf, sizeof buf, "t=%.6f ev=%s", t, event);
        if (e)
            n += std::snprintf(buf + n, sizeof buf - n, " entity=%u kind=%s", e->id,
                               std::string(kind_label(e->kind)).c_str());
        std::string line(buf, static_cast<std::size_t>(n));
        if (extra_key) {
            line += ' ';
            line += extra_key;
            line += '=';
            line += extra_value;
        }
        trace_(line);
    }

    // -- end of day ----------------------------------------------------------

    void close_advisory_queue(SimTime now) {
        for (EntityId eid : advisory_q.close_all(entities, now))
            trace(now, "advisory_queue_closed", &entities[eid]);
    }

    void close_reception_queues(SimTime now) {
        for (EntityId eid : reception_q.close_all(entities, now))
            trace(now, "reception_queue_closed", &entities[eid]);
        if (cfg.split_phone_queue)
            for (EntityId eid : phone_q.close_all(entities, now))
                trace(now, "reception_queue_closed", &entities[eid]);
    }

    ReplicationMetrics finalize() const {
        ReplicationMetrics m;
        m.tickets_issued = static_cast<int>(tickets.issued());
        m.skips = skip_count;
        for (const Entity& e : entities) {
            auto& kind = m.by_kind[static_cast<std::size_t>(e.kind)];
            ++m.arrivals;
            ++kind.arrivals;
            const double w = e.total_wait();
            m.total_wait_minutes += w;
            kind.total_wait += w;
            if (e.redirected) ++m.redirected;
            if (e.served) {
                ++m.served;
                ++kind.served;
            } else {
                ++m.not_served;
                ++kind.not_served;
                if (e.turned_away)
                    ++m.turned_away;
                else if (e.ticket)
                    ++m.advisory_leftover;
                else
                    ++m.reception_leftover;
            }
            for (const QueueStay& stay : e.queue_entries) {
                QueueBreakdown& q = queue_breakdown(m, stay.queue);
                ++q.stays;
                q.total_wait += stay.wait();
            }
        }
        if (m.arrivals > 0) m.mean_wait_minutes = m.total_wait_minutes / m.arrivals;
        for (auto& kind : m.by_kind)
            if (kind.arrivals > 0) kind.mean_wait = kind.total_wait / kind.arrivals;
        finish_queue(m.reception_queue, reception_q);
        finish_queue(m.phone_queue, phone_q);
        finish_queue(m.advisory_queue, advisory_q);
        return m;
    }

private:
    static QueueBreakdown& queue_breakdown(ReplicationMetrics& m, QueueId q) {
        switch (q) {
            case QueueId::reception: return m.reception_queue;
            case QueueId::phone: return m.phone_queue;
            case QueueId::advisory: return m.advisory_queue;
        }
        throw std::logic_error("unknown queue id");
    }

    void finish_queue(QueueBreakdown& out, const FifoQueue& q) const {
        if (out.stays > 0) out.mean_wait = out.total_wait / static_cast<double>(out.stays);
        out.time_avg_length = q.time_average_length(cfg.day_close);
    }

    const std::vector<SimTime>& scripted_times(EntityKind k) const {
        switch (k) {
            case EntityKind::StudentGeneral: return scripted_->general;
            case EntityKind::StudentAdvisory: return scripted_->advisory;
            case EntityKind::PhoneCall: return scripted_->phone;
        }
        throw std::logic_error("unknown entity kind");
    }

    const ScriptedArrivals* scripted_;
    TraceFn trace_;
    std::array<std::size_t, entity_kind_count> scripted_index_{};
};

}  // namespace isst::detail
