// Process-oriented implementation. Customers are passive records; the flow of
// Figure-1 style service (reception desk/phone -> optional waiting number ->
// advisory walk-in) is encoded directly in event handlers, with the proactive
// behaviour rules as branch points.

#include "isst/behavior.hpp"
#include "isst/model.hpp"
#include "model_core.hpp"

namespace isst {

namespace {

using detail::ReceptionOutcome;
using detail::RunContext;

class DesDriver {
public:
    DesDriver(const ScenarioConfig& cfg, std::uint64_t master_seed,
              std::uint64_t replication_index, const RunOptions& opts)
        : ctx_(cfg, master_seed, replication_index, opts) {}

    ReplicationMetrics run() {
        ctx_.setup_day(
            [this](EntityKind k, SimTime t) { on_arrival(k, t); },
            [this](SimTime t) { try_start_advisory(t); },
            [this](SimTime t) { ctx_.close_advisory_queue(t); },
            [this](SimTime t) { ctx_.close_reception_queues(t); });
        ctx_.cal.run();
        return ctx_.finalize();
    }

private:
    void on_arrival(EntityKind kind, SimTime now) {
        const EntityId eid = ctx_.entities.create(kind, now);
        Entity& e = ctx_.entities[eid];
        ctx_.trace(now, "arrival", &e);
        bool at_front = false;
        if (kind != EntityKind::PhoneCall &&
            decide_skip(kind, ctx_.desk_queue_length(), ctx_.cfg.rules,
                        ctx_.streams[StreamId::behavior])) {
            e.skipper = true;
            at_front = true;
            ++ctx_.skip_count;
            ctx_.trace(now, "skip_queue", &e);
        }
        ctx_.entry_queue(kind).enqueue(ctx_.entities, eid, now, at_front);
        try_start_reception(now);
    }

    void try_start_reception(SimTime now) {
        while (ctx_.reception.has_free_server() && ctx_.reception_may_start(now)) {
            FifoQueue* q = ctx_.next_reception_queue();
            if (!q) return;
            const auto eid = ctx_.reception.seize(ctx_.entities, *q, now);
            if (!eid) return;
            Entity& e = ctx_.entities[*eid];

            // Decide the outcome and draw the duration at service start; the
            // stop-numbers rule sees the advisory queue as it is right now.
            ReceptionOutcome outcome;
            double dur;
            auto& svc_stream = ctx_.streams[StreamId::service_reception];
            if (e.skipper) {
                outcome = ReceptionOutcome::quick;
                dur = sample_triangular(ctx_.cfg.rules.quick_service, svc_stream);
            } else if (e.kind == EntityKind::StudentAdvisory) {
                const bool permit = should_issue_number(
                    static_cast<int>(ctx_.advisory_q.length()), now,
                    ctx_.mean_advisory_service, ctx_.cfg.advisory_capacity, ctx_.cfg.rules,
                    ctx_.cfg.walkin_close);
                if (permit) {
                    outcome = ReceptionOutcome::ticket;
                    dur = sample_service(ctx_.cfg.reception_service, svc_stream);
                } else {
                    outcome = ctx_.cfg.rules.denied_policy == DeniedPolicy::redirect
                                  ? ReceptionOutcome::deny_redirect
                                  : ReceptionOutcome::deny_exit;
                    dur = sample_triangular(ctx_.cfg.rules.quick_service, svc_stream);
                }
            } else {
                outcome = ReceptionOutcome::normal;
                dur = sample_service(ctx_.cfg.reception_service, svc_stream);
            }
            ctx_.trace(now, "reception_start", &e, "outcome", detail::outcome_label(outcome));
            ctx_.cal.schedule(now + dur, [this, eid = *eid, outcome](SimTime t) {
                on_reception_done(eid, outcome, t);
            });
        }
    }

    void on_reception_done(EntityId eid, ReceptionOutcome outcome, SimTime now) {
        ctx_.reception.release();
        Entity& e = ctx_.entities[eid];
        ctx_.trace(now, "reception_done", &e, "outcome", detail::outcome_label(outcome));
        switch (outcome) {
            case ReceptionOutcome::normal:
            case ReceptionOutcome::quick:
                e.served = true;
                break;
            case ReceptionOutcome::deny_redirect:
                e.served = true;
                e.redirected = true;
                break;
            case ReceptionOutcome::deny_exit:
                e.turned_away = true;
                break;
            case ReceptionOutcome::ticket: {
                ctx_.tickets.issue(ctx_.entities, eid, now);
                ctx_.trace(now, "ticket_issued", &e, "number", std::to_string(*e.ticket));
                if (now < ctx_.cfg.walkin_close) {
                    ctx_.advisory_q.enqueue(ctx_.entities, eid, now);
                    try_start_advisory(now);
                }
                // A ticket granted just before the window shut but completed
                // after it leaves the holder unserved (counted as leftover).
                break;
            }
        }
        try_start_reception(now);
    }

    void try_start_advisory(SimTime now) {
        while (ctx_.advisory.has_free_server() && ctx_.advisory_may_start(now) &&
               !ctx_.advisory_q.empty()) {
            const auto eid = ctx_.advisory.seize(ctx_.entities, ctx_.advisory_q, now);
            if (!eid) return;
            Entity& e = ctx_.entities[*eid];
            const double base =
                sample_service(ctx_.cfg.advisory_service, ctx_.streams[StreamId::service_advisor]);
            const double dur = effective_service_time(
                base, static_cast<int>(ctx_.advisory_q.length()), now,
                ctx_.mean_advisory_service, ctx_.cfg.advisory_capacity, ctx_.cfg.rules);
            ctx_.trace(now, "advisory_start", &e, "ticket", std::to_string(e.ticket.value_or(0)));
            ctx_.cal.schedule(now + dur,
                              [this, eid = *eid](SimTime t) { on_advisory_done(eid, t); });
        }
    }

    void on_advisory_done(EntityId eid, SimTime now) {
        ctx_.advisory.release();
        Entity& e = ctx_.entities[eid];
        e.served = true;
        ctx_.trace(now, "advisory_done", &e);
        try_start_advisory(now);
    }

    RunContext ctx_;
};

}  // namespace

ReplicationMetrics run_day_des(const ScenarioConfig& cfg, std::uint64_t master_seed,
                               std::uint64_t replication_index, const RunOptions& opts) {
    return DesDriver(cfg, master_seed, replication_index, opts).run();
}

ReplicationMetrics run_day(const ScenarioConfig& cfg, std::uint64_t master_seed,
                           std::uint64_t replication_index, const RunOptions& opts) {
    return cfg.mode == SimMode::des ? run_day_des(cfg, master_seed, replication_index, opts)
                                    : run_day_hybrid(cfg, master_seed, replication_index, opts);
}

}  // namespace isst
