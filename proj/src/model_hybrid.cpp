// Agent-based implementation on the shared kernel. The system skeleton stays
// process-oriented (queues, resources, calendar), but receptionist, advisors,
// students and phone callers are agents with state charts; the stop-numbers
// rule sits on the receptionist chart as a condition transition evaluated
// against the live advisory queue.

#include <vector>

#include "isst/behavior.hpp"
#include "isst/model.hpp"
#include "model_core.hpp"

namespace isst {

namespace {

using detail::ReceptionOutcome;
using detail::RunContext;

class HybridDriver {
public:
    HybridDriver(const ScenarioConfig& cfg, std::uint64_t master_seed,
                 std::uint64_t replication_index, const RunOptions& opts)
        : ctx_(cfg, master_seed, replication_index, opts) {
        for (int i = 0; i < cfg.reception_capacity; ++i) {
            Receptionist r{make_role_chart(AgentRole::Receptionist), 0, ReceptionOutcome::normal};
            r.chart.add_condition_transition(
                "serving_desk", [this] { return guard_should_issue(); }, "issuing_ticket");
            receptionists_.push_back(std::move(r));
        }
        for (int i = 0; i < cfg.advisory_capacity; ++i)
            advisors_.push_back(Advisor{make_role_chart(AgentRole::Advisor), 0});
    }

    ReplicationMetrics run() {
        ctx_.setup_day(
            [this](EntityKind k, SimTime t) { on_arrival(k, t); },
            [this](SimTime t) {
                now_ = t;
                poll_advisors();
            },
            [this](SimTime t) {
                now_ = t;
                ctx_.close_advisory_queue(t);
            },
            [this](SimTime t) {
                now_ = t;
                ctx_.close_reception_queues(t);
            });
        ctx_.cal.run();
        return ctx_.finalize();
    }

private:
    struct Receptionist {
        StateChart chart;
        EntityId customer;
        ReceptionOutcome outcome;
    };

    struct Advisor {
        StateChart chart;
        EntityId customer;
    };

    // Guard of the receptionist's proactive condition transition; pure given
    // the current clock and advisory queue.
    bool guard_should_issue() const {
        return should_issue_number(static_cast<int>(ctx_.advisory_q.length()), now_,
                                   ctx_.mean_advisory_service, ctx_.cfg.advisory_capacity,
                                   ctx_.cfg.rules, ctx_.cfg.walkin_close);
    }

    StateChart& student_chart(EntityId eid) { return student_charts_[eid]; }

    void on_arrival(EntityKind kind, SimTime now) {
        now_ = now;
        const EntityId eid = ctx_.entities.create(kind, now);
        student_charts_.push_back(make_role_chart(
            kind == EntityKind::PhoneCall ? AgentRole::PhoneCaller : AgentRole::Student));
        Entity& e = ctx_.entities[eid];
        ctx_.trace(now, "arrival", &e);

        // The student's own proactive move happens on the way into the queue.
        bool at_front = false;
        if (kind != EntityKind::PhoneCall &&
            decide_skip(kind, ctx_.desk_queue_length(), ctx_.cfg.rules,
                        ctx_.streams[StreamId::behavior])) {
            e.skipper = true;
            at_front = true;
            ++ctx_.skip_count;
            ctx_.trace(now, "skip_queue", &e);
        }
        student_chart(eid).dispatch(Trigger::message("join_queue"));
        ctx_.entry_queue(kind).enqueue(ctx_.entities, eid, now, at_front);
        poll_receptionists();
    }

    void poll_receptionists() {
        for (std::size_t i = 0; i < receptionists_.size(); ++i) {
            Receptionist& r = receptionists_[i];
            if (r.chart.current() != "idle") continue;
            if (!ctx_.reception_may_start(now_)) continue;
            FifoQueue* q = ctx_.next_reception_queue();
            if (!q) return;
            const auto eid = ctx_.reception.seize(ctx_.entities, *q, now_);
            if (!eid) return;
            Entity& e = ctx_.entities[*eid];
            r.customer = *eid;
            r.chart.dispatch(Trigger::message(e.kind == EntityKind::PhoneCall ? "phone_request"
                                                                              : "desk_request"));
            student_chart(*eid).dispatch(Trigger::message("service_begins"));

            auto& svc_stream = ctx_.streams[StreamId::service_reception];
            double dur;
            if (e.skipper) {
                r.outcome = ReceptionOutcome::quick;
                dur = sample_triangular(ctx_.cfg.rules.quick_service, svc_stream);
            } else if (e.kind == EntityKind::StudentAdvisory) {
                // Poll the proactive transition: it fires into issuing_ticket
                // exactly when the stop-numbers rule permits a number now.
                if (r.chart.dispatch(Trigger::poll())) {
                    r.outcome = ReceptionOutcome::ticket;
                    dur = sample_service(ctx_.cfg.reception_service, svc_stream);
                } else {
                    r.outcome = ctx_.cfg.rules.denied_policy == DeniedPolicy::redirect
                                    ? ReceptionOutcome::deny_redirect
                                    : ReceptionOutcome::deny_exit;
                    dur = sample_triangular(ctx_.cfg.rules.quick_service, svc_stream);
                }
            } else {
                r.outcome = ReceptionOutcome::normal;
                dur = sample_service(ctx_.cfg.reception_service, svc_stream);
            }
            ctx_.trace(now_, "reception_start", &e, "outcome", detail::outcome_label(r.outcome));
            ctx_.cal.schedule(now_ + dur,
                              [this, i](SimTime t) { on_reception_timer(i, t); });
        }
    }

    void on_reception_timer(std::size_t i, SimTime now) {
        now_ = now;
        Receptionist& r = receptionists_[i];
        ctx_.reception.release();
        const bool was_issuing = r.chart.current() == "issuing_ticket";
        r.chart.dispatch(Trigger::timer("service_done"));
        Entity& e = ctx_.entities[r.customer];
        ctx_.trace(now, "reception_done", &e, "outcome", detail::outcome_label(r.outcome));
        switch (r.outcome) {
            case ReceptionOutcome::normal:
            case ReceptionOutcome::quick:
                e.served = true;
                student_chart(e.id).dispatch(Trigger::message("finished"));
                break;
            case ReceptionOutcome::deny_redirect:
                e.served = true;
                e.redirected = true;
                student_chart(e.id).dispatch(Trigger::message("finished"));
                break;
            case ReceptionOutcome::deny_exit:
                e.turned_away = true;
                student_chart(e.id).dispatch(Trigger::message("turned_away"));
                break;
            case ReceptionOutcome::ticket: {
                (void)was_issuing;  // chart was in issuing_ticket for this path
                ctx_.tickets.issue(ctx_.entities, e.id, now);
                ctx_.trace(now, "ticket_issued", &e, "number", std::to_string(*e.ticket));
                if (now < ctx_.cfg.walkin_close) {
                    student_chart(e.id).dispatch(Trigger::message("rejoin_queue"));
                    ctx_.advisory_q.enqueue(ctx_.entities, e.id, now);
                    poll_advisors();
                }
                break;
            }
        }
        poll_receptionists();
    }

    void poll_advisors() {
        for (std::size_t i = 0; i < advisors_.size(); ++i) {
            Advisor& a = advisors_[i];
            if (a.chart.current() != "idle") continue;
            if (!ctx_.advisory_may_start(now_) || ctx_.advisory_q.empty()) return;
            const auto eid = ctx_.advisory.seize(ctx_.entities, ctx_.advisory_q, now_);
            if (!eid) return;
            Entity& e = ctx_.entities[*eid];
            a.customer = *eid;
            a.chart.dispatch(Trigger::message("call_student"));
            student_chart(*eid).dispatch(Trigger::message("service_begins"));
            const double base =
                sample_service(ctx_.cfg.advisory_service, ctx_.streams[StreamId::service_advisor]);
            const double dur = effective_service_time(
                base, static_cast<int>(ctx_.advisory_q.length()), now_,
                ctx_.mean_advisory_service, ctx_.cfg.advisory_capacity, ctx_.cfg.rules);
            ctx_.trace(now_, "advisory_start", &e, "ticket", std::to_string(e.ticket.value_or(0)));
            ctx_.cal.schedule(now_ + dur, [this, i](SimTime t) { on_advisory_timer(i, t); });
        }
    }

    void on_advisory_timer(std::size_t i, SimTime now) {
        now_ = now;
        Advisor& a = advisors_[i];
        ctx_.advisory.release();
        a.chart.dispatch(Trigger::timer("service_done"));
        Entity& e = ctx_.entities[a.customer];
        e.served = true;
        student_chart(e.id).dispatch(Trigger::message("finished"));
        ctx_.trace(now, "advisory_done", &e);
        poll_advisors();
    }

    RunContext ctx_;
    SimTime now_ = 0.0;
    std::vector<Receptionist> receptionists_;
    std::vector<Advisor> advisors_;
    std::vector<StateChart> student_charts_;  // indexed by EntityId
};

}  // namespace

ReplicationMetrics run_day_hybrid(const ScenarioConfig& cfg, std::uint64_t master_seed,
                                  std::uint64_t replication_index, const RunOptions& opts) {
    return HybridDriver(cfg, master_seed, replication_index, opts).run();
}

}  // namespace isst
