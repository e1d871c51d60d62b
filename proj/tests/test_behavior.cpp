#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isst/behavior.hpp"

using namespace isst;

namespace {

BehaviorRuleSet rules_with(bool stop, bool speedup, bool skip) {
    BehaviorRuleSet r;
    r.stop_numbers_enabled = stop;
    r.speedup_enabled = speedup;
    r.skip_enabled = skip;
    return r;
}

}  // namespace

TEST_CASE("stop-numbers rule disabled always issues inside the window") {
    const BehaviorRuleSet off = rules_with(false, false, false);
    for (int len : {0, 3, 50})
        for (double now : {0.0, 240.0, 419.9})
            CHECK(should_issue_number(len, now, 10.0, 2, off, 420.0));
}

TEST_CASE("stop-numbers projection arithmetic") {
    BehaviorRuleSet r = rules_with(true, false, false);
    // (10+1)*10/2 = 55 > (420-410) + 0 = 10 -> refuse
    CHECK_FALSE(should_issue_number(10, 410.0, 10.0, 2, r, 420.0));
    // (2+1)*10/2 = 15 <= (420-240) = 180 -> issue
    CHECK(should_issue_number(2, 240.0, 10.0, 2, r, 420.0));
    // slack shifts the boundary
    r.stop_slack_minutes = 45.0;
    CHECK(should_issue_number(10, 410.0, 10.0, 2, r, 420.0));
    r.stop_slack_minutes = -171.0;
    CHECK_FALSE(should_issue_number(2, 240.0, 10.0, 2, r, 420.0));
}

TEST_CASE("window shut refuses regardless of the rule") {
    for (bool enabled : {false, true}) {
        const BehaviorRuleSet r = rules_with(enabled, false, false);
        CHECK_FALSE(should_issue_number(0, 420.0001, 10.0, 2, r, 420.0));
        CHECK_FALSE(should_issue_number(0, 480.0, 10.0, 2, r, 420.0));
    }
}

TEST_CASE("stop-numbers rule is monotone in queue length") {
    const BehaviorRuleSet r = rules_with(true, false, false);
    for (double now = 0.0; now <= 480.0; now += 7.5) {
        bool refused = false;
        for (int len = 0; len <= 60; ++len) {
            const bool issue = should_issue_number(len, now, 9.0, 2, r, 420.0);
            if (refused) CHECK_FALSE(issue);
            refused = refused || !issue;
        }
    }
}

TEST_CASE("speedup leaves service time alone when idle or disabled") {
    const BehaviorRuleSet off = rules_with(false, false, false);
    CHECK(effective_service_time(10.0, 30, 470.0, 10.0, 2, off) == 10.0);
    BehaviorRuleSet on = rules_with(false, true, false);
    CHECK(effective_service_time(10.0, 0, 470.0, 10.0, 2, on) == 10.0);  // nobody waiting
}

TEST_CASE("speedup applies its factor once triggered") {
    BehaviorRuleSet r = rules_with(false, true, false);
    r.speedup_factor = 0.8;
    r.speedup_close = 480.0;
    // 30 * 10 / 2 = 150 > 480 - 400 = 80 -> sped up
    CHECK(effective_service_time(10.0, 30, 400.0, 10.0, 2, r) == doctest::Approx(8.0));
    r.speedup_factor = 1.0;
    CHECK(effective_service_time(10.0, 30, 400.0, 10.0, 2, r) == doctest::Approx(10.0));
}

TEST_CASE("effective service time never exceeds the base") {
    BehaviorRuleSet r = rules_with(false, true, false);
    for (double factor : {0.5, 0.8, 1.0}) {
        r.speedup_factor = factor;
        for (int waiting = 0; waiting <= 40; waiting += 5)
            for (double now = 0.0; now <= 480.0; now += 60.0)
                for (double base : {0.5, 3.0, 12.0})
                    CHECK(effective_service_time(base, waiting, now, 9.0, 2, r) <= base);
    }
}

TEST_CASE("skip rule edge cases") {
    RngStream s(11, 0, StreamId::behavior);
    BehaviorRuleSet r = rules_with(false, false, true);
    r.skip_threshold_len = 4;

    r.quick_enquiry_prob = 1.0;
    CHECK_FALSE(decide_skip(EntityKind::StudentGeneral, 0, r, s));   // empty line
    CHECK_FALSE(decide_skip(EntityKind::StudentGeneral, 3, r, s));   // below threshold
    CHECK(decide_skip(EntityKind::StudentGeneral, 4, r, s));         // certain at boundary
    CHECK(decide_skip(EntityKind::StudentAdvisory, 9, r, s));
    CHECK_FALSE(decide_skip(EntityKind::PhoneCall, 9, r, s));        // callers cannot skip

    r.quick_enquiry_prob = 0.0;
    for (int i = 0; i < 100; ++i) CHECK_FALSE(decide_skip(EntityKind::StudentGeneral, 9, r, s));

    r.skip_enabled = false;
    r.quick_enquiry_prob = 1.0;
    CHECK_FALSE(decide_skip(EntityKind::StudentGeneral, 9, r, s));
}

TEST_CASE("skip decision draws only when the rule is live") {
    BehaviorRuleSet r = rules_with(false, false, true);
    r.skip_threshold_len = 4;
    r.quick_enquiry_prob = 0.5;
    RngStream a(3, 0, StreamId::behavior), b(3, 0, StreamId::behavior);
    (void)decide_skip(EntityKind::StudentGeneral, 2, r, a);  // below threshold: no draw
    CHECK(a.state() == b.state());
    (void)decide_skip(EntityKind::StudentGeneral, 5, r, a);  // eligible: one draw
    CHECK(a.state() != b.state());
}

TEST_CASE("disabling every rule restores the reactive identities") {
    const BehaviorRuleSet off = BehaviorRuleSet::all_off(rules_with(true, true, true));
    RngStream s(5, 0, StreamId::behavior);
    for (int len = 0; len <= 30; len += 3)
        for (double now = 0.0; now <= 420.0; now += 30.0) {
            CHECK(should_issue_number(len, now, 11.0, 2, off, 420.0));
            CHECK(effective_service_time(7.0, len, now, 11.0, 2, off) == 7.0);
            CHECK_FALSE(decide_skip(EntityKind::StudentGeneral, len, off, s));
        }
}

TEST_CASE("role charts fire the documented transitions") {
    StateChart rec = make_role_chart(AgentRole::Receptionist);
    CHECK(rec.current() == "idle");
    CHECK(rec.dispatch(Trigger::message("desk_request")));
    CHECK(rec.current() == "serving_desk");
    CHECK(rec.dispatch(Trigger::timer("service_done")));
    CHECK(rec.current() == "idle");

    StateChart adv = make_role_chart(AgentRole::Advisor);
    CHECK(adv.dispatch(Trigger::message("call_student")));
    CHECK(adv.current() == "serving");
    CHECK(adv.dispatch(Trigger::timer("service_done")));
    CHECK(adv.current() == "idle");

    StateChart student = make_role_chart(AgentRole::Student);
    CHECK(student.dispatch(Trigger::message("join_queue")));
    CHECK(student.dispatch(Trigger::message("turned_away")));
    CHECK(student.current() == "turned_away");
}

TEST_CASE("unmatched triggers leave the chart unchanged") {
    StateChart rec = make_role_chart(AgentRole::Receptionist);
    CHECK_FALSE(rec.dispatch(Trigger::timer("service_done")));  // idle has no timer
    CHECK(rec.current() == "idle");
    CHECK_FALSE(rec.dispatch(Trigger::message("no_such_message")));
    CHECK(rec.current() == "idle");
}

TEST_CASE("every dispatch lands in a declared state") {
    for (AgentRole role : {AgentRole::Receptionist, AgentRole::Advisor, AgentRole::Student,
                           AgentRole::PhoneCaller}) {
        StateChart chart = make_role_chart(role);
        const std::vector<Trigger> probes = {
            Trigger::message("desk_request"), Trigger::message("phone_request"),
            Trigger::message("call_student"), Trigger::message("join_queue"),
            Trigger::message("service_begins"), Trigger::message("rejoin_queue"),
            Trigger::message("finished"), Trigger::message("turned_away"),
            Trigger::timer("service_done"), Trigger::poll()};
        for (int round = 0; round < 8; ++round)
            for (const Trigger& t : probes) {
                (void)chart.dispatch(t);
                CHECK(chart.is_state(chart.current()));
            }
    }
}

TEST_CASE("undeclared transition endpoints are rejected at construction") {
    StateChart c("x", {"a", "b"}, "a");
    CHECK_THROWS_AS(c.add_message_transition("a", "m", "zz"), std::invalid_argument);
    CHECK_THROWS_AS(c.add_message_transition("zz", "m", "b"), std::invalid_argument);
    CHECK_THROWS_AS(StateChart("y", {"a"}, "nope"), std::invalid_argument);
}

TEST_CASE("first matching transition wins deterministically") {
    StateChart c("pri", {"s", "t1", "t2"}, "s");
    c.add_condition_transition("s", [] { return true; }, "t1");
    c.add_condition_transition("s", [] { return true; }, "t2");
    CHECK(c.dispatch(Trigger::poll()));
    CHECK(c.current() == "t1");
}

TEST_CASE("process predicate and chart condition-transition agree on a state grid") {
    // The hybrid receptionist expresses the stop-numbers rule as a condition
    // transition; sweep a grid and demand it matches the bare predicate.
    BehaviorRuleSet r = rules_with(true, false, false);
    r.stop_slack_minutes = -10.0;
    int queue_len = 0;
    double now = 0.0;
    for (queue_len = 0; queue_len <= 25; ++queue_len) {
        for (now = 0.0; now <= 480.0; now += 12.0) {
            StateChart chart = make_role_chart(AgentRole::Receptionist);
            chart.dispatch(Trigger::message("desk_request"));
            chart.add_condition_transition(
                "serving_desk",
                [&] { return should_issue_number(queue_len, now, 9.5, 2, r, 420.0); },
                "issuing_ticket");
            const bool predicate = should_issue_number(queue_len, now, 9.5, 2, r, 420.0);
            const bool fired = chart.dispatch(Trigger::poll());
            CHECK(fired == predicate);
            CHECK(chart.current() == (predicate ? "issuing_ticket" : "serving_desk"));
        }
    }
}
