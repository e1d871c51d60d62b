#include "isst/behavior.hpp"

namespace isst {

StateChart make_role_chart(AgentRole role) {
    switch (role) {
        case AgentRole::Receptionist: {
            // The hybrid driver adds one condition transition on top of this
            // reactive skeleton: serving_desk -> issuing_ticket, guarded by the
            // stop-numbers rule evaluated against the live advisory queue.
            StateChart c("receptionist",
                         {"idle", "serving_desk", "serving_phone", "issuing_ticket"}, "idle");
            c.add_message_transition("idle", "desk_request", "serving_desk");
            c.add_message_transition("idle", "phone_request", "serving_phone");
            c.add_timer_transition("serving_desk", "service_done", "idle");
            c.add_timer_transition("serving_phone", "service_done", "idle");
            c.add_timer_transition("issuing_ticket", "service_done", "idle");
            return c;
        }
        case AgentRole::Advisor: {
            StateChart c("advisor", {"idle", "serving"}, "idle");
            c.add_message_transition("idle", "call_student", "serving");
            c.add_timer_transition("serving", "service_done", "idle");
            return c;
        }
        case AgentRole::Student: {
            StateChart c("student",
                         {"arriving", "queueing", "being_served", "done", "turned_away"},
                         "arriving");
            c.add_message_transition("arriving", "join_queue", "queueing");
            c.add_message_transition("queueing", "service_begins", "being_served");
            c.add_message_transition("being_served", "rejoin_queue", "queueing");
            c.add_message_transition("being_served", "finished", "done");
            c.add_message_transition("being_served", "turned_away", "turned_away");
            c.add_message_transition("queueing", "turned_away", "turned_away");
            return c;
        }
        case AgentRole::PhoneCaller: {
            StateChart c("phone_caller",
                         {"arriving", "queueing", "being_served", "done", "turned_away"},
                         "arriving");
            c.add_message_transition("arriving", "join_queue", "queueing");
            c.add_message_transition("queueing", "service_begins", "being_served");
            c.add_message_transition("being_served", "finished", "done");
            c.add_message_transition("queueing", "turned_away", "turned_away");
            return c;
        }
    }
    throw std::logic_error("unknown agent role");
}

}  // namespace isst
