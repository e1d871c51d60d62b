#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "isst/calendar.hpp"

namespace isst {

enum class EntityKind : std::uint8_t { StudentGeneral = 0, StudentAdvisory = 1, PhoneCall = 2 };

inline constexpr std::size_t entity_kind_count = 3;

inline std::string_view kind_label(EntityKind k) {
    switch (k) {
        case EntityKind::StudentGeneral: return "general";
        case EntityKind::StudentAdvisory: return "advisory";
        case EntityKind::PhoneCall: return "phone";
    }
    throw std::logic_error("unknown entity kind");
}

using EntityId = std::uint32_t;

enum class QueueId : std::uint8_t { reception = 0, phone = 1, advisory = 2 };

inline std::string_view queue_label(QueueId q) {
    switch (q) {
        case QueueId::reception: return "reception";
        case QueueId::phone: return "phone";
        case QueueId::advisory: return "advisory";
    }
    throw std::logic_error("unknown queue id");
}

/// One stay in one queue. `leave` stays unset while the entity is waiting and
/// is recorded on dequeue, or on queue shutdown for entities never served.
struct QueueStay {
    QueueId queue;
    SimTime enter = 0.0;
    std::optional<SimTime> leave;

    double wait() const { return leave ? *leave - enter : 0.0; }
};

/// A customer: a walk-in student, an advisory student, or a phone call.
/// Passive record in DES mode; the hybrid mode wraps it in an agent.
struct Entity {
    EntityId id = 0;
    EntityKind kind = EntityKind::StudentGeneral;
    SimTime arrival_time = 0.0;
    std::vector<QueueStay> queue_entries;
    bool served = false;
    bool turned_away = false;
    bool redirected = false;   // came for advisory, resolved at the desk instead
    bool skipper = false;      // jumped the reception queue for a quick enquiry
    bool in_queue = false;
    std::optional<std::uint32_t> ticket;

    double total_wait() const {
        double w = 0.0;
        for (const auto& stay : queue_entries) w += stay.wait();
        return w;
    }
};

/// Per-replication entity storage; ids are indices.
class EntityStore {
public:
    EntityId create(EntityKind kind, SimTime arrival_time) {
        Entity e;
        e.id = static_cast<EntityId>(entities_.size());
        e.kind = kind;
        e.arrival_time = arrival_time;
        entities_.push_back(std::move(e));
        return entities_.back().id;
    }

    Entity& operator[](EntityId id) { return entities_[id]; }
    const Entity& operator[](EntityId id) const { return entities_[id]; }

    std::size_t size() const { return entities_.size(); }
    auto begin() const { return entities_.begin(); }
    auto end() const { return entities_.end(); }

private:
    std::vector<Entity> entities_;
};

/// FIFO queue of waiting entities. The only deviation from first-in-first-out
/// is `at_front`, the hook used by the skip-the-queue behaviour rule.
/// Tracks the time integral of its length for time-average statistics.
class FifoQueue {
public:
    explicit FifoQueue(QueueId id) : id_(id) {}

    void enqueue(EntityStore& store, EntityId eid, SimTime now, bool at_front = false) {
        Entity& e = store[eid];
        if (e.in_queue)
            throw std::logic_error("FifoQueue: entity already queued");
        accumulate(now);
        e.in_queue = true;
        e.queue_entries.push_back(QueueStay{id_, now, std::nullopt});
        if (at_front)
            waiting_.push_front(eid);
        else
            waiting_.push_back(eid);
    }

    std::optional<EntityId> dequeue_front(EntityStore& store, SimTime now) {
        if (waiting_.empty()) return std::nullopt;
        accumulate(now);
        EntityId eid = waiting_.front();
        waiting_.pop_front();
        close_stay(store[eid], now);
        return eid;
    }

    /// Shuts the queue down: every remaining stay is closed at `now` and the
    /// entities are left unserved. Used at the walk-in close and day close.
    std::vector<EntityId> close_all(EntityStore& store, SimTime now) {
        accumulate(now);
        std::vector<EntityId> rest(waiting_.begin(), waiting_.end());
        for (EntityId eid : rest) close_stay(store[eid], now);
        waiting_.clear();
        return rest;
    }

    std::size_t length() const { return waiting_.size(); }
    bool empty() const { return waiting_.empty(); }
    QueueId id() const { return id_; }
    EntityId front() const { return waiting_.front(); }

    /// Time-average queue length over [0, now].
    double time_average_length(SimTime now) const {
        if (now <= 0.0) return 0.0;
        return (length_area_ + static_cast<double>(waiting_.size()) * (now - last_change_)) / now;
    }

private:
    void accumulate(SimTime now) {
        length_area_ += static_cast<double>(waiting_.size()) * (now - last_change_);
        last_change_ = now;
    }

    void close_stay(Entity& e, SimTime now) {
        e.in_queue = false;
        for (auto it = e.queue_entries.rbegin(); it != e.queue_entries.rend(); ++it) {
            if (it->queue == id_ && !it->leave) {
                it->leave = now;
                return;
            }
        }
        throw std::logic_error("FifoQueue: no open stay to close");
    }

    QueueId id_;
    std::deque<EntityId> waiting_;
    double length_area_ = 0.0;
    SimTime last_change_ = 0.0;
};

enum class ResourceId : std::uint8_t { reception = 0, advisory = 1 };

/// A capacitated staff pool (receptionist: capacity 1, advisors: capacity 2).
class Resource {
public:
    Resource(ResourceId id, int capacity) : id_(id), capacity_(capacity) {
        if (capacity < 1) throw std::invalid_argument("Resource capacity must be >= 1");
    }

    /// Starts service for the queue head if a server is free: dequeues it,
    /// records the stay's leave time, and occupies one server.
    std::optional<EntityId> seize(EntityStore& store, FifoQueue& q, SimTime now) {
        if (busy_ >= capacity_) return std::nullopt;
        auto eid = q.dequeue_front(store, now);
        if (!eid) return std::nullopt;
        ++busy_;
        return eid;
    }

    void release() {
        if (busy_ == 0) throw std::logic_error("Resource: release while idle");
        --busy_;
    }

    int busy() const { return busy_; }
    int capacity() const { return capacity_; }
    bool has_free_server() const { return busy_ < capacity_; }
    ResourceId id() const { return id_; }

private:
    ResourceId id_;
    int capacity_;
    int busy_ = 0;
};

/// Waiting number bound to an advisory student. Numbers are issued in strictly
/// increasing order per day and fix the advisor service order.
struct WaitingTicket {
    std::uint32_t number = 0;
    EntityId holder = 0;
    SimTime issue_time = 0.0;
};

class TicketCounter {
public:
    WaitingTicket issue(EntityStore& store, EntityId eid, SimTime now) {
        WaitingTicket t{++last_number_, eid, now};
        store[eid].ticket = t.number;
        return t;
    }

    std::uint32_t issued() const { return last_number_; }

private:
    std::uint32_t last_number_ = 0;
};

}  // namespace isst
