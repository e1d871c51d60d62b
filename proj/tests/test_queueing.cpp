#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isst/queueing.hpp"

using namespace isst;

namespace {

struct Fixture {
    EntityStore store;
    FifoQueue q{QueueId::reception};

    EntityId add(EntityKind kind = EntityKind::StudentGeneral, SimTime at = 0.0) {
        return store.create(kind, at);
    }
};

}  // namespace

TEST_CASE("enqueue basics and at_front hook") {
    Fixture f;
    const EntityId a = f.add(), b = f.add(), c = f.add();

    f.q.enqueue(f.store, a, 1.0);
    CHECK(f.q.front() == a);

    f.q.enqueue(f.store, b, 2.0);
    CHECK(f.q.front() == a);
    CHECK(f.q.length() == 2);

    f.q.enqueue(f.store, c, 3.0, /*at_front=*/true);
    CHECK(f.q.front() == c);

    auto first = f.q.dequeue_front(f.store, 4.0);
    REQUIRE(first.has_value());
    CHECK(*first == c);
    CHECK(f.store[c].queue_entries.back().wait() == doctest::Approx(1.0));
}

TEST_CASE("duplicate enqueue is a hard error") {
    Fixture f;
    const EntityId a = f.add();
    f.q.enqueue(f.store, a, 0.0);
    CHECK_THROWS_AS(f.q.enqueue(f.store, a, 1.0), std::logic_error);
}

TEST_CASE("seize dequeues the head only when a server is free") {
    Fixture f;
    Resource r(ResourceId::reception, 1);
    const EntityId a = f.add();
    f.q.enqueue(f.store, a, 5.0);

    auto seized = r.seize(f.store, f.q, 8.0);
    REQUIRE(seized.has_value());
    CHECK(*seized == a);
    CHECK(r.busy() == 1);
    CHECK(f.store[a].queue_entries.back().wait() == doctest::Approx(3.0));

    const EntityId b = f.add();
    f.q.enqueue(f.store, b, 8.0);
    CHECK_FALSE(r.seize(f.store, f.q, 9.0).has_value());  // busy
    r.release();
    CHECK(r.seize(f.store, f.q, 9.0).has_value());
}

TEST_CASE("seize on an empty queue yields nothing") {
    Fixture f;
    Resource r(ResourceId::advisory, 2);
    CHECK_FALSE(r.seize(f.store, f.q, 0.0).has_value());
}

TEST_CASE("release below zero is a hard error") {
    Resource r(ResourceId::advisory, 2);
    Fixture f;
    const EntityId a = f.add(), b = f.add();
    f.q.enqueue(f.store, a, 0.0);
    f.q.enqueue(f.store, b, 0.0);
    (void)r.seize(f.store, f.q, 0.0);
    (void)r.seize(f.store, f.q, 0.0);
    CHECK(r.busy() == 2);
    r.release();
    CHECK(r.busy() == 1);
    r.release();
    CHECK(r.busy() == 0);
    CHECK_THROWS_AS(r.release(), std::logic_error);
}

TEST_CASE("tickets are issued in increasing order starting at 1") {
    Fixture f;
    TicketCounter counter;
    for (std::uint32_t i = 1; i <= 8; ++i) {
        const EntityId e = f.add(EntityKind::StudentAdvisory);
        const WaitingTicket t = counter.issue(f.store, e, double(i));
        CHECK(t.number == i);
        CHECK(f.store[e].ticket == i);
    }
    CHECK(counter.issued() == 8);
}

TEST_CASE("close_all truncates open stays and empties the queue") {
    Fixture f;
    const EntityId a = f.add(), b = f.add();
    f.q.enqueue(f.store, a, 10.0);
    f.q.enqueue(f.store, b, 20.0);
    const auto rest = f.q.close_all(f.store, 50.0);
    CHECK(rest.size() == 2);
    CHECK(f.q.empty());
    CHECK(f.store[a].total_wait() == doctest::Approx(40.0));
    CHECK(f.store[b].total_wait() == doctest::Approx(30.0));
    CHECK_FALSE(f.store[a].served);
}

TEST_CASE("total recorded wait sums stays across queues") {
    EntityStore store;
    FifoQueue reception(QueueId::reception), advisory(QueueId::advisory);
    const EntityId e = store.create(EntityKind::StudentAdvisory, 0.0);
    reception.enqueue(store, e, 0.0);
    (void)reception.dequeue_front(store, 2.5);
    advisory.enqueue(store, e, 4.0);
    (void)advisory.dequeue_front(store, 10.0);
    CHECK(store[e].total_wait() == doctest::Approx(8.5));
    CHECK(store[e].queue_entries.size() == 2);
    for (const auto& stay : store[e].queue_entries) CHECK(stay.wait() >= 0.0);
}

TEST_CASE("time-average length integrates the queue trajectory") {
    Fixture f;
    const EntityId a = f.add(), b = f.add();
    f.q.enqueue(f.store, a, 0.0);    // length 1 over [0, 10)
    f.q.enqueue(f.store, b, 10.0);   // length 2 over [10, 20)
    (void)f.q.dequeue_front(f.store, 20.0);  // length 1 over [20, 40)
    (void)f.q.dequeue_front(f.store, 40.0);  // length 0 afterwards
    CHECK(f.q.time_average_length(50.0) == doctest::Approx((10.0 + 20.0 + 20.0) / 50.0));
}
