#include <doctest.h>

#include "common.hpp"
#include "ordss/random.hpp"
#include "ordss/ringsim.hpp"

using namespace ordss;
using namespace ordss::testing;

namespace {

const FieldOrder q2(2);

FpRowVector sample_data(const Scheme& s, std::uint64_t seed) {
    return random_data_vector(s.params().q, s.params().m_size, seed);
}

}  // namespace

TEST_CASE("requests at every user cost the bound each") {
    const Scheme s = build_ed_scheme(4, 2, 5);
    const FpRowVector x = sample_data(s, 42);
    const SimulationResult result =
        simulate(s, x, {Event::request(1), Event::request(2), Event::request(3),
                        Event::request(4)});
    CHECK(result.trace.total == 36);  // 4 users x 9 symbols
    CHECK(result.trace.records.size() == 12);  // 3 hops per request

    Index per_request = 0;
    for (std::size_t i = 0; i < 3; ++i) per_request += result.trace.records[i].symbol_count;
    CHECK(per_request == 9);
}

TEST_CASE("fail and repair moves exactly M symbols and restores the store") {
    const Scheme s = build_ed_scheme(4, 2, 5);
    const FpRowVector x = sample_data(s, 7);
    const SimulationResult result = simulate(s, x, {Event::fail(2), Event::repair(2)});
    CHECK(result.trace.total == 5);
    CHECK(result.final_state.status[1] == RingState::Status::Substitute);
    CHECK(mat_equal(result.final_state.stores[1], node_symbols(s, x, 2)));
}

TEST_CASE("empty event list produces an empty trace") {
    const Scheme s = build_ed_scheme(4, 2, 5);
    const SimulationResult result = simulate(s, sample_data(s, 1), {});
    CHECK(result.trace.records.empty());
    CHECK(result.trace.total == 0);
    CHECK(result.trace.per_link.empty());
    CHECK(result.trace.render_text().empty());
    CHECK(result.trace.render_summary_json() == "{\"per_link\": {}, \"total\": 0}");
}

TEST_CASE("every traced hop follows the ring direction") {
    const Scheme s = build_ed_scheme(5, 2, 5);
    const RingParams& p = s.params();
    const SimulationResult result = simulate(
        s, sample_data(s, 3),
        {Event::request(1), Event::request(3), Event::fail(4), Event::repair(4),
         Event::request(5)});
    for (const TraceRecord& r : result.trace.records) {
        if (r.to_kind == TraceRecord::Endpoint::User) {
            CHECK(r.to == r.from);  // users hang off their own storage node
        } else {
            CHECK(r.to == p.next_downstream(r.from));
        }
    }
}

TEST_CASE("per-link totals add up to the executed plans") {
    const Scheme s = build_ed_scheme(4, 2, 5);
    const SimulationResult result =
        simulate(s, sample_data(s, 11), {Event::request(1), Event::fail(2), Event::repair(2)});
    Index sum = 0;
    for (const auto& [link, count] : result.trace.per_link) sum += count;
    CHECK(sum == result.trace.total);
    CHECK(result.trace.total == 9 + 5);
    CHECK(result.trace.per_link.at("N1->U1") == 5);
    CHECK(result.trace.per_link.at("N3->N'2") == 2);
}

TEST_CASE("failing and repairing every node round-trips all stores") {
    const Scheme s = build_ed_scheme(4, 2, 5);
    const FpRowVector x = sample_data(s, 99);
    std::vector<Event> events;
    for (Index node = 1; node <= 4; ++node) {
        events.push_back(Event::fail(node));
        events.push_back(Event::repair(node));
    }
    const SimulationResult result = simulate(s, x, events);
    CHECK(result.trace.total == 4 * 5);
    for (Index node = 1; node <= 4; ++node) {
        CHECK(mat_equal(result.final_state.stores[static_cast<std::size_t>(node - 1)],
                        node_symbols(s, x, node)));
        CHECK(result.final_state.status[static_cast<std::size_t>(node - 1)] ==
              RingState::Status::Substitute);
    }
}

TEST_CASE("identical inputs give byte-identical traces") {
    const Scheme s = build_ed_scheme(5, 2, 5);
    const FpRowVector x = sample_data(s, 123);
    const std::vector<Event> events = {Event::request(2), Event::fail(1), Event::repair(1),
                                       Event::request(1)};
    const SimulationResult a = simulate(s, x, events);
    const SimulationResult b = simulate(s, x, events);
    CHECK(a.trace.render_text() == b.trace.render_text());
    CHECK(a.trace.render_summary_json() == b.trace.render_summary_json());
    REQUIRE(a.trace.records.size() == b.trace.records.size());
    for (std::size_t i = 0; i < a.trace.records.size(); ++i) {
        CHECK(a.trace.records[i].payload_digest == b.trace.records[i].payload_digest);
        CHECK(a.trace.records[i].tick == b.trace.records[i].tick);
    }
}

TEST_CASE("trace text format") {
    const Scheme s = build_ed_scheme(4, 2, 5);
    const SimulationResult result = simulate(s, sample_data(s, 5), {Event::request(1)});
    CHECK(result.trace.render_text() ==
          "tick 1: N3 -> N2: 1 symbols\n"
          "tick 2: N2 -> N1: 3 symbols\n"
          "tick 3: N1 -> U1: 5 symbols\n");
}

TEST_CASE("ill-formed event sequences are rejected") {
    const Scheme s = build_ed_scheme(4, 2, 5);
    const FpRowVector x = sample_data(s, 2);
    CHECK_THROWS_AS(simulate(s, x, {Event::repair(1)}), SimulationError);
    CHECK_THROWS_AS(simulate(s, x, {Event::fail(1), Event::request(1)}), SimulationError);
    CHECK_THROWS_AS(simulate(s, x, {Event::fail(1), Event::fail(2)}), SimulationError);
    CHECK_THROWS_AS(simulate(s, x, {Event::fail(1), Event::fail(1)}), SimulationError);
    CHECK_THROWS_AS(simulate(s, x, {Event::request(9)}), SimulationError);

    // A request whose chain crosses the failed node is flagged.
    CHECK_THROWS_AS(simulate(s, x, {Event::fail(2), Event::request(1)}), SimulationError);
}

TEST_CASE("requests that avoid an outstanding failure still run") {
    // n=5, k=3: user 3 draws on nodes 3,4,5 while node 1 is down.
    const Scheme s = build_ed_scheme(5, 2, 5);
    const FpRowVector x = sample_data(s, 8);
    const SimulationResult result = simulate(s, x, {Event::fail(1), Event::request(3)});
    CHECK(result.trace.total == 9);
}
