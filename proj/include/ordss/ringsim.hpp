#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ordss/planner.hpp"

namespace ordss {

// One simulator input: a user download at a node, a node failure, or the
// repair of a previously failed node.
struct Event {
    enum class Kind { Request, Fail, Repair };

    Kind kind = Kind::Request;
    Index node = 0;  // 1-based

    static Event request(Index node) { return {Kind::Request, node}; }
    static Event fail(Index node) { return {Kind::Fail, node}; }
    static Event repair(Index node) { return {Kind::Repair, node}; }
};

// One traced hop. Endpoints other than plain storage nodes are the
// requesting user (reconstruction) and the substitute node (repair).
struct TraceRecord {
    enum class Endpoint { Node, User, Substitute };

    Index tick = 0;
    Index from = 0;
    Endpoint to_kind = Endpoint::Node;
    Index to = 0;
    Index symbol_count = 0;
    std::uint64_t payload_digest = 0;  // FNV-1a64 over little-endian u32 symbol values

    std::string link_name() const;  // "N3->N2", "N1->U1", "N3->N'2"
};

struct Trace {
    std::vector<TraceRecord> records;
    std::map<std::string, Index> per_link;  // cumulative symbols per link
    Index total = 0;

    // Line-oriented text, one "tick <t>: <from> -> <to>: <c> symbols" per hop.
    std::string render_text() const;

    // {"per_link": {...}, "total": n} on a single line.
    std::string render_summary_json() const;
};

struct RingState {
    enum class Status { Alive, Failed, Substitute };

    std::vector<FpRowVector> stores;  // per node, 1 x alpha
    std::vector<Status> status;
};

struct SimulationResult {
    Trace trace;
    RingState final_state;
};

std::uint64_t fnv1a64(const std::vector<std::uint32_t>& words);

// Executes the events hop by hop on the ring (one hop per tick). Every
// reconstruction is decoded and checked against the data; every repair must
// restore the failed node's exact symbols. At most one failure may be
// outstanding at a time. Throws SimulationError on ill-formed sequences.
SimulationResult simulate(const Scheme& s, const FpRowVector& data,
                          const std::vector<Event>& events);

}  // namespace ordss
