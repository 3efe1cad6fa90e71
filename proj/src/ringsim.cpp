#include "ordss/ringsim.hpp"

#include <sstream>

namespace ordss {

std::uint64_t fnv1a64(const std::vector<std::uint32_t>& words) {
    std::uint64_t h = 14695981039346656037ull;
    for (std::uint32_t w : words) {
        for (int byte = 0; byte < 4; ++byte) {
            h ^= (w >> (8 * byte)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

std::string TraceRecord::link_name() const {
    std::string to_name;
    switch (to_kind) {
        case Endpoint::Node: to_name = "N" + std::to_string(to); break;
        case Endpoint::User: to_name = "U" + std::to_string(to); break;
        case Endpoint::Substitute: to_name = "N'" + std::to_string(to); break;
    }
    return "N" + std::to_string(from) + "->" + to_name;
}

std::string Trace::render_text() const {
    std::ostringstream os;
    for (const TraceRecord& r : records) {
        std::string link = r.link_name();
        const auto arrow = link.find("->");
        os << "tick " << r.tick << ": " << link.substr(0, arrow) << " -> "
           << link.substr(arrow + 2) << ": " << r.symbol_count << " symbols\n";
    }
    return os.str();
}

std::string Trace::render_summary_json() const {
    std::ostringstream os;
    os << "{\"per_link\": {";
    bool first = true;
    for (const auto& [link, count] : per_link) {
        if (!first) os << ", ";
        first = false;
        os << "\"" << link << "\": " << count;
    }
    os << "}, \"total\": " << total << "}";
    return os.str();
}

namespace {

class Simulator {
  public:
    Simulator(const Scheme& s, const FpRowVector& data) : scheme_(s), data_(data) {
        const RingParams& p = s.params();
        if (data.cols() != p.m_size) {
            throw DimensionError("simulate: data vector length != m_size");
        }
        state_.stores.reserve(p.n);
        for (Index i = 1; i <= p.n; ++i) {
            state_.stores.push_back(node_symbols(s, data, i));
            state_.status.push_back(RingState::Status::Alive);
        }
    }

    void run(const std::vector<Event>& events) {
        for (const Event& e : events) {
            switch (e.kind) {
                case Event::Kind::Request: handle_request(e.node); break;
                case Event::Kind::Fail: handle_fail(e.node); break;
                case Event::Kind::Repair: handle_repair(e.node); break;
            }
        }
    }

    SimulationResult take_result() && { return {std::move(trace_), std::move(state_)}; }

  private:
    void check_node(Index i) const {
        if (i < 1 || i > scheme_.params().n) {
            throw SimulationError("event node index " + std::to_string(i) + " outside the ring");
        }
    }

    bool alive(Index i) const {
        return state_.status[static_cast<std::size_t>(i - 1)] != RingState::Status::Failed;
    }

    // Symbols carried by a payload: the inner products data * vector.
    std::vector<std::uint32_t> payload_symbols(const std::vector<FpVector>& vectors) const {
        std::vector<std::uint32_t> symbols;
        symbols.reserve(vectors.size());
        for (const FpVector& v : vectors) {
            symbols.push_back((data_ * v)(0, 0).value());
        }
        return symbols;
    }

    void record_hop(Index from, TraceRecord::Endpoint to_kind, Index to,
                    const std::vector<FpVector>& vectors) {
        TraceRecord rec;
        rec.tick = ++tick_;
        rec.from = from;
        rec.to_kind = to_kind;
        rec.to = to;
        rec.symbol_count = static_cast<Index>(vectors.size());
        rec.payload_digest = fnv1a64(payload_symbols(vectors));
        trace_.per_link[rec.link_name()] += rec.symbol_count;
        trace_.total += rec.symbol_count;
        trace_.records.push_back(std::move(rec));
    }

    // Ring-direction check: inter-node hops must go j -> j-1 (mod n).
    void check_direction(const PlanEdge& e, Index final_to) const {
        const RingParams& p = scheme_.params();
        const Index expected = e.to == 0 ? final_to : e.to;
        if (expected != p.next_downstream(e.from) && e.from != expected) {
            throw SimulationError("plan edge violates the ring direction");
        }
    }

    void handle_request(Index user) {
        check_node(user);
        if (!alive(user)) {
            throw SimulationError("request at failed node N" + std::to_string(user) +
                                  " before repair");
        }
        const RingParams& params = scheme_.params();
        for (Index j = 1; j < params.k(); ++j) {
            if (!alive(params.ring_node(user + j))) {
                throw SimulationError("reconstruction chain for U" + std::to_string(user) +
                                      " crosses failed node N" +
                                      std::to_string(params.ring_node(user + j)));
            }
        }
        const ReconstructionPlan plan = plan_reconstruction(scheme_, user);
        for (const PlanEdge& e : plan.edges) {
            check_direction(e, user);
            const bool final_hop = e.to == 0;
            record_hop(e.from, final_hop ? TraceRecord::Endpoint::User : TraceRecord::Endpoint::Node,
                       final_hop ? user : e.to, e.vectors);
        }

        // Decode at the user and require the exact data back.
        const std::vector<FpVector>& delivered = plan.edges.back().vectors;
        const RingParams& p = scheme_.params();
        FpMatrix vectors = fp_zeros(p.q, p.m_size, static_cast<Index>(delivered.size()));
        FpRowVector symbols = fp_zeros(p.q, 1, static_cast<Index>(delivered.size())).row(0);
        for (std::size_t j = 0; j < delivered.size(); ++j) {
            vectors.col(static_cast<Index>(j)) = delivered[j];
            symbols(static_cast<Index>(j)) = (data_ * delivered[j])(0, 0);
        }
        const FpRowVector decoded = decode_data(vectors, symbols);
        if (!mat_equal(decoded, data_)) {
            throw SimulationError("reconstruction at N" + std::to_string(user) +
                                  " decoded the wrong data");
        }
    }

    void handle_fail(Index node) {
        check_node(node);
        if (!alive(node)) {
            throw SimulationError("N" + std::to_string(node) + " already failed");
        }
        if (outstanding_failure_ != 0) {
            throw SimulationError("only one failure may be outstanding at a time");
        }
        outstanding_failure_ = node;
        state_.status[static_cast<std::size_t>(node - 1)] = RingState::Status::Failed;
    }

    void handle_repair(Index node) {
        check_node(node);
        if (alive(node)) {
            throw SimulationError("repair requested for alive node N" + std::to_string(node));
        }
        const RingParams& p = scheme_.params();
        const RepairPlan plan = plan_repair(scheme_, node);
        for (const PlanEdge& e : plan.edges) {
            check_direction(e, node);
            const bool final_hop = e.to == node;
            record_hop(e.from,
                       final_hop ? TraceRecord::Endpoint::Substitute : TraceRecord::Endpoint::Node,
                       e.to, e.vectors);
        }

        // The substitute recovers its store from the last hop's payload.
        const std::vector<FpVector>& received = plan.edges.back().vectors;
        FpRowVector recovered;
        if (p.k() == 1) {
            FpMatrix vectors = fp_zeros(p.q, p.m_size, static_cast<Index>(received.size()));
            FpRowVector symbols = fp_zeros(p.q, 1, static_cast<Index>(received.size())).row(0);
            for (std::size_t j = 0; j < received.size(); ++j) {
                vectors.col(static_cast<Index>(j)) = received[j];
                symbols(static_cast<Index>(j)) = (data_ * received[j])(0, 0);
            }
            recovered = decode_data(vectors, symbols) * scheme_.node_matrix(node);
        } else {
            FpRowVector symbols = fp_zeros(p.q, 1, p.alpha).row(0);
            for (Index j = 0; j < p.alpha; ++j) {
                symbols(j) = (data_ * received[static_cast<std::size_t>(j)])(0, 0);
            }
            const auto inverse = mat_solve(plan.basis_change, fp_identity(p.q, p.alpha));
            if (!inverse) throw SimulationError("repair basis change is singular");
            recovered = symbols * *inverse;
        }

        const FpRowVector original = node_symbols(scheme_, data_, node);
        if (!mat_equal(recovered, original)) {
            throw SimulationError("repair of N" + std::to_string(node) +
                                  " restored the wrong symbols");
        }
        state_.stores[static_cast<std::size_t>(node - 1)] = recovered;
        state_.status[static_cast<std::size_t>(node - 1)] = RingState::Status::Substitute;
        outstanding_failure_ = 0;
    }

    const Scheme& scheme_;
    const FpRowVector& data_;
    RingState state_;
    Trace trace_;
    Index tick_ = 0;
    Index outstanding_failure_ = 0;
};

}  // namespace

SimulationResult simulate(const Scheme& s, const FpRowVector& data,
                          const std::vector<Event>& events) {
    Simulator sim(s, data);
    sim.run(events);
    return std::move(sim).take_result();
}

}  // namespace ordss
