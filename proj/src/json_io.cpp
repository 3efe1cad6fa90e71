#include "ordss/json_io.hpp"

namespace ordss {

namespace {

nlohmann::json matrix_rows(const ConstMatrixRef& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).value());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<std::uint64_t>> rows_from_json(const nlohmann::json& rows,
                                                       std::uint32_t q) {
    if (!rows.is_array()) throw std::invalid_argument("matrix rows must be an array");
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& row : rows) {
        if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
        std::vector<std::uint64_t> r;
        for (const auto& cell : row) {
            if (!cell.is_number_unsigned()) {
                throw std::invalid_argument("matrix entries must be non-negative integers");
            }
            const std::uint64_t v = cell.get<std::uint64_t>();
            if (v >= q) {
                throw std::invalid_argument("matrix entry " + std::to_string(v) +
                                            " outside field GF(" + std::to_string(q) + ")");
            }
            r.push_back(v);
        }
        out.push_back(std::move(r));
    }
    return out;
}

nlohmann::json edges_to_json(const std::vector<PlanEdge>& edges) {
    nlohmann::json out = nlohmann::json::array();
    for (const PlanEdge& e : edges) {
        nlohmann::json vectors = nlohmann::json::array();
        for (const FpVector& v : e.vectors) {
            nlohmann::json entries = nlohmann::json::array();
            for (Index i = 0; i < v.rows(); ++i) entries.push_back(v(i).value());
            vectors.push_back(std::move(entries));
        }
        out.push_back({{"from", e.from}, {"to", e.to}, {"vectors", std::move(vectors)}});
    }
    return out;
}

}  // namespace

nlohmann::json scheme_to_json(const Scheme& s) {
    const RingParams& p = s.params();
    return {{"q", p.q.value()},
            {"n", p.n},
            {"alpha", p.alpha},
            {"m_size", p.m_size},
            {"generator", matrix_rows(s.generator())}};
}

Scheme scheme_from_json(const nlohmann::json& j) {
    for (const char* key : {"q", "n", "alpha", "m_size", "generator"}) {
        if (!j.contains(key)) {
            throw std::invalid_argument(std::string("scheme file missing key \"") + key + "\"");
        }
    }
    const FieldOrder q(j.at("q").get<std::uint32_t>());
    RingParams params(j.at("n").get<Index>(), j.at("alpha").get<Index>(),
                      j.at("m_size").get<Index>(), q);
    FpMatrix g = fp_matrix(q, rows_from_json(j.at("generator"), q.value()));
    return Scheme(params, std::move(g));
}

nlohmann::json plan_to_json(const ReconstructionPlan& plan) {
    return {{"kind", "reconstruct"},
            {"index", plan.user},
            {"edges", edges_to_json(plan.edges)},
            {"total", plan.total_bandwidth}};
}

nlohmann::json plan_to_json(const RepairPlan& plan) {
    return {{"kind", "repair"},
            {"index", plan.failed_node},
            {"edges", edges_to_json(plan.edges)},
            {"basis_change", matrix_rows(plan.basis_change)},
            {"total", plan.total_bandwidth}};
}

nlohmann::json matrix_to_json(const ConstMatrixRef& m) {
    return {{"q", mat_order(m)}, {"matrix", matrix_rows(m)}};
}

FpMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.contains("q") || !j.contains("matrix")) {
        throw std::invalid_argument("matrix file needs keys \"q\" and \"matrix\"");
    }
    const FieldOrder q(j.at("q").get<std::uint32_t>());
    return fp_matrix(q, rows_from_json(j.at("matrix"), q.value()));
}

std::vector<Event> events_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("event file must be a JSON array");
    std::vector<Event> events;
    for (const auto& entry : j) {
        if (!entry.contains("type") || !entry.contains("node")) {
            throw std::invalid_argument("event needs keys \"type\" and \"node\"");
        }
        const std::string type = entry.at("type").get<std::string>();
        const Index node = entry.at("node").get<Index>();
        if (type == "request") {
            events.push_back(Event::request(node));
        } else if (type == "fail") {
            events.push_back(Event::fail(node));
        } else if (type == "repair") {
            events.push_back(Event::repair(node));
        } else {
            throw std::invalid_argument("unknown event type \"" + type + "\"");
        }
    }
    return events;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace ordss
