#include "ordss/planner.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace ordss {

namespace {

void require_ordss(const Scheme& s) {
    const OrdssReport report = validate_ordss(s);
    if (!report.ok()) {
        throw NotOrdssError("scheme fails the adjacency rank conditions (window " +
                            std::to_string(report.failing_window.value_or(0)) +
                            "); optimal bandwidth is unreachable");
    }
}

void require_node_index(const RingParams& p, Index i, const char* what) {
    if (i < 1 || i > p.n) {
        throw DimensionError(std::string(what) + " index " + std::to_string(i) + " outside 1.." +
                             std::to_string(p.n));
    }
}

}  // namespace

ReconstructionPlan plan_reconstruction(const Scheme& s, Index user) {
    const RingParams& p = s.params();
    require_node_index(p, user, "user");
    require_ordss(s);

    const Index k = p.k();
    ReconstructionPlan plan;
    plan.user = user;

    // Chain nodes from the user's own node outward: user, user+1, ...,
    // user+k-1 (wrapping). The farthest node completes the nearer nodes'
    // columns to full rank and contributes only the gamma completion
    // vectors; everything else is forwarded wholesale.
    const FpMatrix near_columns = s.adjacent_columns(user, k - 1);
    const Index far_node = p.ring_node(user + k - 1);
    const auto far_block = s.node_matrix(far_node);
    const std::vector<Index> picked = complete_basis(near_columns, far_block, p.m_size);

    std::vector<FpVector> payload;
    payload.reserve(p.m_size);
    for (Index idx : picked) payload.push_back(far_block.col(idx - 1));

    for (Index hop = k - 1; hop >= 1; --hop) {
        const Index sender = p.ring_node(user + hop);
        PlanEdge edge;
        edge.from = sender;
        edge.to = p.ring_node(user + hop - 1);
        edge.vectors = payload;
        plan.edges.push_back(std::move(edge));

        // The receiver appends its own alpha columns before sending on.
        const auto own = s.node_matrix(p.ring_node(user + hop - 1));
        for (Index j = 0; j < own.cols(); ++j) payload.push_back(own.col(j));
    }

    PlanEdge last;
    last.from = user;
    last.to = 0;
    last.vectors = std::move(payload);
    plan.edges.push_back(std::move(last));

    plan.total_bandwidth = 0;
    for (const PlanEdge& e : plan.edges) {
        plan.total_bandwidth += static_cast<Index>(e.vectors.size());
    }
    return plan;
}

RepairPlan plan_repair(const Scheme& s, Index failed) {
    const RingParams& p = s.params();
    require_node_index(p, failed, "failed node");
    const Index k = p.k();
    if (k > p.n - 1) {
        throw InfeasibleError("repair needs k = " + std::to_string(k) +
                              " helpers distinct from the failed node, but n-1 = " +
                              std::to_string(p.n - 1));
    }
    require_ordss(s);

    RepairPlan plan;
    plan.failed_node = failed;

    const FpMatrix target = s.node_matrix(failed);

    if (k == 1) {
        // The single helper spans everything; the substitute decodes the
        // data and recomputes its own store.
        const Index helper = p.ring_node(failed + 1);
        const auto own = s.node_matrix(helper);
        PlanEdge edge;
        edge.from = helper;
        edge.to = failed;
        for (Index idx : complete_basis(fp_zeros(p.q, p.m_size, 0), own, p.m_size)) {
            edge.vectors.push_back(own.col(idx - 1));
        }
        plan.total_bandwidth = static_cast<Index>(edge.vectors.size());
        plan.edges.push_back(std::move(edge));
        plan.basis_change = fp_identity(p.q, p.alpha);
        return plan;
    }

    // Helpers walk upstream from the failed node: h_1 = failed+1 is nearest,
    // h_k = failed+k farthest. U is the span of the k-1 nearest helpers'
    // columns, W the farthest helper's own columns.
    const FpMatrix u_basis = s.adjacent_columns(p.ring_node(failed + 1), k - 1);
    const Index far_node = p.ring_node(failed + k);
    const FpMatrix w_basis = s.node_matrix(far_node);

    // Split the target columns along U: the gamma columns whose images are
    // independent in the quotient by U stay as they are; each remaining
    // column is shifted by a combination of those gamma columns so that it
    // lands inside U. The column operations form the invertible basis
    // change A the substitute undoes at the end.
    IncrementalSpan quotient(p.q, p.m_size);
    for (Index j = 0; j < u_basis.cols(); ++j) quotient.try_insert(u_basis.col(j));
    std::vector<Index> quotient_cols;
    for (Index j = 0; j < p.alpha; ++j) {
        if (quotient.try_insert(target.col(j))) quotient_cols.push_back(j);
    }

    FpMatrix quotient_block = fp_zeros(p.q, p.m_size, static_cast<Index>(quotient_cols.size()));
    for (std::size_t t = 0; t < quotient_cols.size(); ++t) {
        quotient_block.col(static_cast<Index>(t)) = target.col(quotient_cols[t]);
    }

    FpMatrix basis_change = fp_identity(p.q, p.alpha);
    for (Index j = 0; j < p.alpha; ++j) {
        if (std::find(quotient_cols.begin(), quotient_cols.end(), j) != quotient_cols.end()) {
            continue;
        }
        const Decomposition d = decompose_over(target.col(j), u_basis, quotient_block);
        for (std::size_t t = 0; t < quotient_cols.size(); ++t) {
            basis_change(quotient_cols[t], j) = -d.w_coeffs(static_cast<Index>(t));
        }
    }
    const FpMatrix transformed = target * basis_change;

    // Per transformed column: the farthest helper's share plus each nearer
    // helper's share (segment of the U coefficients).
    FpMatrix far_share = fp_zeros(p.q, p.m_size, p.alpha);
    std::vector<FpMatrix> helper_share(static_cast<std::size_t>(k - 1),
                                       fp_zeros(p.q, p.m_size, p.alpha));
    for (Index j = 0; j < p.alpha; ++j) {
        const Decomposition d = decompose_over(transformed.col(j), u_basis, w_basis);
        far_share.col(j) = w_basis * d.w_coeffs;
        for (Index h = 0; h < k - 1; ++h) {
            const auto block = s.node_matrix(p.ring_node(failed + 1 + h));
            helper_share[static_cast<std::size_t>(h)].col(j) =
                block * d.u_coeffs.segment(h * p.alpha, p.alpha);
        }
    }

    // Farthest edge: only the columns with a nonzero quotient image need a
    // contribution from beyond U.
    PlanEdge far_edge;
    far_edge.from = far_node;
    far_edge.to = p.ring_node(failed + k - 1);
    for (Index j : quotient_cols) far_edge.vectors.push_back(far_share.col(j));
    plan.edges.push_back(std::move(far_edge));

    // Intermediate helpers accumulate partial sums of all alpha transformed
    // columns and forward exactly alpha vectors each.
    FpMatrix partial = far_share;
    for (Index h = k - 2; h >= 0; --h) {
        partial += helper_share[static_cast<std::size_t>(h)];
        PlanEdge edge;
        edge.from = p.ring_node(failed + 1 + h);
        edge.to = h == 0 ? failed : p.ring_node(failed + h);
        for (Index j = 0; j < p.alpha; ++j) edge.vectors.push_back(partial.col(j));
        plan.edges.push_back(std::move(edge));
    }

    plan.basis_change = std::move(basis_change);
    plan.total_bandwidth = 0;
    for (const PlanEdge& e : plan.edges) {
        plan.total_bandwidth += static_cast<Index>(e.vectors.size());
    }
    return plan;
}

ReconstructionPlan plan_greedy(const Scheme& s, Index user) {
    const RingParams& p = s.params();
    require_node_index(p, user, "user");
    if (mat_rank(s.generator()) != p.m_size) {
        throw SpanError("generator is rank deficient; no user can reconstruct");
    }

    ReconstructionPlan plan;
    plan.user = user;

    // Walk upstream accumulating innovative columns until full rank.
    IncrementalSpan span(p.q, p.m_size);
    std::vector<std::vector<FpVector>> innovative;  // per visited node
    for (Index j = 0; span.rank() < p.m_size; ++j) {
        const auto block = s.node_matrix(p.ring_node(user + j));
        innovative.emplace_back();
        for (Index c = 0; c < block.cols() && span.rank() < p.m_size; ++c) {
            if (span.try_insert(block.col(c))) innovative.back().push_back(block.col(c));
        }
    }

    std::vector<FpVector> payload;
    for (Index j = static_cast<Index>(innovative.size()) - 1; j >= 0; --j) {
        for (const FpVector& v : innovative[static_cast<std::size_t>(j)]) payload.push_back(v);
        PlanEdge edge;
        edge.from = p.ring_node(user + j);
        edge.to = j == 0 ? 0 : p.ring_node(user + j - 1);
        edge.vectors = payload;
        plan.edges.push_back(std::move(edge));
    }

    plan.total_bandwidth = 0;
    for (const PlanEdge& e : plan.edges) {
        plan.total_bandwidth += static_cast<Index>(e.vectors.size());
    }
    return plan;
}

FpRowVector decode_data(const ConstMatrixRef& vectors, const FpRowVector& symbols) {
    if (vectors.cols() != symbols.cols() || vectors.rows() != vectors.cols()) {
        throw DimensionError("decode_data needs M vectors of dimension M with their symbols");
    }
    if (mat_rank(vectors) != vectors.cols()) {
        throw SpanError("delivered vectors do not determine the data");
    }
    const auto x = mat_solve(vectors.transpose(), symbols.transpose());
    if (!x) throw SpanError("delivered vectors do not determine the data");
    return x->transpose();
}

FlowGraph build_flow_graph(const RingParams& params, const ReconstructionPlan& plan) {
    FlowGraph g;
    g.vertex_count = params.n + 2;
    g.source = 0;
    g.user = params.n + 1;
    for (Index j = 1; j <= params.n; ++j) {
        g.edges.push_back({g.source, j, params.alpha});
    }
    for (const PlanEdge& e : plan.edges) {
        const Index to = e.to == 0 ? g.user : e.to;
        g.edges.push_back({e.from, to, static_cast<std::int64_t>(e.vectors.size())});
    }
    return g;
}

std::int64_t flow_mincut(const FlowGraph& g, Index src, Index dst) {
    // Edmonds-Karp on an adjacency matrix of residual capacities.
    const Index n = g.vertex_count;
    std::vector<std::vector<std::int64_t>> residual(
        static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (const FlowGraph::Edge& e : g.edges) {
        residual[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.to)] += e.capacity;
    }

    std::int64_t flow = 0;
    while (true) {
        std::vector<Index> parent(static_cast<std::size_t>(n), -1);
        parent[static_cast<std::size_t>(src)] = src;
        std::deque<Index> queue{src};
        while (!queue.empty() && parent[static_cast<std::size_t>(dst)] < 0) {
            const Index u = queue.front();
            queue.pop_front();
            for (Index v = 0; v < n; ++v) {
                if (parent[static_cast<std::size_t>(v)] < 0 &&
                    residual[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > 0) {
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                }
            }
        }
        if (parent[static_cast<std::size_t>(dst)] < 0) break;

        std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
        for (Index v = dst; v != src; v = parent[static_cast<std::size_t>(v)]) {
            const Index u = parent[static_cast<std::size_t>(v)];
            bottleneck = std::min(
                bottleneck, residual[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
        }
        for (Index v = dst; v != src; v = parent[static_cast<std::size_t>(v)]) {
            const Index u = parent[static_cast<std::size_t>(v)];
            residual[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] -= bottleneck;
            residual[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] += bottleneck;
        }
        flow += bottleneck;
    }
    return flow;
}

}  // namespace ordss
