#pragma once

#include <cstdint>
#include <vector>

#include "ordss/scheme.hpp"

namespace ordss {

// One hop of a plan. Transmitted vectors are length-M coefficient columns;
// the symbol actually sent for data x is the inner product x * vector.
struct PlanEdge {
    Index from = 0;  // sending storage node, 1-based
    Index to = 0;    // receiving storage node, 1-based; 0 means the user
    std::vector<FpVector> vectors;
};

// Hop-by-hop download plan for one user, edges ordered farthest node first.
// Payload sizes shrink by alpha per hop toward the user, whose own node
// delivers exactly M independent vectors.
struct ReconstructionPlan {
    Index user = 0;
    std::vector<PlanEdge> edges;
    Index total_bandwidth = 0;
};

// Hop-by-hop plan rebuilding a failed node's exact symbols. The farthest of
// the k helpers contributes gamma vectors, each nearer helper forwards alpha
// partial sums, and the substitute node applies basis_change^-1 to the alpha
// symbols it receives (for k = 1 it decodes the data outright and recomputes
// its store).
struct RepairPlan {
    Index failed_node = 0;
    std::vector<PlanEdge> edges;
    FpMatrix basis_change;  // alpha x alpha, invertible
    Index total_bandwidth = 0;
};

// Optimal-bandwidth reconstruction for `user`: the farthest of the k chain
// nodes completes the nearer nodes' columns to full rank and every nearer
// node forwards all it received plus its own columns. Total bandwidth equals
// reconstruct_bound exactly. Throws NotOrdssError when the scheme fails the
// adjacency rank conditions.
ReconstructionPlan plan_reconstruction(const Scheme& s, Index user);

// Exact repair of `failed` with total bandwidth M, using the k upstream
// helpers. Requires k <= n-1 so the helpers exclude the failed node.
RepairPlan plan_repair(const Scheme& s, Index failed);

// Generic planner for any full-row-rank scheme: walk upstream from the
// user's node, each node forwarding what it received plus only its columns
// that raise the accumulated rank. Never beats reconstruct_bound; matches it
// exactly on schemes passing validate_ordss.
ReconstructionPlan plan_greedy(const Scheme& s, Index user);

// Recovers the data row vector from M delivered vectors (as matrix columns)
// and their symbols. Throws SpanError when the vectors do not span.
FpRowVector decode_data(const ConstMatrixRef& vectors, const FpRowVector& symbols);

// Capacitated directed graph for cut-set analysis of a plan: vertex 0 is the
// source S, vertices 1..n the storage nodes, vertex n+1 the user.
struct FlowGraph {
    struct Edge {
        Index from = 0;
        Index to = 0;
        std::int64_t capacity = 0;
    };

    Index vertex_count = 0;
    Index source = 0;
    Index user = 0;
    std::vector<Edge> edges;
};

// Information flow graph of a reconstruction plan: S feeds every storage
// node with capacity alpha; chain edges carry the plan's payload sizes.
FlowGraph build_flow_graph(const RingParams& params, const ReconstructionPlan& plan);

// Max-flow (= min-cut capacity) from src to dst by BFS augmenting paths.
// Disconnected endpoints yield 0.
std::int64_t flow_mincut(const FlowGraph& g, Index src, Index dst);

}  // namespace ordss
