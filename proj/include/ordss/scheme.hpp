#pragma once

#include <optional>

#include "ordss/linalg.hpp"

namespace ordss {

// Parameters of a unidirectional ring storage system: n storage nodes of
// capacity alpha symbols each, holding original data of size m_size over
// GF(q). Nodes are numbered 1..n and node j sends only to node j-1 (mod n).
struct RingParams {
    Index n;         // storage node count, >= 1
    Index alpha;     // symbols stored per node, >= 1
    Index m_size;    // original data size M, >= 1, with n*alpha >= M
    FieldOrder q;    // field order

    RingParams(Index n, Index alpha, Index m_size, FieldOrder q);

    // Number of adjacent nodes a user has to draw on: ceil(m_size / alpha).
    Index k() const { return (m_size + alpha - 1) / alpha; }

    // Residual contribution of the farthest node: m_size - (k-1)*alpha,
    // always in 1..alpha.
    Index gamma() const { return m_size - (k() - 1) * alpha; }

    // Wraps a 1-based node index into 1..n.
    Index ring_node(Index i) const { return (i - 1 + 2 * n) % n + 1; }

    // Downstream neighbour in the ring direction (node j sends to it).
    Index next_downstream(Index j) const { return ring_node(j - 1); }
};

// A storage scheme: an m_size x n*alpha generator matrix, its columns
// assigned contiguously to nodes in ring order (node i owns columns
// (i-1)*alpha+1 .. i*alpha).
class Scheme {
  public:
    Scheme(RingParams params, FpMatrix generator);

    const RingParams& params() const { return params_; }
    const FpMatrix& generator() const { return generator_; }

    // Node generator matrix of 1-based node i (an m_size x alpha view).
    Eigen::Block<const FpMatrix, Eigen::Dynamic, Eigen::Dynamic, true> node_matrix(Index i) const;

    // Columns of `count` adjacent nodes starting at 1-based node `start`,
    // wrapping around the ring.
    FpMatrix adjacent_columns(Index start, Index count) const;

  private:
    RingParams params_;
    FpMatrix generator_;
};

// Minimum total number of symbols any user must receive to recover the
// original data: k*M - k*(k-1)*alpha/2.
Index reconstruct_bound(const RingParams& params);

// Minimum total number of symbols needed to rebuild a failed node: M.
Index repair_bound(const RingParams& params);

// GF(2) scheme generated by the identity-block matrix of (m_size, n*alpha).
Scheme build_ed_scheme(Index n, Index alpha, Index m_size);

// Scheme over GF(p), p the smallest prime >= n*alpha, generated by the
// m_size x n*alpha Vandermonde matrix on evaluation points 0..n*alpha-1.
// Any m_size columns of it are linearly independent.
Scheme build_mds_scheme(Index n, Index alpha, Index m_size);

struct OrdssReport {
    bool condition_i_ok = false;   // any k-1 adjacent nodes: columns independent
    bool condition_ii_ok = false;  // any k adjacent nodes: contain M independent columns
    std::optional<Index> failing_window;  // lowest failing start node, when any

    bool ok() const { return condition_i_ok && condition_ii_ok; }
};

// Checks the two adjacency rank conditions every optimal-bandwidth scheme
// must satisfy, over all n cyclic starting positions.
OrdssReport validate_ordss(const Scheme& s);

// The alpha symbols node i stores for data row vector x: x * G^(i).
FpRowVector node_symbols(const Scheme& s, const FpRowVector& x, Index i);

}  // namespace ordss
