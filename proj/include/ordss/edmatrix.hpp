#pragma once

#include <cstdint>
#include <vector>

#include "ordss/linalg.hpp"

namespace ordss {

// Quotient/remainder chain of the Euclidean algorithm on (n_value, m0),
// n_value >= m0 >= 1. The chain runs down to the first exact division;
// the trailing zero remainder is not stored.
struct EuclidChain {
    std::uint64_t n_value = 0;
    std::uint64_t m0 = 0;
    std::vector<std::uint64_t> quotients;   // P0, P1, ..., last division exact
    std::vector<std::uint64_t> remainders;  // M1, M2, ..., strictly decreasing

    // Final divisor of the chain, i.e. gcd(n_value, m0).
    std::uint64_t gcd() const { return remainders.empty() ? m0 : remainders.back(); }
};

EuclidChain euclid_chain(std::uint64_t n_value, std::uint64_t m0);

// Binary matrix built from nested identity blocks along the Euclidean chain
// of (n_value, m0), together with that chain.
struct EdMatrix {
    FpMatrix matrix;  // m0 x n_value over GF(2)
    EuclidChain chain;
};

// The m0 x n_value identity-block matrix E(m0, n_value):
//   if m0 divides n_value:  [I ... I]                   (n_value/m0 copies)
//   else, n_value = p*m0+s: [I ... I | E(s, m0)^T]      (p copies, 0 < s < m0)
// Every window of m0 cyclically adjacent columns is linearly independent.
EdMatrix ed_matrix(Index m0, Index n_value);

struct WeaklyMdsReport {
    bool ok = false;
    Index failing_start = 0;  // 1-based start of the first dependent window; 0 when ok

    explicit operator bool() const { return ok; }
};

// Checks that arbitrary cyclically adjacent `rows` columns are linearly
// independent (for wide matrices; the transposed condition on rows for tall
// ones). Square matrices use the column form.
WeaklyMdsReport is_weakly_mds(const ConstMatrixRef& m);

}  // namespace ordss
