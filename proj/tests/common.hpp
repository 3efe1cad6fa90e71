#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "ordss/linalg.hpp"

namespace ordss::testing {

// Independent rank oracle: enumerate the whole column span by brute force
// and take log_q of its size. Only for q^cols small enough to walk.
inline Index oracle_rank(const FpMatrix& m) {
    const std::uint32_t q = mat_order(m);
    std::set<std::vector<std::uint32_t>> span;
    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(m.cols()), 0);
    while (true) {
        FpVector combo = fp_zeros(FieldOrder(q), m.rows(), 1).col(0);
        for (Index j = 0; j < m.cols(); ++j) {
            combo += m.col(j) * Fp(coeffs[static_cast<std::size_t>(j)], FieldOrder(q));
        }
        std::vector<std::uint32_t> key;
        for (Index i = 0; i < combo.rows(); ++i) key.push_back(combo(i).value());
        span.insert(std::move(key));

        std::size_t digit = 0;
        while (digit < coeffs.size() && ++coeffs[digit] == q) coeffs[digit++] = 0;
        if (digit == coeffs.size()) break;
    }
    Index rank = 0;
    std::size_t size = span.size();
    while (size > 1) {
        size /= q;
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<std::uint32_t>> column_multiset(const FpMatrix& m) {
    std::vector<std::vector<std::uint32_t>> cols;
    for (Index j = 0; j < m.cols(); ++j) {
        std::vector<std::uint32_t> col;
        for (Index i = 0; i < m.rows(); ++i) col.push_back(m(i, j).value());
        cols.push_back(std::move(col));
    }
    std::sort(cols.begin(), cols.end());
    return cols;
}

// The 5x8 identity-block matrix of (5, 8), frozen for golden comparisons.
inline FpMatrix golden_5x8() {
    return fp_matrix(FieldOrder(2), {{1, 0, 0, 0, 0, 1, 0, 0},
                                     {0, 1, 0, 0, 0, 0, 1, 0},
                                     {0, 0, 1, 0, 0, 0, 0, 1},
                                     {0, 0, 0, 1, 0, 1, 0, 1},
                                     {0, 0, 0, 0, 1, 0, 1, 1}});
}

// Unit column e_i (1-based) in GF(q)^dim.
inline FpVector unit(FieldOrder q, Index dim, Index i) {
    FpVector v = fp_zeros(q, dim, 1).col(0);
    v(i - 1) = Fp(1, q);
    return v;
}

inline FpMatrix from_columns(FieldOrder q, const std::vector<FpVector>& cols) {
    FpMatrix m = fp_zeros(q, cols.empty() ? 0 : cols.front().rows(),
                          static_cast<Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Index>(j)) = cols[j];
    return m;
}

}  // namespace ordss::testing
