#include "ordss/edmatrix.hpp"

#include <string>

namespace ordss {

EuclidChain euclid_chain(std::uint64_t n_value, std::uint64_t m0) {
    if (m0 == 0 || n_value == 0) {
        throw std::invalid_argument("euclid_chain: arguments must be positive");
    }
    if (n_value < m0) {
        throw std::invalid_argument("euclid_chain: need n_value >= m0, got (" +
                                    std::to_string(n_value) + ", " + std::to_string(m0) + ")");
    }
    EuclidChain chain;
    chain.n_value = n_value;
    chain.m0 = m0;
    std::uint64_t a = n_value, b = m0;
    while (true) {
        chain.quotients.push_back(a / b);
        const std::uint64_t r = a % b;
        if (r == 0) break;
        chain.remainders.push_back(r);
        a = b;
        b = r;
    }
    return chain;
}

namespace {

const FieldOrder kGf2(2);

FpMatrix ed_block(Index m, Index n) {
    const Index p = n / m;
    const Index s = n % m;
    FpMatrix out = fp_zeros(kGf2, m, n);
    for (Index copy = 0; copy < p; ++copy) {
        out.block(0, copy * m, m, m) = fp_identity(kGf2, m);
    }
    if (s != 0) {
        out.rightCols(s) = ed_block(s, m).transpose();
    }
    return out;
}

}  // namespace

EdMatrix ed_matrix(Index m0, Index n_value) {
    EdMatrix result;
    result.chain = euclid_chain(static_cast<std::uint64_t>(n_value),
                                static_cast<std::uint64_t>(m0));
    result.matrix = ed_block(m0, n_value);
    return result;
}

WeaklyMdsReport is_weakly_mds(const ConstMatrixRef& m) {
    WeaklyMdsReport report;
    const bool wide = m.rows() <= m.cols();
    const Index width = wide ? m.rows() : m.cols();
    const Index starts = wide ? m.cols() : m.rows();
    const Axis axis = wide ? Axis::Columns : Axis::Rows;
    for (Index start = 1; start <= starts; ++start) {
        if (mat_rank(cyclic_window(m, start, width, axis)) != width) {
            report.failing_start = start;
            return report;
        }
    }
    report.ok = true;
    return report;
}

}  // namespace ordss
