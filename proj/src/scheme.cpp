#include "ordss/scheme.hpp"

#include <string>

#include "ordss/edmatrix.hpp"

namespace ordss {

RingParams::RingParams(Index n_, Index alpha_, Index m_size_, FieldOrder q_)
    : n(n_), alpha(alpha_), m_size(m_size_), q(q_) {
    if (n < 1 || alpha < 1 || m_size < 1) {
        throw InfeasibleError("ring parameters must be positive");
    }
    if (n * alpha < m_size) {
        throw InfeasibleError("infeasible: n*alpha < M (" + std::to_string(n * alpha) + " < " +
                              std::to_string(m_size) + ")");
    }
    if (k() > n) {
        throw InfeasibleError("infeasible: reconstruction needs k = " + std::to_string(k()) +
                              " adjacent nodes but the ring has only " + std::to_string(n));
    }
}

Scheme::Scheme(RingParams params, FpMatrix generator)
    : params_(params), generator_(std::move(generator)) {
    if (generator_.rows() != params_.m_size || generator_.cols() != params_.n * params_.alpha) {
        throw DimensionError("scheme generator must be m_size x n*alpha");
    }
    if (mat_order(generator_) != params_.q.value()) {
        throw FieldMismatchError("scheme generator field differs from declared q");
    }
}

Eigen::Block<const FpMatrix, Eigen::Dynamic, Eigen::Dynamic, true> Scheme::node_matrix(
    Index i) const {
    if (i < 1 || i > params_.n) {
        throw DimensionError("node index " + std::to_string(i) + " outside 1.." +
                             std::to_string(params_.n));
    }
    return generator_.middleCols((i - 1) * params_.alpha, params_.alpha);
}

FpMatrix Scheme::adjacent_columns(Index start, Index count) const {
    if (count < 0 || count > params_.n) {
        throw DimensionError("adjacent node count outside 0..n");
    }
    FpMatrix out = fp_zeros(params_.q, params_.m_size, count * params_.alpha);
    for (Index j = 0; j < count; ++j) {
        out.middleCols(j * params_.alpha, params_.alpha) =
            node_matrix(params_.ring_node(start + j));
    }
    return out;
}

Index reconstruct_bound(const RingParams& params) {
    const Index k = params.k();
    return k * params.m_size - k * (k - 1) * params.alpha / 2;
}

Index repair_bound(const RingParams& params) { return params.m_size; }

Scheme build_ed_scheme(Index n, Index alpha, Index m_size) {
    RingParams params(n, alpha, m_size, FieldOrder(2));
    return Scheme(params, ed_matrix(m_size, n * alpha).matrix);
}

Scheme build_mds_scheme(Index n, Index alpha, Index m_size) {
    const Index cols = n * alpha;
    const FieldOrder q(smallest_prime_at_least(static_cast<std::uint32_t>(cols)));
    RingParams params(n, alpha, m_size, q);
    FpMatrix g = fp_zeros(q, m_size, cols);
    for (Index x = 0; x < cols; ++x) {
        Fp power(1, q);
        const Fp point(static_cast<std::uint64_t>(x), q);
        for (Index r = 0; r < m_size; ++r) {
            g(r, x) = power;
            power *= point;
        }
    }
    return Scheme(params, std::move(g));
}

OrdssReport validate_ordss(const Scheme& s) {
    const RingParams& p = s.params();
    const Index k = p.k();
    OrdssReport report;
    report.condition_i_ok = true;
    report.condition_ii_ok = true;
    for (Index start = 1; start <= p.n; ++start) {
        if (k >= 2 && report.condition_i_ok) {
            const FpMatrix cols = s.adjacent_columns(start, k - 1);
            if (mat_rank(cols) != (k - 1) * p.alpha) {
                report.condition_i_ok = false;
                if (!report.failing_window) report.failing_window = start;
            }
        }
        if (report.condition_ii_ok) {
            const FpMatrix cols = s.adjacent_columns(start, k);
            if (mat_rank(cols) != p.m_size) {
                report.condition_ii_ok = false;
                if (!report.failing_window) report.failing_window = start;
            }
        }
        if (!report.condition_i_ok && !report.condition_ii_ok) break;
    }
    return report;
}

FpRowVector node_symbols(const Scheme& s, const FpRowVector& x, Index i) {
    if (x.cols() != s.params().m_size) {
        throw DimensionError("data vector length " + std::to_string(x.cols()) +
                             " != m_size " + std::to_string(s.params().m_size));
    }
    return x * s.node_matrix(i);
}

}  // namespace ordss
