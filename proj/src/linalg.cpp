#include "ordss/linalg.hpp"

#include <string>

namespace ordss {

FpMatrix fp_zeros(FieldOrder q, Index rows, Index cols) {
    return FpMatrix::Constant(rows, cols, Fp(0, q));
}

FpMatrix fp_identity(FieldOrder q, Index n) {
    FpMatrix m = fp_zeros(q, n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = Fp(1, q);
    return m;
}

FpMatrix fp_matrix(FieldOrder q, std::initializer_list<std::initializer_list<std::uint64_t>> rows) {
    std::vector<std::vector<std::uint64_t>> copy;
    copy.reserve(rows.size());
    for (const auto& r : rows) copy.emplace_back(r);
    return fp_matrix(q, copy);
}

FpMatrix fp_matrix(FieldOrder q, const std::vector<std::vector<std::uint64_t>>& rows) {
    const Index r = static_cast<Index>(rows.size());
    const Index c = r == 0 ? 0 : static_cast<Index>(rows.front().size());
    FpMatrix m(r, c);
    for (Index i = 0; i < r; ++i) {
        if (static_cast<Index>(rows[i].size()) != c) {
            throw DimensionError("ragged rows in matrix literal");
        }
        for (Index j = 0; j < c; ++j) m(i, j) = Fp(rows[i][j], q);
    }
    return m;
}

FpVector fp_vector(FieldOrder q, std::initializer_list<std::uint64_t> entries) {
    FpVector v(static_cast<Index>(entries.size()));
    Index i = 0;
    for (std::uint64_t e : entries) v(i++) = Fp(e, q);
    return v;
}

FpRowVector fp_row(FieldOrder q, std::initializer_list<std::uint64_t> entries) {
    FpRowVector v(static_cast<Index>(entries.size()));
    Index i = 0;
    for (std::uint64_t e : entries) v(i++) = Fp(e, q);
    return v;
}

std::uint32_t mat_order(const ConstMatrixRef& m) {
    for (Index j = 0; j < m.cols(); ++j) {
        for (Index i = 0; i < m.rows(); ++i) {
            if (m(i, j).order() != 0) return m(i, j).order();
        }
    }
    throw std::logic_error("matrix carries no field order");
}

bool mat_equal(const ConstMatrixRef& a, const ConstMatrixRef& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index j = 0; j < a.cols(); ++j) {
        for (Index i = 0; i < a.rows(); ++i) {
            if (a(i, j) != b(i, j)) return false;
        }
    }
    return true;
}

namespace {

// In-place reduced row echelon form. Pivot search is leftmost column first,
// first nonzero row next. Pivoting is restricted to the first `col_limit`
// columns; later columns are carried along (used for augmented systems).
std::vector<Index> rref_in_place(FpMatrix& m, Index col_limit) {
    std::vector<Index> pivot_cols;
    Index next_row = 0;
    for (Index col = 0; col < col_limit && next_row < m.rows(); ++col) {
        Index pivot_row = -1;
        for (Index r = next_row; r < m.rows(); ++r) {
            if (!m(r, col).is_zero()) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) continue;
        if (pivot_row != next_row) m.row(pivot_row).swap(m.row(next_row));
        const Fp pivot = m(next_row, col);
        if (!(pivot == Fp(1))) m.row(next_row) *= pivot.inverse();
        for (Index r = 0; r < m.rows(); ++r) {
            if (r == next_row) continue;
            const Fp factor = m(r, col);
            if (factor.is_zero()) continue;
            m.row(r) -= m.row(next_row) * factor;
        }
        pivot_cols.push_back(col);
        ++next_row;
    }
    return pivot_cols;
}

}  // namespace

Index mat_rank(const ConstMatrixRef& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    FpMatrix work = m;
    return static_cast<Index>(rref_in_place(work, work.cols()).size());
}

std::optional<FpMatrix> mat_solve(const ConstMatrixRef& a, const ConstMatrixRef& b) {
    if (a.rows() != b.rows()) {
        throw DimensionError("mat_solve: a has " + std::to_string(a.rows()) + " rows, b has " +
                             std::to_string(b.rows()));
    }
    const FieldOrder q(mat_order(b.cols() > 0 && a.cols() == 0 ? b : a));
    FpMatrix aug = fp_zeros(q, a.rows(), a.cols() + b.cols());
    aug.leftCols(a.cols()) = a;
    aug.rightCols(b.cols()) = b;

    const std::vector<Index> pivots = rref_in_place(aug, a.cols());

    // Rows below the pivot rows have an all-zero a-part; any nonzero b entry
    // there marks an inconsistent column.
    for (Index r = static_cast<Index>(pivots.size()); r < aug.rows(); ++r) {
        for (Index j = 0; j < b.cols(); ++j) {
            if (!aug(r, a.cols() + j).is_zero()) return std::nullopt;
        }
    }

    FpMatrix c = fp_zeros(q, a.cols(), b.cols());
    for (Index k = 0; k < static_cast<Index>(pivots.size()); ++k) {
        c.row(pivots[k]) = aug.block(k, a.cols(), 1, b.cols());
    }
    return c;
}

FpMatrix cyclic_window(const ConstMatrixRef& m, Index start, Index width, Axis axis) {
    const Index len = axis == Axis::Columns ? m.cols() : m.rows();
    if (width < 1 || width > len) {
        throw DimensionError("cyclic_window: width " + std::to_string(width) +
                             " exceeds axis length " + std::to_string(len));
    }
    if (start < 1 || start > len) {
        throw DimensionError("cyclic_window: start " + std::to_string(start) +
                             " outside 1.." + std::to_string(len));
    }
    if (axis == Axis::Columns) {
        FpMatrix out(m.rows(), width);
        for (Index j = 0; j < width; ++j) out.col(j) = m.col((start - 1 + j) % len);
        return out;
    }
    FpMatrix out(width, m.cols());
    for (Index i = 0; i < width; ++i) out.row(i) = m.row((start - 1 + i) % len);
    return out;
}

std::vector<Index> complete_basis(const ConstMatrixRef& base, const ConstMatrixRef& pool,
                                  Index target_rank) {
    if (base.cols() > 0 && pool.rows() != base.rows()) {
        throw DimensionError("complete_basis: base and pool dimensions differ");
    }
    IncrementalSpan span(FieldOrder(mat_order(base.cols() > 0 ? base : pool)), pool.rows());
    for (Index j = 0; j < base.cols(); ++j) {
        if (!span.try_insert(base.col(j))) {
            throw std::invalid_argument("complete_basis: base columns are dependent");
        }
    }
    std::vector<Index> picked;
    for (Index j = 0; j < pool.cols() && span.rank() < target_rank; ++j) {
        if (span.try_insert(pool.col(j))) picked.push_back(j + 1);
    }
    if (span.rank() < target_rank) {
        throw SpanError("complete_basis: pool reaches rank " + std::to_string(span.rank()) +
                        " < target " + std::to_string(target_rank));
    }
    return picked;
}

Decomposition decompose_over(const ConstVectorRef& v, const ConstMatrixRef& u_basis,
                             const ConstMatrixRef& w_basis) {
    if (u_basis.cols() > 0 && u_basis.rows() != v.rows()) {
        throw DimensionError("decompose_over: u_basis dimension mismatch");
    }
    if (w_basis.cols() > 0 && w_basis.rows() != v.rows()) {
        throw DimensionError("decompose_over: w_basis dimension mismatch");
    }
    const FieldOrder q(mat_order(v));
    FpMatrix joint = fp_zeros(q, v.rows(), u_basis.cols() + w_basis.cols());
    if (u_basis.cols() > 0) joint.leftCols(u_basis.cols()) = u_basis;
    if (w_basis.cols() > 0) joint.rightCols(w_basis.cols()) = w_basis;
    const auto coeffs = mat_solve(joint, v);
    if (!coeffs) {
        throw SpanError("decompose_over: vector outside span(u_basis) + span(w_basis)");
    }
    Decomposition d;
    d.u_coeffs = coeffs->topRows(u_basis.cols());
    d.w_coeffs = coeffs->bottomRows(w_basis.cols());
    return d;
}

IncrementalSpan::IncrementalSpan(FieldOrder q, Index dimension) : q_(q.value()), dim_(dimension) {}

FpVector IncrementalSpan::reduce(FpVector v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Fp factor = v(pivot_[i]);
        if (factor.is_zero()) continue;
        v -= basis_[i] * factor;
    }
    return v;
}

bool IncrementalSpan::try_insert(const ConstVectorRef& v) {
    if (v.rows() != dim_) throw DimensionError("IncrementalSpan: wrong vector dimension");
    FpVector r = reduce(v);
    Index p = -1;
    for (Index i = 0; i < dim_; ++i) {
        if (!r(i).is_zero()) {
            p = i;
            break;
        }
    }
    if (p < 0) return false;
    if (!(r(p) == Fp(1))) r *= r(p).inverse();
    basis_.push_back(std::move(r));
    pivot_.push_back(p);
    return true;
}

bool IncrementalSpan::contains(const ConstVectorRef& v) const {
    if (v.rows() != dim_) throw DimensionError("IncrementalSpan: wrong vector dimension");
    FpVector r = reduce(v);
    for (Index i = 0; i < dim_; ++i) {
        if (!r(i).is_zero()) return false;
    }
    return true;
}

}  // namespace ordss
