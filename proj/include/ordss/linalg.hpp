#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "ordss/field.hpp"

namespace ordss {

using Index = Eigen::Index;
using FpMatrix = Eigen::Matrix<Fp, Eigen::Dynamic, Eigen::Dynamic>;
using FpVector = Eigen::Matrix<Fp, Eigen::Dynamic, 1>;
using FpRowVector = Eigen::Matrix<Fp, 1, Eigen::Dynamic>;

using ConstMatrixRef = Eigen::Ref<const FpMatrix>;
using ConstVectorRef = Eigen::Ref<const FpVector>;

// ---- constructors ----------------------------------------------------------

FpMatrix fp_zeros(FieldOrder q, Index rows, Index cols);
FpMatrix fp_identity(FieldOrder q, Index n);
FpMatrix fp_matrix(FieldOrder q, std::initializer_list<std::initializer_list<std::uint64_t>> rows);
FpMatrix fp_matrix(FieldOrder q, const std::vector<std::vector<std::uint64_t>>& rows);
FpVector fp_vector(FieldOrder q, std::initializer_list<std::uint64_t> entries);
FpRowVector fp_row(FieldOrder q, std::initializer_list<std::uint64_t> entries);

// Field order of a matrix, read off its entries. Throws when no entry carries
// an order (cannot happen for matrices built by the constructors above).
std::uint32_t mat_order(const ConstMatrixRef& m);

bool mat_equal(const ConstMatrixRef& a, const ConstMatrixRef& b);

// ---- elimination-based operations ------------------------------------------
//
// All elimination is deterministic: pivots are chosen leftmost column first,
// first nonzero row next, and every tie-break is lowest-index. Derived
// outputs (solutions, completions, plans) are therefore byte-stable.

Index mat_rank(const ConstMatrixRef& m);

// Coefficients c with a*c = b, or nullopt when some column of b is outside
// the column span of a. Free variables are fixed to zero.
std::optional<FpMatrix> mat_solve(const ConstMatrixRef& a, const ConstMatrixRef& b);

enum class Axis { Columns, Rows };

// `width` consecutive columns (or rows) starting at 1-based `start`, wrapping
// past the end to the beginning.
FpMatrix cyclic_window(const ConstMatrixRef& m, Index start, Index width, Axis axis);

// Smallest-index-first subset of pool columns whose union with `base` spans
// rank `target_rank`. Returns 1-based pool column indices; their count is
// target_rank - rank(base). Throws SpanError when the pool cannot reach the
// target.
std::vector<Index> complete_basis(const ConstMatrixRef& base, const ConstMatrixRef& pool,
                                  Index target_rank);

struct Decomposition {
    FpVector u_coeffs;
    FpVector w_coeffs;
};

// Coefficients expressing v = u_basis*u_coeffs + w_basis*w_coeffs. When v
// already lies in span(u_basis) and u_basis has independent columns, the
// w part comes back all zero. Throws SpanError when v is outside the joint
// span.
Decomposition decompose_over(const ConstVectorRef& v, const ConstMatrixRef& u_basis,
                             const ConstMatrixRef& w_basis);

// Growing column span with O(dim^2) insertion; the workhorse behind rank
// accumulation in the planners.
class IncrementalSpan {
  public:
    IncrementalSpan(FieldOrder q, Index dimension);

    // Adds v to the span; returns false (and leaves the span unchanged) when
    // v is already contained in it.
    bool try_insert(const ConstVectorRef& v);

    bool contains(const ConstVectorRef& v) const;

    Index rank() const { return static_cast<Index>(basis_.size()); }
    Index dimension() const { return dim_; }

  private:
    FpVector reduce(FpVector v) const;

    std::uint32_t q_;
    Index dim_;
    std::vector<FpVector> basis_;  // basis_[i] has a unit pivot at pivot_[i]
    std::vector<Index> pivot_;     // and zeros at all earlier pivots
};

}  // namespace ordss
