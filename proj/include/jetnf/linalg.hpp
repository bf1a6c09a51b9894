#pragma once

#include <optional>
#include <vector>

#include "jetnf/scalar.hpp"

namespace jetnf {

/// Dense matrix of exact scalars, row-major. This is the workhorse behind
/// every kernel/image/Gram computation; pivoting is always "first nonzero",
/// which is canonical in exact arithmetic.
class ScalarMat {
public:
    ScalarMat() : rows_(0), cols_(0) {}
    ScalarMat(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * cols, Scalar()) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar &at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar &at(int i, int j) const {
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    static ScalarMat identity(int n);
    ScalarMat transpose() const;
    ScalarMat conj_transpose() const;
    ScalarMat operator*(const ScalarMat &o) const;
    std::vector<Scalar> mul_vec(const std::vector<Scalar> &v) const;
    void append_row(const std::vector<Scalar> &row);
    bool operator==(const ScalarMat &o) const;

    /// In-place reduced row echelon form. Returns the pivot columns in
    /// order; rank = pivot count. Fully canonical: pivots are normalized to
    /// 1 and cleared above and below. When pivot_col_limit >= 0, pivots are
    /// only chosen among the first pivot_col_limit columns (the rest ride
    /// along, which is how witness columns are threaded through).
    std::vector<int> rref(int pivot_col_limit = -1);

private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

/// Basis of { x : M x = 0 }, one generator per row. The free-column
/// parametrization is already deterministic; canonical = true re-reduces
/// it to literal RREF so generator lists can be compared directly.
std::vector<std::vector<Scalar>> nullspace(ScalarMat m, bool canonical = true);

/// One solution of M x = b, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(ScalarMat m, std::vector<Scalar> b);

/// Inverse of a square matrix; nullopt when singular.
std::optional<ScalarMat> invert(const ScalarMat &m);

/// Reduces v against RREF rows (pivot columns given); returns the residual.
/// v lies in the row space iff the residual is all zero.
std::vector<Scalar> reduce_against(const std::vector<std::vector<Scalar>> &rref_rows,
                                   const std::vector<int> &pivots,
                                   std::vector<Scalar> v);

/// Coefficients c with v = sum c_k rref_rows[k], valid when the residual
/// of reduce_against is zero: c_k is just v at the k-th pivot column.
std::vector<Scalar> coords_in_rref(const std::vector<std::vector<Scalar>> &rref_rows,
                                   const std::vector<int> &pivots,
                                   const std::vector<Scalar> &v);

} // namespace jetnf
