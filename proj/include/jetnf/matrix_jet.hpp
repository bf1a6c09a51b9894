#pragma once

#include <utility>
#include <vector>

#include "jetnf/series_jet.hpp"

namespace jetnf {

/// m x n matrix of truncated series sharing num_vars and trunc_order.
/// A = sum_{|I| <= N} A_I x^I; the entry view (SeriesJet grid) and the
/// coefficient view (constant matrix per multi-index) agree by construction.
class MatrixJet {
public:
    /// Trivial 1x1 zero jet; placeholder for default-constructed results.
    MatrixJet() : MatrixJet(1, 1, 1, 0) {}
    MatrixJet(int rows, int cols, int num_vars, int trunc_order);
    static MatrixJet identity(int n, int num_vars, int trunc_order);
    static MatrixJet zero(int rows, int cols, int num_vars, int trunc_order);

    int rows() const { return m_; }
    int cols() const { return n_; }
    int num_vars() const { return p_; }
    int trunc_order() const { return order_; }

    const SeriesJet &at(int i, int j) const;
    SeriesJet &at(int i, int j);
    void set(int i, int j, SeriesJet s);

    /// Constant m x n matrix A_I (row-major scalars).
    std::vector<Scalar> coeff_matrix(const MultiIndex &I) const;
    /// All multi-indices appearing in some entry, ascending graded-lex.
    std::vector<MultiIndex> support() const;

    bool is_zero() const;
    /// Smallest total degree with A_I != 0; nullopt for the zero jet
    /// (order > truncation, indistinguishable from infinity here).
    std::optional<int> order() const;
    /// Largest stored total degree (-1 when zero).
    int degree() const;

    MatrixJet operator-() const;
    MatrixJet operator+(const MatrixJet &o) const;
    MatrixJet operator-(const MatrixJet &o) const;
    /// Exact truncated product; requires cols == o.rows and matching p, N.
    MatrixJet operator*(const MatrixJet &o) const;
    MatrixJet scale(const Scalar &c) const;
    bool operator==(const MatrixJet &o) const;
    bool operator!=(const MatrixJet &o) const { return !(*this == o); }

    /// pi_j A, entrywise.
    MatrixJet project(int j) const;
    /// A^(j) = (pi_j - pi_{j-1}) A.
    MatrixJet homogeneous(int j) const;
    MatrixJet transpose() const;
    /// A* = conj(A^T), the star of the inner-product calculus.
    MatrixJet conj_transpose() const;
    MatrixJet conj() const;
    MatrixJet derivative(const MultiIndex &J) const;

private:
    void check_same_config(const MatrixJet &o) const;

    int m_, n_, p_, order_;
    std::vector<SeriesJet> e_; // row-major
};

/// <A,B> = sum_I trace(conj(B_I^T) A_I) I!. Conjugate-symmetric and
/// positive-definite: <A,A> is a positive rational unless A = 0.
Scalar inner_product(const MatrixJet &a, const MatrixJet &b);

/// B*(d/dx) P = sum_I conj(B_I^T) d^|I| P / dx^I, exact.
/// B is m x n, P is m x n'; the result is n x n' at P's truncation.
/// P must be an exact polynomial (a jet whose coefficients are not cut
/// off by its truncation); the projectors used by callers guarantee this.
MatrixJet apply_diff_op(const MatrixJet &b, const MatrixJet &p);

/// D_B P = (nu_l, nu_r) with nu_l = ((B*)^T(d/dx) P^T)^T and
/// nu_r = -B*(d/dx) P; the adjoint of nu -> nu_l B - B nu_r for the
/// factorial-weighted inner product.
std::pair<MatrixJet, MatrixJet> d_operator(const MatrixJet &b,
                                           const MatrixJet &p);

} // namespace jetnf
