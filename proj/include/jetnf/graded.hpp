#pragma once

#include <functional>
#include <string>

#include "jetnf/group.hpp"
#include "jetnf/linalg.hpp"

namespace jetnf {

/// Default cap on the Lie-basis column count; override per call or through
/// the JETNORM_MAX_COLUMNS environment variable in the CLI.
inline constexpr long kDefaultMaxColumns = 20000;

/// Ordered basis of the space of m x n polynomial matrices with total
/// degrees in [d_lo, d_hi]. Elements are monomial-times-matrix-unit,
/// ordered by (degree, graded-lex monomial, row-major position).
struct MatrixSpaceBasis {
    int m = 0, n = 0, p = 0;
    int d_lo = 0, d_hi = 0;
    std::vector<MultiIndex> monos; // all monomials in range, ascending

    MatrixSpaceBasis() = default;
    MatrixSpaceBasis(int m_, int n_, int p_, int d_lo_, int d_hi_);

    long dim() const { return static_cast<long>(monos.size()) * m * n; }
    /// Index of (mono #k, row, col) in the coordinate vector.
    long index_of(long mono_idx, int row, int col) const;
    /// Inverse of index_of.
    void element_at(long idx, long &mono_idx, int &row, int &col) const;
    /// Inner-product weight I! of basis element idx.
    Scalar weight(long idx) const;
    std::string label(long idx, const std::vector<std::string> &vars) const;

    std::vector<Scalar> coords_of(const MatrixJet &a) const;
    MatrixJet jet_of(const std::vector<Scalar> &coords, int trunc_order) const;
};

/// Ordered basis of the degree-1..d_hi jets of Lie(G) for a kind. For the
/// constrained kinds the elements are the constrained combinations, e.g.
/// (E_ab x^I, E_ab x^I) for Conjugacy, so every element satisfies the
/// constraint exactly. Order: degree, then monomial, then the nu_l block
/// before the nu_r block, row-major within a block.
struct LieBasis {
    GroupKind kind = GroupKind::TwoSided;
    int m = 0, n = 0, p = 0;
    int d_hi = 0;

    struct Elem {
        MultiIndex mono;
        int row, col;
        bool left_block; // for TwoSided ordering; constrained kinds use
                         // the left component slot only
        Elem(MultiIndex mono_, int row_, int col_, bool left_)
            : mono(std::move(mono_)), row(row_), col(col_),
              left_block(left_) {}
    };
    std::vector<Elem> elems;

    LieBasis() = default;
    LieBasis(GroupKind kind_, int m_, int n_, int p_, int d_hi_,
             long max_columns = kDefaultMaxColumns);

    long dim() const { return static_cast<long>(elems.size()); }
    /// The pair (nu_l, nu_r) of basis element k.
    LieElementJet element(long k, int trunc_order) const;
    LieElementJet combine(const std::vector<Scalar> &coords,
                          int trunc_order) const;
    /// Diagonal Gram entry <e_k, e_k> of the pair inner product (the basis
    /// is orthogonal: distinct monomial/unit slots never overlap).
    Scalar weight(long k) const;
    std::string label(long k, const std::vector<std::string> &vars) const;
};

/// Exact subspace of a graded coordinate space, generators in canonical
/// reduced row echelon form (equal subspaces produce equal generator lists).
struct GradedSubspace {
    long ambient_dim = 0;
    std::vector<std::vector<Scalar>> gens; // RREF rows
    std::vector<int> pivots;

    long dim() const { return static_cast<long>(gens.size()); }
    bool contains(const std::vector<Scalar> &v) const;
};

GradedSubspace make_subspace(long ambient_dim,
                             const std::vector<std::vector<Scalar>> &raw_gens);

/// Coordinate matrix of nu -> pi_j (nu_l A' - A' nu_r), A' = pi_{j-1} A,
/// on the Lie basis of degrees 1..j; codomain is the matrix space of
/// degrees 0..j.
struct LinearOperatorMatrix {
    LieBasis domain;
    MatrixSpaceBasis codomain;
    ScalarMat columns; // codomain.dim() rows x domain.dim() cols
};

LinearOperatorMatrix assemble_action(const MatrixJet &a, GroupKind kind,
                                     int j,
                                     long max_columns = kDefaultMaxColumns);

/// Null space of the operator, as a subspace of the Lie coordinate space.
GradedSubspace kernel(const LinearOperatorMatrix &op);

/// V^(j)(A) = { pi_j(nu A) : nu in Lie(G), pi_{j-1}(nu A) = 0 }, a subspace
/// of the homogeneous degree-j matrix space, with one preimage witness per
/// generator (a Lie coordinate vector mapping onto the generator).
struct VSpace {
    int j = 0;
    MatrixSpaceBasis ambient; // homogeneous degree j
    LieBasis domain;          // Lie basis, degrees 1..j
    GradedSubspace space;
    std::vector<std::vector<Scalar>> witnesses; // one per generator
    /// Kernel of pi_{j-1} S'_A(0) on the degree-<=j domain (RREF rows).
    std::vector<std::vector<Scalar>> kernel_gens;
    ScalarMat high_rows; // degree-j block of the operator
};

VSpace v_space(const MatrixJet &a, GroupKind kind, int j,
               long max_columns = kDefaultMaxColumns);

/// Orthogonal complement for the factorial-weighted inner product on the
/// ambient homogeneous space. dim V + dim W = dim ambient.
GradedSubspace w_complement(const MatrixSpaceBasis &ambient,
                            const GradedSubspace &v);

/// Unique splitting h = v + w with v in V and w orthogonal to V, solved
/// through the (positive-definite) Gram system of V's generators.
/// Returns coordinates in the ambient basis.
struct Decomposition {
    std::vector<Scalar> v, w;
    std::vector<Scalar> v_in_gens; // coefficients of v over V's generators
};
Decomposition decompose(const MatrixSpaceBasis &ambient,
                        const std::vector<Scalar> &h, const GradedSubspace &v);

/// Lie element nu with pi_{j-1}(nu A) = 0 and degree-j part of nu A equal
/// to v; of all such, the one of minimum pair-inner-product norm.
/// Throws invalid_input when v is not in V^(j).
LieElementJet preimage_nu(const std::vector<Scalar> &v_coords,
                          const VSpace &vs, int trunc_order);

/// Debug dump (ordered basis labels + exact entries) for --explain.
std::string dump_subspace(const MatrixSpaceBasis &ambient,
                          const GradedSubspace &s,
                          const std::vector<std::string> &vars,
                          const std::string &name);

} // namespace jetnf
