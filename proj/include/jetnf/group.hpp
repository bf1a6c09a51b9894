#pragma once

#include <string>

#include "jetnf/matrix_jet.hpp"

namespace jetnf {

/// The five supported transformation groups acting on m x n matrix jets:
///   Left        B = U A            (U invertible m x m)
///   Right       B = A V^{-1}       (V invertible n x n)
///   TwoSided    B = U A V^{-1}
///   Conjugacy   B = U A U^{-1}     (m = n)
///   Congruence  B = U A U^T        (m = n)
enum class GroupKind : unsigned char {
    Left,
    Right,
    TwoSided,
    Conjugacy,
    Congruence
};

std::string kind_name(GroupKind k);
GroupKind kind_from_name(const std::string &name);
bool kind_requires_square(GroupKind k);

/// Group element g = (U, V) with invertible constant terms. V is stored
/// for every kind so the action is uniformly U A V^{-1} and composition is
/// componentwise: Left keeps V = 1, Right keeps U = 1, Conjugacy keeps
/// V = U, and Congruence keeps V = (U^T)^{-1} (then A V^{-1} = A U^T).
struct GroupElementJet {
    GroupKind kind = GroupKind::TwoSided;
    MatrixJet u;
    MatrixJet v;

    /// Constant terms of both factors are the identity; such elements form
    /// the unipotent subgroup G^0, the image of exp.
    bool is_unipotent() const;
};

GroupElementJet identity_element(GroupKind kind, int m, int n, int num_vars,
                                 int trunc_order);
/// Element constructors; the constrained factor is derived. `cols` / `rows`
/// size the identity factor of Left / Right elements (the acted-on matrix
/// is m x n with U m x m and V n x n).
GroupElementJet left_element(const MatrixJet &u, int cols);
GroupElementJet right_element(const MatrixJet &v, int rows);
GroupElementJet two_sided_element(const MatrixJet &u, const MatrixJet &v);
GroupElementJet conjugacy_element(const MatrixJet &u);
GroupElementJet congruence_element(const MatrixJet &u);
/// Checks the kind constraint tying V to U. Used by certificate verification.
bool element_constraint_holds(const GroupElementJet &g);

/// Lie-algebra element: pair with zero constant terms obeying the kind's
/// linear constraint (Left: nu_r = 0; Right: nu_l = 0; Conjugacy:
/// nu_r = nu_l; Congruence: nu_r = -nu_l^T).
struct LieElementJet {
    GroupKind kind;
    MatrixJet nu_l;
    MatrixJet nu_r;
};

LieElementJet make_lie_element(GroupKind kind, const MatrixJet &nu_l,
                               const MatrixJet &nu_r);
bool lie_constraint_holds(GroupKind kind, const MatrixJet &nu_l,
                          const MatrixJet &nu_r);

/// Inverse of U through the truncation; requires det U_0 != 0. Computed by
/// inverting U_0 exactly and then fixing one homogeneous degree at a time.
MatrixJet invert_jet(const MatrixJet &u);

/// exp(lambda) = sum_{i<=N} lambda^i / i!; requires pi_0 lambda = 0.
MatrixJet exp_jet(const MatrixJet &lambda);
/// log(U) = sum (-1)^{i-1} u^i / i for U = 1 + u; requires U_0 = 1.
MatrixJet log_jet(const MatrixJet &u);

/// exp on a Lie pair, giving a group element of the same kind.
GroupElementJet exp_element(const LieElementJet &nu);

/// The group action (see GroupKind).
MatrixJet act(const GroupElementJet &g, const MatrixJet &a);
/// Linearization of the action: nu_l A - A nu_r.
MatrixJet lie_act(const LieElementJet &nu, const MatrixJet &a);
MatrixJet lie_act(const MatrixJet &nu_l, const MatrixJet &nu_r,
                  const MatrixJet &a);

/// g2 . (g1 . A) = compose(g2, g1) . A.
GroupElementJet compose(const GroupElementJet &g2, const GroupElementJet &g1);
GroupElementJet inverse_element(const GroupElementJet &g);

/// Orthogonal projection (for the pair inner product) of an unconstrained
/// pair onto the kind's Lie algebra, constant terms removed:
///   TwoSided    (1-pi_0) (nu_l, nu_r)
///   Left        (1-pi_0) (nu_l, 0)
///   Right       (1-pi_0) (0, nu_r)
///   Conjugacy   (1-pi_0) ((nu_l+nu_r)/2, (nu_l+nu_r)/2)
///   Congruence  (1-pi_0) ((nu_l-nu_r^T)/2, (nu_r-nu_l^T)/2)
LieElementJet delta_project(const MatrixJet &nu_l, const MatrixJet &nu_r,
                            GroupKind kind);

/// <nu, mu> = <nu_l, mu_l> + <nu_r, mu_r>.
Scalar pair_inner_product(const MatrixJet &al, const MatrixJet &ar,
                          const MatrixJet &bl, const MatrixJet &br);

} // namespace jetnf
