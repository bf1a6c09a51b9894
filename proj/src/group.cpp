#include "jetnf/group.hpp"

#include "jetnf/linalg.hpp"

namespace jetnf {

std::string kind_name(GroupKind k) {
    switch (k) {
    case GroupKind::Left: return "left";
    case GroupKind::Right: return "right";
    case GroupKind::TwoSided: return "two-sided";
    case GroupKind::Conjugacy: return "conjugacy";
    case GroupKind::Congruence: return "congruence";
    }
    return "?";
}

GroupKind kind_from_name(const std::string &name) {
    if (name == "left") return GroupKind::Left;
    if (name == "right") return GroupKind::Right;
    if (name == "two-sided" || name == "twosided") return GroupKind::TwoSided;
    if (name == "conjugacy") return GroupKind::Conjugacy;
    if (name == "congruence") return GroupKind::Congruence;
    throw invalid_input("unknown group kind: " + name);
}

bool kind_requires_square(GroupKind k) {
    return k == GroupKind::Conjugacy || k == GroupKind::Congruence;
}

namespace {

ScalarMat constant_part(const MatrixJet &a) {
    ScalarMat r(a.rows(), a.cols());
    MultiIndex zero(a.num_vars());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.at(i, j).coeff(zero);
    return r;
}

bool constant_is_identity(const MatrixJet &a) {
    if (a.rows() != a.cols())
        return false;
    MultiIndex zero(a.num_vars());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Scalar want = (i == j) ? Scalar(1) : Scalar();
            if (a.at(i, j).coeff(zero) != want)
                return false;
        }
    return true;
}

} // namespace

bool GroupElementJet::is_unipotent() const {
    return constant_is_identity(u) && constant_is_identity(v);
}

GroupElementJet identity_element(GroupKind kind, int m, int n, int num_vars,
                                 int trunc_order) {
    if (kind_requires_square(kind) && m != n)
        throw invalid_input(kind_name(kind) + " needs square matrices");
    return {kind, MatrixJet::identity(m, num_vars, trunc_order),
            MatrixJet::identity(n, num_vars, trunc_order)};
}

GroupElementJet left_element(const MatrixJet &u, int cols) {
    return {GroupKind::Left, u,
            MatrixJet::identity(cols, u.num_vars(), u.trunc_order())};
}

GroupElementJet right_element(const MatrixJet &v, int rows) {
    return {GroupKind::Right,
            MatrixJet::identity(rows, v.num_vars(), v.trunc_order()), v};
}

GroupElementJet two_sided_element(const MatrixJet &u, const MatrixJet &v) {
    return {GroupKind::TwoSided, u, v};
}

GroupElementJet conjugacy_element(const MatrixJet &u) {
    return {GroupKind::Conjugacy, u, u};
}

GroupElementJet congruence_element(const MatrixJet &u) {
    return {GroupKind::Congruence, u, invert_jet(u.transpose())};
}

bool element_constraint_holds(const GroupElementJet &g) {
    switch (g.kind) {
    case GroupKind::Left:
        return g.v == MatrixJet::identity(g.v.rows(), g.v.num_vars(),
                                          g.v.trunc_order());
    case GroupKind::Right:
        return g.u == MatrixJet::identity(g.u.rows(), g.u.num_vars(),
                                          g.u.trunc_order());
    case GroupKind::TwoSided:
        return true;
    case GroupKind::Conjugacy:
        return g.v == g.u;
    case GroupKind::Congruence:
        return g.v * g.u.transpose() ==
               MatrixJet::identity(g.u.rows(), g.u.num_vars(),
                                   g.u.trunc_order());
    }
    return false;
}

bool lie_constraint_holds(GroupKind kind, const MatrixJet &nu_l,
                          const MatrixJet &nu_r) {
    if (nu_l.order().value_or(1) < 1 || nu_r.order().value_or(1) < 1)
        return false;
    switch (kind) {
    case GroupKind::Left: return nu_r.is_zero();
    case GroupKind::Right: return nu_l.is_zero();
    case GroupKind::TwoSided: return true;
    case GroupKind::Conjugacy: return nu_r == nu_l;
    case GroupKind::Congruence: return nu_r == -nu_l.transpose();
    }
    return false;
}

LieElementJet make_lie_element(GroupKind kind, const MatrixJet &nu_l,
                               const MatrixJet &nu_r) {
    if (!lie_constraint_holds(kind, nu_l, nu_r))
        throw invalid_input("pair violates the Lie constraint for kind " +
                            kind_name(kind));
    return {kind, nu_l, nu_r};
}

MatrixJet invert_jet(const MatrixJet &u) {
    if (u.rows() != u.cols())
        throw invalid_input("only square jets can be inverted");
    auto inv0 = invert(constant_part(u));
    if (!inv0)
        throw invalid_input("singular constant term, jet not invertible");
    int n = u.rows(), p = u.num_vars(), N = u.trunc_order();
    MatrixJet w0(n, n, p, N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!inv0->at(i, j).is_zero())
                w0.at(i, j) =
                    SeriesJet::constant(p, N, inv0->at(i, j));
    // U (W + dW) = 1: peel the error degree by degree; the degree-d error
    // is killed by dW_d = -W_0 * err_d without touching lower degrees.
    MatrixJet w = w0;
    MatrixJet id = MatrixJet::identity(n, p, N);
    for (int d = 1; d <= N; ++d) {
        MatrixJet err = (u * w - id).homogeneous(d);
        if (err.is_zero())
            continue;
        w = w - w0 * err;
    }
    return w;
}

MatrixJet exp_jet(const MatrixJet &lambda) {
    if (lambda.rows() != lambda.cols())
        throw invalid_input("exp needs a square jet");
    if (lambda.order().value_or(1) < 1)
        throw invalid_input("exp needs a zero constant term");
    int N = lambda.trunc_order();
    MatrixJet acc = MatrixJet::identity(lambda.rows(), lambda.num_vars(), N);
    MatrixJet sum = acc;
    mpq_class inv_fact = 1;
    for (int i = 1; i <= N; ++i) {
        acc = acc * lambda;
        if (acc.is_zero())
            break;
        inv_fact /= i;
        sum = sum + acc.scale(Scalar(inv_fact));
    }
    return sum;
}

MatrixJet log_jet(const MatrixJet &u) {
    if (u.rows() != u.cols())
        throw invalid_input("log needs a square jet");
    if (!constant_is_identity(u))
        throw invalid_input("log needs an identity constant term");
    int N = u.trunc_order();
    MatrixJet x =
        u - MatrixJet::identity(u.rows(), u.num_vars(), N); // order >= 1
    MatrixJet acc = x;
    MatrixJet sum = x;
    for (int i = 2; i <= N; ++i) {
        acc = acc * x;
        if (acc.is_zero())
            break;
        mpq_class c(i % 2 == 0 ? -1 : 1, i);
        c.canonicalize();
        sum = sum + acc.scale(Scalar(c));
    }
    return sum;
}

GroupElementJet exp_element(const LieElementJet &nu) {
    return {nu.kind, exp_jet(nu.nu_l), exp_jet(nu.nu_r)};
}

MatrixJet act(const GroupElementJet &g, const MatrixJet &a) {
    if (g.u.rows() != a.rows() || g.v.rows() != a.cols())
        throw dimension_error("group element does not fit the matrix shape");
    switch (g.kind) {
    case GroupKind::Left:
        return g.u * a;
    case GroupKind::Right:
        return a * invert_jet(g.v);
    case GroupKind::TwoSided:
        return g.u * a * invert_jet(g.v);
    case GroupKind::Conjugacy:
        return g.u * a * invert_jet(g.u);
    case GroupKind::Congruence:
        // V = (U^T)^{-1}, so A V^{-1} = A U^T without an inversion.
        return g.u * a * g.u.transpose();
    }
    throw invalid_input("unknown group kind");
}

MatrixJet lie_act(const MatrixJet &nu_l, const MatrixJet &nu_r,
                  const MatrixJet &a) {
    if (nu_l.rows() != a.rows() || nu_r.rows() != a.cols())
        throw dimension_error("lie pair does not fit the matrix shape");
    return nu_l * a - a * nu_r;
}

MatrixJet lie_act(const LieElementJet &nu, const MatrixJet &a) {
    return lie_act(nu.nu_l, nu.nu_r, a);
}

GroupElementJet compose(const GroupElementJet &g2, const GroupElementJet &g1) {
    if (g2.kind != g1.kind)
        throw invalid_input("cannot compose elements of different kinds");
    return {g2.kind, g2.u * g1.u, g2.v * g1.v};
}

GroupElementJet inverse_element(const GroupElementJet &g) {
    return {g.kind, invert_jet(g.u), invert_jet(g.v)};
}

LieElementJet delta_project(const MatrixJet &nu_l, const MatrixJet &nu_r,
                            GroupKind kind) {
    if (nu_l.rows() != nu_l.cols() || nu_r.rows() != nu_r.cols())
        throw dimension_error("delta projector needs square pair components");
    if (kind_requires_square(kind) && nu_l.rows() != nu_r.rows())
        throw dimension_error("pair blocks must match for " + kind_name(kind));
    int N = nu_l.trunc_order();
    auto drop0 = [N](const MatrixJet &m) { return m - m.project(0); };
    Scalar half = Scalar::rational(1, 2);
    switch (kind) {
    case GroupKind::Left:
        return {kind, drop0(nu_l),
                MatrixJet::zero(nu_r.rows(), nu_r.cols(), nu_r.num_vars(), N)};
    case GroupKind::Right:
        return {kind,
                MatrixJet::zero(nu_l.rows(), nu_l.cols(), nu_l.num_vars(), N),
                drop0(nu_r)};
    case GroupKind::TwoSided:
        return {kind, drop0(nu_l), drop0(nu_r)};
    case GroupKind::Conjugacy: {
        MatrixJet avg = (nu_l + nu_r).scale(half);
        MatrixJet res = drop0(avg);
        return {kind, res, res};
    }
    case GroupKind::Congruence: {
        MatrixJet l = drop0((nu_l - nu_r.transpose()).scale(half));
        return {kind, l, -l.transpose()};
    }
    }
    throw invalid_input("unknown group kind");
}

Scalar pair_inner_product(const MatrixJet &al, const MatrixJet &ar,
                          const MatrixJet &bl, const MatrixJet &br) {
    return inner_product(al, bl) + inner_product(ar, br);
}

} // namespace jetnf
