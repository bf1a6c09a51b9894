#include "jetnf/normal_form.hpp"

#include <algorithm>
#include <sstream>

namespace jetnf {

namespace {

std::vector<std::string> default_vars(int p,
                                      const std::vector<std::string> &given) {
    if (static_cast<int>(given.size()) == p)
        return given;
    std::vector<std::string> v;
    for (int k = 1; k <= p; ++k)
        v.push_back("x" + std::to_string(k));
    return v;
}

MatrixJet const_to_jet(const ScalarMat &c, int p, int N) {
    MatrixJet r(c.rows(), c.cols(), p, N);
    MultiIndex zero(p);
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j)
            if (!c.at(i, j).is_zero())
                r.at(i, j).set_coeff(zero, c.at(i, j));
    return r;
}

ScalarMat constant_of(const MatrixJet &a) {
    ScalarMat r(a.rows(), a.cols());
    MultiIndex zero(a.num_vars());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.at(i, j).coeff(zero);
    return r;
}

/// Constant U with U A_0 in reduced row echelon form.
ScalarMat row_reducer(const ScalarMat &a0) {
    int m = a0.rows(), n = a0.cols();
    ScalarMat aug(m, n + m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = a0.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    aug.rref(n);
    ScalarMat u(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            u.at(i, j) = aug.at(i, n + j);
    return u;
}

/// Constant (U, C) with U A_0 C = [[1_r, 0], [0, 0]].
std::pair<ScalarMat, ScalarMat> rank_normalizers(const ScalarMat &a0) {
    int m = a0.rows(), n = a0.cols();
    ScalarMat u = row_reducer(a0);
    ScalarMat r = u * a0; // RREF
    ScalarMat c = ScalarMat::identity(n);
    // Locate pivots, swap them to the front, then clear the free columns.
    int rank = 0;
    for (int i = 0; i < m; ++i) {
        int piv = -1;
        for (int j = 0; j < n; ++j)
            if (!r.at(i, j).is_zero()) {
                piv = j;
                break;
            }
        if (piv < 0)
            break;
        if (piv != rank)
            for (int t = 0; t < std::max(m, n); ++t) {
                if (t < m)
                    std::swap(r.at(t, piv), r.at(t, rank));
                if (t < n)
                    std::swap(c.at(t, piv), c.at(t, rank));
            }
        for (int j = 0; j < n; ++j) {
            if (j == rank || r.at(i, j).is_zero())
                continue;
            Scalar f = r.at(i, j);
            for (int t = 0; t < m; ++t)
                r.at(t, j) -= f * r.at(t, rank);
            for (int t = 0; t < n; ++t)
                c.at(t, j) -= f * c.at(t, rank);
        }
        ++rank;
    }
    return {u, c};
}

GroupElementJet full_g_preprocess(const MatrixJet &a, GroupKind kind,
                                  std::vector<std::string> &notes) {
    int p = a.num_vars(), N = a.trunc_order();
    switch (kind) {
    case GroupKind::TwoSided: {
        if (p == 1) {
            // Complete one-variable reduction; the unipotent pass after it
            // is then a fixed point.
            auto nf1 = one_variable_nf(a);
            notes.push_back("full-G preprocessing: one-variable reduction");
            return nf1.g;
        }
        auto [u0, c0] = rank_normalizers(constant_of(a));
        auto v0 = invert(c0);
        if (!v0)
            throw error("rank normalizer produced a singular factor");
        notes.push_back(
            "full-G preprocessing: constant term reduced to rank normal form");
        return two_sided_element(const_to_jet(u0, p, N),
                                 const_to_jet(*v0, p, N));
    }
    case GroupKind::Left: {
        ScalarMat u0 = row_reducer(constant_of(a));
        notes.push_back("full-G preprocessing: constant term row-reduced");
        return left_element(const_to_jet(u0, p, N), a.cols());
    }
    case GroupKind::Right: {
        ScalarMat w = row_reducer(constant_of(a).transpose());
        ScalarMat c = w.transpose(); // A_0 * C is column-echelon
        auto v0 = invert(c);
        if (!v0)
            throw error("column reducer not invertible");
        notes.push_back("full-G preprocessing: constant term column-reduced");
        return right_element(const_to_jet(*v0, p, N), a.rows());
    }
    default:
        throw invalid_input("--full-g is only available for left, right and "
                            "two-sided equivalence");
    }
}

} // namespace

NormalFormResult normal_form(const MatrixJet &a, GroupKind kind,
                             const NormalFormOptions &opt) {
    if (kind_requires_square(kind) && a.rows() != a.cols())
        throw invalid_input(kind_name(kind) + " needs a square matrix");
    if (a.trunc_order() < 1)
        throw invalid_input("normal form needs truncation order >= 1");
    int N = a.trunc_order();
    NormalFormResult res;
    res.input = a;
    res.kind = kind;
    res.g = identity_element(kind, a.rows(), a.cols(), a.num_vars(), N);
    res.b = a;
    res.full_g_preprocessed = opt.full_g;
    if (opt.full_g) {
        res.g = full_g_preprocess(a, kind, res.notes);
        res.b = act(res.g, a);
    }
    auto vars = default_vars(a.num_vars(), opt.var_names);
    for (int j = 1; j <= N; ++j) {
        VSpace vs = v_space(res.b, kind, j, opt.max_columns);
        auto h = vs.ambient.coords_of(res.b.homogeneous(j));
        Decomposition dec = decompose(vs.ambient, h, vs.space);
        Scalar vnorm2;
        for (long k = 0; k < vs.ambient.dim(); ++k)
            if (!dec.v[k].is_zero())
                vnorm2 += dec.v[k] * dec.v[k].conj() * vs.ambient.weight(k);
        bool moved = !vnorm2.is_zero();
        if (moved) {
            LieElementJet nu = preimage_nu(dec.v, vs, N);
            GroupElementJet step =
                exp_element({kind, -nu.nu_l, -nu.nu_r});
            // act(step, B) = U B V^{-1} with V^{-1} = exp(nu_r); using the
            // exponential directly avoids a jet inversion.
            res.b = step.u * res.b * exp_jet(nu.nu_r);
            res.g = compose(step, res.g);
        }
        res.log.push_back(
            {j, vs.space.dim(), vs.ambient.dim() - vs.space.dim(), vnorm2});
        if (opt.explain) {
            std::ostringstream os;
            os << "degree " << j << ":\n";
            os << dump_subspace(vs.ambient, vs.space, vars, "  V^(" +
                                    std::to_string(j) + ")");
            os << dump_subspace(vs.ambient, w_complement(vs.ambient, vs.space),
                                vars, "  W^(" + std::to_string(j) + ")");
            *opt.explain += os.str();
        }
    }
    return res;
}

VerifyReport verify_certificate(const NormalFormResult &r) {
    VerifyReport rep;
    if (!element_constraint_holds(r.g)) {
        rep.detail = "certificate violates the " + kind_name(r.kind) +
                     " constraint on (U, V)";
        return rep;
    }
    if (!r.full_g_preprocessed && !r.g.is_unipotent()) {
        rep.detail = "certificate is not unipotent";
        return rep;
    }
    MatrixJet check = act(r.g, r.input);
    if (check != r.b) {
        MatrixJet diff = check - r.b;
        for (int i = 0; i < diff.rows(); ++i)
            for (int j = 0; j < diff.cols(); ++j)
                if (!diff.at(i, j).is_zero()) {
                    const auto &[I, c] = *diff.at(i, j).terms().begin();
                    std::ostringstream os;
                    os << "act(g, A) differs from B at entry (" << i + 1
                       << "," << j + 1 << "), exponent (";
                    for (int k = 0; k < I.num_vars(); ++k)
                        os << (k ? "," : "") << I[k];
                    os << "), by " << c.to_string();
                    rep.detail = os.str();
                    return rep;
                }
    }
    rep.ok = true;
    return rep;
}

bool PdeReport::all_pass() const {
    for (const auto &r : relations)
        if (!r.pass)
            return false;
    return true;
}

namespace {

std::string first_nonzero_description(const MatrixJet &m) {
    // Scan in (graded-lex monomial, row, col) order.
    for (const auto &I : m.support())
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                Scalar c = m.at(i, j).coeff(I);
                if (c.is_zero())
                    continue;
                std::ostringstream os;
                os << "entry (" << i + 1 << "," << j + 1 << "), exponent (";
                for (int k = 0; k < I.num_vars(); ++k)
                    os << (k ? "," : "") << I[k];
                os << "): " << c.to_string();
                return os.str();
            }
    return "";
}

} // namespace

PdeReport check_pde(const MatrixJet &b, int k, GroupKind kind) {
    if (k < 0 || k > b.trunc_order())
        throw invalid_input("split degree out of range");
    if (kind_requires_square(kind) && b.rows() != b.cols())
        throw invalid_input(kind_name(kind) + " needs a square matrix");
    PdeReport rep;
    rep.kind = kind;
    rep.k = k;
    MatrixJet base = b;
    if (kind == GroupKind::Conjugacy) {
        // The conjugacy relations apply to lambda*1 + A; strip the scalar
        // part, which must actually be scalar.
        MultiIndex zero(b.num_vars());
        Scalar lambda = b.at(0, 0).coeff(zero);
        MatrixJet shift =
            MatrixJet::identity(b.rows(), b.num_vars(), b.trunc_order())
                .scale(lambda);
        MatrixJet c0 = b.project(0) - shift;
        if (!c0.is_zero())
            throw invalid_input("conjugacy relations need a constant part "
                                "that is a scalar multiple of the identity");
        base = b - shift;
    }
    MatrixJet lead = base.homogeneous(k);
    MatrixJet tail = base - base.project(k);
    // Transposing the first relation makes fail positions refer to entries
    // of b itself; as a zero test it is the same relation.
    MatrixJet left_rel =
        apply_diff_op(lead.transpose(), tail.transpose()).transpose();
    MatrixJet right_rel = apply_diff_op(lead, tail);
    auto push = [&rep](const std::string &name, const MatrixJet &value) {
        PdeRelation r;
        r.name = name;
        r.pass = value.is_zero();
        if (!r.pass)
            r.first_failure = first_nonzero_description(value);
        rep.relations.push_back(std::move(r));
    };
    switch (kind) {
    case GroupKind::Left:
        push("((A_k*)^T(d/dx) b^T)^T = 0", left_rel);
        break;
    case GroupKind::Right:
        push("A_k*(d/dx) b = 0", right_rel);
        break;
    case GroupKind::TwoSided:
        push("A_k*(d/dx) b = 0", right_rel);
        push("((A_k*)^T(d/dx) b^T)^T = 0", left_rel);
        break;
    case GroupKind::Congruence:
        push("(A_k*)^T(d/dx) b^T + A_k*(d/dx) b = 0",
             left_rel.transpose() + right_rel);
        break;
    case GroupKind::Conjugacy:
        push("((A_k*)^T(d/dx) b^T)^T - A_k*(d/dx) b = 0",
             left_rel - right_rel);
        break;
    }
    return rep;
}

DeterminacyReport determinacy_report(const MatrixJet &a, GroupKind kind,
                                     int k, int j_max, long max_columns,
                                     const std::vector<std::string>
                                         &var_names) {
    if (kind_requires_square(kind) && a.rows() != a.cols())
        throw invalid_input(kind_name(kind) + " needs a square matrix");
    if (k < 0)
        throw invalid_input("determinacy degree k must be >= 0");
    if (j_max > a.trunc_order())
        throw invalid_input("determinacy horizon exceeds the truncation");
    DeterminacyReport rep;
    rep.kind = kind;
    rep.k = k;
    rep.j_max = j_max;
    std::vector<std::string> vars = default_vars(a.num_vars(), var_names);
    for (int j = k + 1; j <= j_max; ++j) {
        LinearOperatorMatrix op = assemble_action(a, kind, j, max_columns);
        ScalarMat rows = op.columns.transpose();
        std::vector<int> pivots = rows.rref();
        std::vector<std::vector<Scalar>> rref_rows;
        for (size_t r = 0; r < pivots.size(); ++r) {
            std::vector<Scalar> row(op.codomain.dim());
            for (long c = 0; c < op.codomain.dim(); ++c)
                row[c] = rows.at(static_cast<int>(r), static_cast<int>(c));
            rref_rows.push_back(std::move(row));
        }
        // The homogeneous degree-j block sits at the end of the 0..j basis.
        MatrixSpaceBasis low(a.rows(), a.cols(), a.num_vars(), 0, j - 1);
        long offset = low.dim(), total = op.codomain.dim();
        DeterminacyVerdict verdict{j, true, ""};
        for (long idx = offset; idx < total; ++idx) {
            std::vector<Scalar> e(total);
            e[idx] = Scalar(1);
            auto residual = reduce_against(rref_rows, pivots, e);
            bool inside = true;
            for (const auto &s : residual)
                if (!s.is_zero()) {
                    inside = false;
                    break;
                }
            if (!inside) {
                verdict.contained = false;
                verdict.obstruction = op.codomain.label(idx, vars) +
                                      " is not reachable at degree " +
                                      std::to_string(j);
                break;
            }
        }
        if (!verdict.contained && kind == GroupKind::Conjugacy) {
            // trace(nu A - A nu) = 0 identically, so the image misses every
            // trace-carrying matrix. Confirm on the computed image before
            // claiming it.
            bool trace_free = true;
            for (const auto &row : rref_rows) {
                MatrixJet gen = op.codomain.jet_of(row, a.trunc_order());
                SeriesJet tr(a.num_vars(), a.trunc_order());
                for (int i = 0; i < gen.rows(); ++i)
                    tr = tr + gen.at(i, i);
                if (!tr.is_zero()) {
                    trace_free = false;
                    break;
                }
            }
            if (trace_free)
                verdict.obstruction +=
                    "; the image is trace-free, so any degree-" +
                    std::to_string(j) +
                    " matrix with nonzero trace is obstructed";
        }
        if (!verdict.contained && !rep.first_fail)
            rep.first_fail = j;
        rep.verdicts.push_back(std::move(verdict));
    }
    return rep;
}

namespace {

/// Deterministic small-rational sequence for the witness search.
struct SearchSchedule {
    unsigned long long state = 0x9e3779b97f4a7c15ull;
    long next_small() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<long>((state >> 33) % 9) - 4; // -4..4
    }
};

} // namespace

JetEquivalenceResult jet_equivalence(const MatrixJet &a, const MatrixJet &b,
                                     GroupKind kind, int j) {
    if (kind == GroupKind::Congruence)
        throw invalid_input(
            "jet equivalence for congruence is not supported: the relation "
            "U A U^T = B is not linear in the unknown transformation");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("matrices must have equal shape");
    if (a.num_vars() != b.num_vars() || a.trunc_order() != b.trunc_order())
        throw dimension_error("matrices must share variables and truncation");
    if (kind_requires_square(kind) && a.rows() != a.cols())
        throw invalid_input(kind_name(kind) + " needs square matrices");
    if (j < 0 || j > a.trunc_order())
        throw invalid_input("jet degree out of range");
    int m = a.rows(), n = a.cols(), p = a.num_vars(), N = a.trunc_order();
    JetEquivalenceResult out;

    if (a.project(j) == b.project(j)) {
        out.witness = identity_element(kind, m, n, p, N);
        out.system_solvable = true;
        out.note = "matrices already agree through degree " +
                   std::to_string(j);
        return out;
    }

    // Unknown coordinates: coefficients of U (and V) on monomials of
    // degree <= j. The defining equation U A = B V is linear in them.
    auto monos = monomials_in_range(p, 0, j);
    bool has_u = kind != GroupKind::Right;
    bool has_v = kind == GroupKind::Right || kind == GroupKind::TwoSided;
    long u_count = has_u ? static_cast<long>(monos.size()) * m * m : 0;
    long v_count = has_v ? static_cast<long>(monos.size()) * n * n : 0;
    long unknowns = u_count + v_count;
    MatrixSpaceBasis rows_basis(m, n, p, 0, j);
    ScalarMat sys(static_cast<int>(rows_basis.dim()),
                  static_cast<int>(unknowns));
    MatrixJet aj = a.project(j), bj = b.project(j);
    auto fill_col = [&](long col, const MatrixJet &value) {
        auto coords = rows_basis.coords_of(value.project(j));
        for (long r = 0; r < rows_basis.dim(); ++r)
            if (!coords[r].is_zero())
                sys.at(static_cast<int>(r), static_cast<int>(col)) = coords[r];
    };
    long col = 0;
    if (has_u)
        for (const auto &I : monos)
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) {
                    MatrixJet e = MatrixJet::zero(m, m, p, N);
                    e.at(r, c).set_coeff(I, Scalar(1));
                    MatrixJet img = e * aj;
                    if (kind == GroupKind::Conjugacy)
                        img = img - bj * e;
                    fill_col(col++, img);
                }
    if (has_v)
        for (const auto &I : monos)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    MatrixJet e = MatrixJet::zero(n, n, p, N);
                    e.at(r, c).set_coeff(I, Scalar(1));
                    MatrixJet img = bj * e;
                    if (kind == GroupKind::TwoSided)
                        img = -img;
                    fill_col(col++, img);
                }
    // Right-hand side: Left wants U A = B, Right wants B V = A, the
    // homogeneous kinds want 0.
    std::vector<Scalar> rhs(rows_basis.dim());
    if (kind == GroupKind::Left)
        rhs = rows_basis.coords_of(bj);
    else if (kind == GroupKind::Right)
        rhs = rows_basis.coords_of(aj);
    auto zp = solve(sys, rhs);
    if (!zp) {
        out.note = "the truncated linear system pi_j(U A - B V) = 0 is "
                   "infeasible: not " +
                   std::to_string(j) + "-jet equivalent";
        return out;
    }
    out.system_solvable = true;
    auto null = nullspace(sys);

    auto extract = [&](const std::vector<Scalar> &z)
        -> std::pair<MatrixJet, MatrixJet> {
        MatrixJet u = MatrixJet::identity(m, p, N);
        MatrixJet v = MatrixJet::identity(n, p, N);
        if (has_u) {
            u = MatrixJet::zero(m, m, p, N);
            long idx = 0;
            for (const auto &I : monos)
                for (int r = 0; r < m; ++r)
                    for (int c = 0; c < m; ++c, ++idx)
                        if (!z[idx].is_zero())
                            u.at(r, c).add_to_coeff(I, z[idx]);
        }
        if (has_v) {
            v = MatrixJet::zero(n, n, p, N);
            long idx = u_count;
            for (const auto &I : monos)
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c, ++idx)
                        if (!z[idx].is_zero())
                            v.at(r, c).add_to_coeff(I, z[idx]);
        }
        return {u, v};
    };

    auto try_candidate = [&](const std::vector<Scalar> &z)
        -> std::optional<GroupElementJet> {
        auto [u, v] = extract(z);
        auto check_invertible = [&](const MatrixJet &mjet) {
            return invert(constant_of(mjet)).has_value();
        };
        GroupElementJet g = identity_element(kind, m, n, p, N);
        switch (kind) {
        case GroupKind::Left:
            if (!check_invertible(u))
                return std::nullopt;
            g = left_element(u, n);
            break;
        case GroupKind::Right:
            if (!check_invertible(v))
                return std::nullopt;
            g = right_element(v, m);
            break;
        case GroupKind::TwoSided:
            if (!check_invertible(u) || !check_invertible(v))
                return std::nullopt;
            g = two_sided_element(u, v);
            break;
        case GroupKind::Conjugacy:
            if (!check_invertible(u))
                return std::nullopt;
            g = conjugacy_element(u);
            break;
        default:
            return std::nullopt;
        }
        if (act(g, a).project(j) != b.project(j))
            return std::nullopt;
        return g;
    };

    // Deterministic search: the particular solution, then single nullspace
    // shifts, then pseudo-random small combinations.
    if (auto g = try_candidate(*zp)) {
        out.witness = g;
        return out;
    }
    for (const auto &nvec : null) {
        std::vector<Scalar> z = *zp;
        for (size_t t = 0; t < z.size(); ++t)
            z[t] += nvec[t];
        if (auto g = try_candidate(z)) {
            out.witness = g;
            return out;
        }
    }
    SearchSchedule sched;
    for (int attempt = 0; attempt < 256 && !null.empty(); ++attempt) {
        std::vector<Scalar> z = *zp;
        for (const auto &nvec : null) {
            long cfac = sched.next_small();
            if (cfac == 0)
                continue;
            for (size_t t = 0; t < z.size(); ++t)
                if (!nvec[t].is_zero())
                    z[t] += Scalar(cfac) * nvec[t];
        }
        if (auto g = try_candidate(z)) {
            out.witness = g;
            return out;
        }
    }
    out.note = "solutions exist but none with invertible constant terms "
               "was found at this horizon";
    return out;
}

OneVariableNF one_variable_nf(const MatrixJet &a) {
    if (a.num_vars() != 1)
        throw invalid_input("one-variable normal form needs p = 1");
    int m = a.rows(), n = a.cols(), N = a.trunc_order();
    MatrixJet mat = a;
    MatrixJet u = MatrixJet::identity(m, 1, N);
    MatrixJet w = MatrixJet::identity(n, 1, N); // right factor, B = U A W
    OneVariableNF out{mat, identity_element(GroupKind::TwoSided, m, n, 1, N),
                      {}, ""};

    auto swap_rows = [&](MatrixJet &t, int r1, int r2) {
        for (int j = 0; j < t.cols(); ++j)
            std::swap(t.at(r1, j), t.at(r2, j));
    };
    auto swap_cols = [&](MatrixJet &t, int c1, int c2) {
        for (int i = 0; i < t.rows(); ++i)
            std::swap(t.at(i, c1), t.at(i, c2));
    };

    int limit = std::min(m, n);
    int r = 0;
    for (; r < limit; ++r) {
        // Entry of minimal order in the active submatrix.
        int bi = -1, bj = -1, best = N + 1;
        for (int i = r; i < m; ++i)
            for (int j = r; j < n; ++j) {
                auto o = mat.at(i, j).order();
                if (o && *o < best) {
                    best = *o;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0)
            break; // all remaining entries vanish through the truncation
        if (bi != r) {
            swap_rows(mat, r, bi);
            swap_rows(u, r, bi);
        }
        if (bj != r) {
            swap_cols(mat, r, bj);
            swap_cols(w, r, bj);
        }
        int k = best;
        SeriesJet unit = mat.at(r, r).shift_down_pow(k);
        SeriesJet uinv = unit.unit_inverse();
        for (int i = 0; i < m; ++i) {
            if (i == r || mat.at(i, r).is_zero())
                continue;
            SeriesJet f = mat.at(i, r).shift_down_pow(k) * uinv;
            for (int j = 0; j < n; ++j)
                mat.at(i, j) = mat.at(i, j) - f * mat.at(r, j);
            for (int j = 0; j < m; ++j)
                u.at(i, j) = u.at(i, j) - f * u.at(r, j);
        }
        for (int j = 0; j < n; ++j) {
            if (j == r || mat.at(r, j).is_zero())
                continue;
            SeriesJet f = mat.at(r, j).shift_down_pow(k) * uinv;
            for (int i = 0; i < m; ++i)
                mat.at(i, j) = mat.at(i, j) - mat.at(i, r) * f;
            for (int i = 0; i < n; ++i)
                w.at(i, j) = w.at(i, j) - w.at(i, r) * f;
        }
        // Normalize the pivot to exactly x^k.
        for (int j = 0; j < n; ++j)
            mat.at(r, j) = uinv * mat.at(r, j);
        for (int j = 0; j < m; ++j)
            u.at(r, j) = uinv * u.at(r, j);
        out.diagonal_orders.push_back(k);
    }
    for (int t = r; t < limit; ++t)
        out.diagonal_orders.push_back(std::nullopt);
    if (r < limit)
        out.note = "diagonal entries from position " + std::to_string(r + 1) +
                   " on vanish through the truncation (order > " +
                   std::to_string(N) + " or identically zero)";
    out.b = mat;
    out.g = two_sided_element(u, invert_jet(w));
    return out;
}

} // namespace jetnf
