#include "jetnf/graded.hpp"

#include <sstream>

namespace jetnf {

MatrixSpaceBasis::MatrixSpaceBasis(int m_, int n_, int p_, int d_lo_,
                                   int d_hi_)
    : m(m_), n(n_), p(p_), d_lo(d_lo_), d_hi(d_hi_),
      monos(monomials_in_range(p_, d_lo_, d_hi_)) {}

long MatrixSpaceBasis::index_of(long mono_idx, int row, int col) const {
    return mono_idx * m * n + static_cast<long>(row) * n + col;
}

void MatrixSpaceBasis::element_at(long idx, long &mono_idx, int &row,
                                  int &col) const {
    mono_idx = idx / (static_cast<long>(m) * n);
    long rest = idx % (static_cast<long>(m) * n);
    row = static_cast<int>(rest / n);
    col = static_cast<int>(rest % n);
}

Scalar MatrixSpaceBasis::weight(long idx) const {
    long mono_idx;
    int row, col;
    element_at(idx, mono_idx, row, col);
    return Scalar(mpq_class(monos[mono_idx].factorial()));
}

std::string mono_label(const MultiIndex &I,
                       const std::vector<std::string> &vars) {
    if (I.degree() == 0)
        return "1";
    std::string s;
    for (int k = 0; k < I.num_vars(); ++k) {
        if (I[k] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += vars[k];
        if (I[k] > 1)
            s += "^" + std::to_string(I[k]);
    }
    return s;
}

std::string MatrixSpaceBasis::label(long idx,
                                    const std::vector<std::string> &vars) const {
    long mono_idx;
    int row, col;
    element_at(idx, mono_idx, row, col);
    return mono_label(monos[mono_idx], vars) + "*E" + std::to_string(row + 1) +
           std::to_string(col + 1);
}

std::vector<Scalar> MatrixSpaceBasis::coords_of(const MatrixJet &a) const {
    if (a.rows() != m || a.cols() != n || a.num_vars() != p)
        throw dimension_error("matrix does not fit the graded basis");
    std::vector<Scalar> coords(dim());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto &[I, c] : a.at(i, j).terms()) {
                int d = I.degree();
                if (d < d_lo || d > d_hi)
                    throw invalid_input(
                        "matrix has terms outside the basis degree range");
                auto it = std::lower_bound(monos.begin(), monos.end(), I);
                coords[index_of(it - monos.begin(), i, j)] = c;
            }
    return coords;
}

MatrixJet MatrixSpaceBasis::jet_of(const std::vector<Scalar> &coords,
                                   int trunc_order) const {
    MatrixJet a(m, n, p, trunc_order);
    for (long idx = 0; idx < dim(); ++idx) {
        if (coords[idx].is_zero())
            continue;
        long mono_idx;
        int row, col;
        element_at(idx, mono_idx, row, col);
        a.at(row, col).add_to_coeff(monos[mono_idx], coords[idx]);
    }
    return a;
}

LieBasis::LieBasis(GroupKind kind_, int m_, int n_, int p_, int d_hi_,
                   long max_columns)
    : kind(kind_), m(m_), n(n_), p(p_), d_hi(d_hi_) {
    if (kind_requires_square(kind) && m != n)
        throw invalid_input(kind_name(kind) + " needs square matrices");
    long per_mono = 0;
    switch (kind) {
    case GroupKind::Left: per_mono = static_cast<long>(m) * m; break;
    case GroupKind::Right: per_mono = static_cast<long>(n) * n; break;
    case GroupKind::TwoSided:
        per_mono = static_cast<long>(m) * m + static_cast<long>(n) * n;
        break;
    case GroupKind::Conjugacy:
    case GroupKind::Congruence:
        per_mono = static_cast<long>(m) * m;
        break;
    }
    auto monos = monomials_in_range(p, 1, d_hi);
    if (per_mono * static_cast<long>(monos.size()) > max_columns)
        throw guardrail_error(
            "Lie basis would have " +
            std::to_string(per_mono * static_cast<long>(monos.size())) +
            " columns, over the cap of " + std::to_string(max_columns));
    for (const auto &I : monos) {
        if (kind != GroupKind::Right)
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c)
                    elems.emplace_back(I, r, c, true);
        if (kind == GroupKind::Right || kind == GroupKind::TwoSided)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    elems.emplace_back(I, r, c, false);
    }
}

LieElementJet LieBasis::element(long k, int trunc_order) const {
    const Elem &e = elems.at(k);
    MatrixJet nl = MatrixJet::zero(m, m, p, trunc_order);
    MatrixJet nr = MatrixJet::zero(n, n, p, trunc_order);
    SeriesJet mono = SeriesJet::monomial(trunc_order, e.mono, Scalar(1));
    switch (kind) {
    case GroupKind::Left:
        nl.set(e.row, e.col, mono);
        break;
    case GroupKind::Right:
        nr.set(e.row, e.col, mono);
        break;
    case GroupKind::TwoSided:
        if (e.left_block)
            nl.set(e.row, e.col, mono);
        else
            nr.set(e.row, e.col, mono);
        break;
    case GroupKind::Conjugacy:
        nl.set(e.row, e.col, mono);
        nr = nl;
        break;
    case GroupKind::Congruence:
        nl.set(e.row, e.col, mono);
        nr.set(e.col, e.row, -mono);
        break;
    }
    return {kind, nl, nr};
}

LieElementJet LieBasis::combine(const std::vector<Scalar> &coords,
                                int trunc_order) const {
    MatrixJet nl = MatrixJet::zero(m, m, p, trunc_order);
    MatrixJet nr = MatrixJet::zero(n, n, p, trunc_order);
    for (long k = 0; k < dim(); ++k) {
        if (coords[k].is_zero())
            continue;
        const Elem &e = elems[k];
        switch (kind) {
        case GroupKind::Left:
            nl.at(e.row, e.col).add_to_coeff(e.mono, coords[k]);
            break;
        case GroupKind::Right:
            nr.at(e.row, e.col).add_to_coeff(e.mono, coords[k]);
            break;
        case GroupKind::TwoSided:
            (e.left_block ? nl : nr)
                .at(e.row, e.col)
                .add_to_coeff(e.mono, coords[k]);
            break;
        case GroupKind::Conjugacy:
            nl.at(e.row, e.col).add_to_coeff(e.mono, coords[k]);
            nr.at(e.row, e.col).add_to_coeff(e.mono, coords[k]);
            break;
        case GroupKind::Congruence:
            nl.at(e.row, e.col).add_to_coeff(e.mono, coords[k]);
            nr.at(e.col, e.row).add_to_coeff(e.mono, -coords[k]);
            break;
        }
    }
    return {kind, nl, nr};
}

Scalar LieBasis::weight(long k) const {
    Scalar f(mpq_class(elems.at(k).mono.factorial()));
    if (kind == GroupKind::Conjugacy || kind == GroupKind::Congruence)
        return Scalar(2) * f;
    return f;
}

std::string LieBasis::label(long k, const std::vector<std::string> &vars) const {
    const Elem &e = elems.at(k);
    std::string unit = "E" + std::to_string(e.row + 1) +
                       std::to_string(e.col + 1);
    std::string base = mono_label(e.mono, vars) + "*" + unit;
    switch (kind) {
    case GroupKind::Left: return "(" + base + ", 0)";
    case GroupKind::Right: return "(0, " + base + ")";
    case GroupKind::TwoSided:
        return e.left_block ? "(" + base + ", 0)" : "(0, " + base + ")";
    case GroupKind::Conjugacy: return "(" + base + ", " + base + ")";
    case GroupKind::Congruence:
        return "(" + base + ", -" + mono_label(e.mono, vars) + "*E" +
               std::to_string(e.col + 1) + std::to_string(e.row + 1) + ")";
    }
    return base;
}

namespace {

/// pi_cap of the image of one Lie basis element under nu -> nu_l A - A nu_r,
/// computed directly from A's rows and columns: (E_ab x^I) A = x^I times
/// row b of A placed in row a, and A (E_cd x^I) = x^I times column c of A
/// placed in column d. Avoids materializing the basis element.
MatrixJet unit_image(const LieBasis &basis, long k, const MatrixJet &a,
                     int cap) {
    const LieBasis::Elem &e = basis.elems[k];
    MatrixJet img(a.rows(), a.cols(), a.num_vars(), a.trunc_order());
    auto add_left = [&](int r, int c, const Scalar &sign) {
        // sign * x^I * (row c of A) into row r.
        for (int j = 0; j < a.cols(); ++j) {
            SeriesJet s = a.at(c, j).shift_up(e.mono).project(cap);
            if (sign != Scalar(1))
                s = s.scale(sign);
            img.at(r, j) = img.at(r, j) + s;
        }
    };
    auto add_right = [&](int r, int c, const Scalar &sign) {
        // -sign * x^I * (column r of A) into column c (from A E_rc).
        for (int i = 0; i < a.rows(); ++i) {
            SeriesJet s = a.at(i, r).shift_up(e.mono).project(cap);
            s = s.scale(-sign);
            img.at(i, c) = img.at(i, c) + s;
        }
    };
    switch (basis.kind) {
    case GroupKind::Left:
        add_left(e.row, e.col, Scalar(1));
        break;
    case GroupKind::Right:
        add_right(e.row, e.col, Scalar(1));
        break;
    case GroupKind::TwoSided:
        if (e.left_block)
            add_left(e.row, e.col, Scalar(1));
        else
            add_right(e.row, e.col, Scalar(1));
        break;
    case GroupKind::Conjugacy:
        add_left(e.row, e.col, Scalar(1));
        add_right(e.row, e.col, Scalar(1));
        break;
    case GroupKind::Congruence:
        add_left(e.row, e.col, Scalar(1));
        add_right(e.col, e.row, Scalar(-1));
        break;
    }
    return img;
}

} // namespace

bool GradedSubspace::contains(const std::vector<Scalar> &v) const {
    auto res = reduce_against(gens, pivots, v);
    for (const auto &s : res)
        if (!s.is_zero())
            return false;
    return true;
}

GradedSubspace make_subspace(long ambient_dim,
                             const std::vector<std::vector<Scalar>> &raw_gens) {
    GradedSubspace s;
    s.ambient_dim = ambient_dim;
    if (raw_gens.empty())
        return s;
    ScalarMat gm(0, static_cast<int>(ambient_dim));
    for (const auto &g : raw_gens)
        gm.append_row(g);
    s.pivots = gm.rref();
    for (size_t k = 0; k < s.pivots.size(); ++k) {
        std::vector<Scalar> row(ambient_dim);
        for (long j = 0; j < ambient_dim; ++j)
            row[j] = gm.at(static_cast<int>(k), static_cast<int>(j));
        s.gens.push_back(std::move(row));
    }
    return s;
}

LinearOperatorMatrix assemble_action(const MatrixJet &a, GroupKind kind, int j,
                                     long max_columns) {
    if (j < 0 || j > a.trunc_order())
        throw invalid_input("operator degree out of range");
    LinearOperatorMatrix op;
    op.domain = LieBasis(kind, a.rows(), a.cols(), a.num_vars(), j,
                         max_columns);
    op.codomain = MatrixSpaceBasis(a.rows(), a.cols(), a.num_vars(), 0, j);
    // V^(j) and the stabilizer kernels only see pi_{j-1} A; projecting here
    // makes that exact.
    MatrixJet aprev = j >= 1 ? a.project(j - 1)
                             : MatrixJet::zero(a.rows(), a.cols(),
                                               a.num_vars(), a.trunc_order());
    op.columns = ScalarMat(static_cast<int>(op.codomain.dim()),
                           static_cast<int>(op.domain.dim()));
    for (long k = 0; k < op.domain.dim(); ++k) {
        auto col = op.codomain.coords_of(unit_image(op.domain, k, aprev, j));
        for (long r = 0; r < op.codomain.dim(); ++r)
            if (!col[r].is_zero())
                op.columns.at(static_cast<int>(r), static_cast<int>(k)) =
                    col[r];
    }
    return op;
}

GradedSubspace kernel(const LinearOperatorMatrix &op) {
    return make_subspace(op.domain.dim(), nullspace(op.columns));
}

VSpace v_space(const MatrixJet &a, GroupKind kind, int j, long max_columns) {
    if (j < 1 || j > a.trunc_order())
        throw invalid_input("v_space degree out of range");
    VSpace vs;
    vs.j = j;
    vs.ambient = MatrixSpaceBasis(a.rows(), a.cols(), a.num_vars(), j, j);
    vs.domain = LieBasis(kind, a.rows(), a.cols(), a.num_vars(), j,
                         max_columns);
    MatrixJet aprev = a.project(j - 1);

    MatrixSpaceBasis low_basis(a.rows(), a.cols(), a.num_vars(), 0, j - 1);
    long low_dim = low_basis.dim(), high_dim = vs.ambient.dim();
    ScalarMat m_low(static_cast<int>(low_dim),
                    static_cast<int>(vs.domain.dim()));
    vs.high_rows = ScalarMat(static_cast<int>(high_dim),
                             static_cast<int>(vs.domain.dim()));
    for (long k = 0; k < vs.domain.dim(); ++k) {
        MatrixJet img = unit_image(vs.domain, k, aprev, j);
        auto low = low_basis.coords_of(img.project(j - 1));
        auto high = vs.ambient.coords_of(img.homogeneous(j));
        for (long r = 0; r < low_dim; ++r)
            if (!low[r].is_zero())
                m_low.at(static_cast<int>(r), static_cast<int>(k)) = low[r];
        for (long r = 0; r < high_dim; ++r)
            if (!high[r].is_zero())
                vs.high_rows.at(static_cast<int>(r), static_cast<int>(k)) =
                    high[r];
    }
    // The kernel only serves as a spanning set here; skip re-canonicalizing
    // (the free-column parametrization is already deterministic).
    vs.kernel_gens = nullspace(std::move(m_low), false);

    // Row-reduce [image | kernel coords]; pivots stay in the image block so
    // every surviving generator carries an exact preimage witness.
    long kdim = static_cast<long>(vs.kernel_gens.size());
    ScalarMat aug(static_cast<int>(kdim),
                  static_cast<int>(high_dim + vs.domain.dim()));
    for (long i = 0; i < kdim; ++i) {
        auto img = vs.high_rows.mul_vec(vs.kernel_gens[i]);
        for (long c = 0; c < high_dim; ++c)
            aug.at(static_cast<int>(i), static_cast<int>(c)) = img[c];
        for (long c = 0; c < vs.domain.dim(); ++c)
            aug.at(static_cast<int>(i), static_cast<int>(high_dim + c)) =
                vs.kernel_gens[i][c];
    }
    vs.space.ambient_dim = high_dim;
    vs.space.pivots = aug.rref(static_cast<int>(high_dim));
    for (size_t r = 0; r < vs.space.pivots.size(); ++r) {
        std::vector<Scalar> gen(high_dim), wit(vs.domain.dim());
        for (long c = 0; c < high_dim; ++c)
            gen[c] = aug.at(static_cast<int>(r), static_cast<int>(c));
        for (long c = 0; c < vs.domain.dim(); ++c)
            wit[c] = aug.at(static_cast<int>(r), static_cast<int>(high_dim + c));
        vs.space.gens.push_back(std::move(gen));
        vs.witnesses.push_back(std::move(wit));
    }
    return vs;
}

GradedSubspace w_complement(const MatrixSpaceBasis &ambient,
                            const GradedSubspace &v) {
    long dim = ambient.dim();
    if (v.dim() == 0) {
        // Whole space, in canonical form: the identity generator list.
        std::vector<std::vector<Scalar>> gens;
        for (long k = 0; k < dim; ++k) {
            std::vector<Scalar> g(dim);
            g[k] = Scalar(1);
            gens.push_back(std::move(g));
        }
        return make_subspace(dim, gens);
    }
    ScalarMat constraints(static_cast<int>(v.dim()), static_cast<int>(dim));
    for (long r = 0; r < v.dim(); ++r)
        for (long c = 0; c < dim; ++c)
            if (!v.gens[r][c].is_zero())
                constraints.at(static_cast<int>(r), static_cast<int>(c)) =
                    v.gens[r][c].conj() * ambient.weight(c);
    return make_subspace(dim, nullspace(constraints));
}

Decomposition decompose(const MatrixSpaceBasis &ambient,
                        const std::vector<Scalar> &h,
                        const GradedSubspace &v) {
    Decomposition d;
    long dim = ambient.dim();
    if (static_cast<long>(h.size()) != dim)
        throw dimension_error("decompose: vector does not fit ambient basis");
    d.v.assign(dim, Scalar());
    d.w = h;
    if (v.dim() == 0)
        return d;
    auto ip = [&](const std::vector<Scalar> &a,
                  const std::vector<Scalar> &b) {
        Scalar acc;
        for (long k = 0; k < dim; ++k)
            if (!a[k].is_zero() && !b[k].is_zero())
                acc += a[k] * b[k].conj() * ambient.weight(k);
        return acc;
    };
    long r = v.dim();
    ScalarMat gram(static_cast<int>(r), static_cast<int>(r));
    std::vector<Scalar> rhs(r);
    for (long s = 0; s < r; ++s) {
        for (long t = 0; t < r; ++t)
            gram.at(static_cast<int>(s), static_cast<int>(t)) =
                ip(v.gens[t], v.gens[s]);
        rhs[s] = ip(h, v.gens[s]);
    }
    auto c = solve(gram, rhs);
    if (!c)
        throw error("Gram system unsolvable; inner product not definite?");
    d.v_in_gens = *c;
    for (long t = 0; t < r; ++t)
        if (!(*c)[t].is_zero())
            for (long k = 0; k < dim; ++k)
                d.v[k] += (*c)[t] * v.gens[t][k];
    for (long k = 0; k < dim; ++k)
        d.w[k] = h[k] - d.v[k];
    return d;
}

LieElementJet preimage_nu(const std::vector<Scalar> &v_coords, const VSpace &vs,
                          int trunc_order) {
    long dim = vs.ambient.dim();
    auto residual = reduce_against(vs.space.gens, vs.space.pivots, v_coords);
    for (const auto &s : residual)
        if (!s.is_zero())
            throw invalid_input("vector is not in V^(j)");
    auto c = coords_in_rref(vs.space.gens, vs.space.pivots, v_coords);
    long ddim = vs.domain.dim();
    std::vector<Scalar> kappa(ddim);
    for (size_t g = 0; g < c.size(); ++g)
        if (!c[g].is_zero())
            for (long k = 0; k < ddim; ++k)
                kappa[k] += c[g] * vs.witnesses[g][k];

    // Minimum-norm refinement: project kappa onto the kernel of the full
    // degree-<=j operator (directions that do not change the image) and
    // subtract. Exact normal equations with the diagonal pair Gram.
    long kdim = static_cast<long>(vs.kernel_gens.size());
    ScalarMat img_of_kern(static_cast<int>(dim), static_cast<int>(kdim));
    for (long i = 0; i < kdim; ++i) {
        auto img = vs.high_rows.mul_vec(vs.kernel_gens[i]);
        for (long r = 0; r < dim; ++r)
            img_of_kern.at(static_cast<int>(r), static_cast<int>(i)) = img[r];
    }
    auto dz = nullspace(img_of_kern);
    if (!dz.empty()) {
        std::vector<std::vector<Scalar>> z;
        for (const auto &dvec : dz) {
            std::vector<Scalar> zk(ddim);
            for (long i = 0; i < kdim; ++i)
                if (!dvec[i].is_zero())
                    for (long k = 0; k < ddim; ++k)
                        zk[k] += dvec[i] * vs.kernel_gens[i][k];
            z.push_back(std::move(zk));
        }
        auto gip = [&](const std::vector<Scalar> &a,
                       const std::vector<Scalar> &b) {
            Scalar acc;
            for (long k = 0; k < ddim; ++k)
                if (!a[k].is_zero() && !b[k].is_zero())
                    acc += a[k] * b[k].conj() * vs.domain.weight(k);
            return acc;
        };
        long t = static_cast<long>(z.size());
        ScalarMat gram(static_cast<int>(t), static_cast<int>(t));
        std::vector<Scalar> rhs(t);
        for (long s = 0; s < t; ++s) {
            for (long u = 0; u < t; ++u)
                gram.at(static_cast<int>(s), static_cast<int>(u)) =
                    gip(z[u], z[s]);
            rhs[s] = gip(kappa, z[s]);
        }
        auto y = solve(gram, rhs);
        if (!y)
            throw error("kernel Gram system unsolvable");
        for (long u = 0; u < t; ++u)
            if (!(*y)[u].is_zero())
                for (long k = 0; k < ddim; ++k)
                    kappa[k] -= (*y)[u] * z[u][k];
    }
    return vs.domain.combine(kappa, trunc_order);
}

std::string dump_subspace(const MatrixSpaceBasis &ambient,
                          const GradedSubspace &s,
                          const std::vector<std::string> &vars,
                          const std::string &name) {
    std::ostringstream os;
    os << name << ": dim " << s.dim() << " of " << ambient.dim() << "\n";
    for (long g = 0; g < s.dim(); ++g) {
        os << "  [" << g << "] ";
        bool first = true;
        for (long k = 0; k < ambient.dim(); ++k) {
            if (s.gens[g][k].is_zero())
                continue;
            if (!first)
                os << " + ";
            os << "(" << s.gens[g][k].to_string() << ")*"
               << ambient.label(k, vars);
            first = false;
        }
        if (first)
            os << "0";
        os << "\n";
    }
    return os.str();
}

} // namespace jetnf
