#pragma once

// Test-only brute-force linear algebra, independent of jetnf/linalg: a
// right-to-left Gauss-Jordan and a direct enumeration of monomial Lie
// pairs. Used as the oracle that v_space and friends are checked against.

#include <vector>

#include "jetnf/group.hpp"
#include "jetnf/multi_index.hpp"

namespace oracle {

using jetnf::MatrixJet;
using jetnf::Scalar;
using Vec = std::vector<Scalar>;

/// Gauss-Jordan scanning columns right to left, pivot = first nonzero from
/// the bottom. Same spaces as the production code, different route.
inline std::vector<Vec> rtl_eliminate(std::vector<Vec> rows,
                                      std::vector<int> &pivot_cols) {
    if (rows.empty())
        return rows;
    int n = static_cast<int>(rows[0].size());
    int next = static_cast<int>(rows.size()) - 1;
    pivot_cols.clear();
    for (int c = n - 1; c >= 0 && next >= 0; --c) {
        int pr = -1;
        for (int r = next; r >= 0; --r)
            if (!rows[r][c].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0)
            continue;
        std::swap(rows[pr], rows[next]);
        Scalar inv = rows[next][c].inverse();
        for (int j = 0; j < n; ++j)
            rows[next][j] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == next || rows[r][c].is_zero())
                continue;
            Scalar f = rows[r][c];
            for (int j = 0; j < n; ++j)
                rows[r][j] -= f * rows[next][j];
        }
        pivot_cols.push_back(c);
        --next;
    }
    // Keep only the nonzero rows (the bottom block).
    std::vector<Vec> out(rows.begin() + (next + 1), rows.end());
    return out;
}

inline bool in_span(const std::vector<Vec> &span_rows, Vec v) {
    std::vector<int> piv;
    std::vector<Vec> rows = rtl_eliminate(span_rows, piv);
    // Reduce v against each row using that row's leading one.
    for (const auto &row : rows) {
        int lead = -1;
        for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j)
            if (!row[j].is_zero() && row[j] == Scalar(1)) {
                bool clean = true;
                for (const auto &other : rows)
                    if (&other != &row && !other[j].is_zero())
                        clean = false;
                if (clean) {
                    lead = j;
                    break;
                }
            }
        if (lead < 0)
            continue;
        Scalar f = v[lead];
        if (f.is_zero())
            continue;
        for (size_t j = 0; j < v.size(); ++j)
            v[j] -= f * row[j];
    }
    for (const auto &s : v)
        if (!s.is_zero())
            return false;
    return true;
}

inline std::vector<Vec> rtl_nullspace(const std::vector<Vec> &rows, int n) {
    std::vector<int> piv;
    auto red = rtl_eliminate(rows, piv);
    std::vector<bool> is_pivot(n, false);
    std::vector<std::pair<int, int>> pivot_of_row; // (row, col)
    for (size_t k = 0; k < red.size(); ++k) {
        // The k-th surviving row owns pivot piv[red.size()-1-k]? Recover the
        // leading column directly: the rightmost entry equal to 1 whose
        // column is zero elsewhere.
        for (int c = n - 1; c >= 0; --c) {
            if (red[k][c] != Scalar(1))
                continue;
            bool clean = true;
            for (size_t r = 0; r < red.size(); ++r)
                if (r != k && !red[r][c].is_zero())
                    clean = false;
            if (clean) {
                pivot_of_row.emplace_back(static_cast<int>(k), c);
                is_pivot[c] = true;
                break;
            }
        }
    }
    std::vector<Vec> gens;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        Vec g(n);
        g[f] = Scalar(1);
        for (auto [r, c] : pivot_of_row)
            g[c] = -red[r][f];
        gens.push_back(std::move(g));
    }
    return gens;
}

/// All monomial Lie pairs of the kind with degrees 1..j, enumerated in the
/// oracle's own order (monomials descending, units column-major).
struct LiePair {
    MatrixJet nl, nr;
};

inline std::vector<LiePair> enumerate_lie(jetnf::GroupKind kind, int m, int n,
                                          int p, int j, int N) {
    std::vector<LiePair> out;
    auto monos = jetnf::monomials_in_range(p, 1, j);
    std::reverse(monos.begin(), monos.end());
    auto mono_jet = [&](const jetnf::MultiIndex &I) {
        return jetnf::SeriesJet::monomial(N, I, Scalar(1));
    };
    using jetnf::GroupKind;
    for (const auto &I : monos) {
        if (kind != GroupKind::Right)
            for (int c = 0; c < m; ++c)
                for (int r = 0; r < m; ++r) {
                    MatrixJet nl = MatrixJet::zero(m, m, p, N);
                    nl.set(r, c, mono_jet(I));
                    MatrixJet nr = MatrixJet::zero(n, n, p, N);
                    if (kind == GroupKind::Conjugacy)
                        nr = nl;
                    if (kind == GroupKind::Congruence) {
                        nr = MatrixJet::zero(n, n, p, N);
                        nr.set(c, r, -mono_jet(I));
                    }
                    out.push_back({nl, nr});
                }
        if (kind == GroupKind::Right || kind == GroupKind::TwoSided)
            for (int c = 0; c < n; ++c)
                for (int r = 0; r < n; ++r) {
                    MatrixJet nr = MatrixJet::zero(n, n, p, N);
                    nr.set(r, c, mono_jet(I));
                    out.push_back({MatrixJet::zero(m, m, p, N), nr});
                }
    }
    return out;
}

/// Brute-force V^(j)(A): loop over all monomial Lie pairs, solve the
/// kernel condition pi_{j-1}(nu A) = 0 by elimination, and span the
/// degree-j images. Returns generators as coordinate vectors over the
/// (mono, row, col) basis of the homogeneous degree-j space, in the same
/// coordinate convention as jetnf::MatrixSpaceBasis.
inline std::vector<Vec> v_space_brute(const MatrixJet &a, jetnf::GroupKind kind,
                                      int j) {
    int m = a.rows(), n = a.cols(), p = a.num_vars(), N = a.trunc_order();
    auto pairs = enumerate_lie(kind, m, n, p, j, N);
    jetnf::MatrixSpaceBasis low(m, n, p, 0, j - 1), high(m, n, p, j, j);
    // Kernel condition rows: one per low coordinate, columns = pairs.
    std::vector<Vec> cond(low.dim(), Vec(pairs.size()));
    std::vector<Vec> images;
    for (size_t k = 0; k < pairs.size(); ++k) {
        MatrixJet img = (pairs[k].nl * a - a * pairs[k].nr).project(j);
        auto lowc = low.coords_of(img.project(j - 1));
        for (long r = 0; r < low.dim(); ++r)
            cond[r][k] = lowc[r];
        images.push_back(high.coords_of(img.homogeneous(j)));
    }
    auto kern = rtl_nullspace(cond, static_cast<int>(pairs.size()));
    std::vector<Vec> gens;
    for (const auto &kv : kern) {
        Vec img(high.dim());
        for (size_t k = 0; k < pairs.size(); ++k)
            if (!kv[k].is_zero())
                for (long r = 0; r < high.dim(); ++r)
                    img[r] += kv[k] * images[k][r];
        gens.push_back(std::move(img));
    }
    std::vector<int> piv;
    return rtl_eliminate(std::move(gens), piv);
}

} // namespace oracle
