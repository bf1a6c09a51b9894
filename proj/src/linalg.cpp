#include "jetnf/linalg.hpp"

#include "jetnf/errors.hpp"

namespace jetnf {

ScalarMat ScalarMat::identity(int n) {
    ScalarMat r(n, n);
    for (int i = 0; i < n; ++i)
        r.at(i, i) = Scalar(1);
    return r;
}

ScalarMat ScalarMat::transpose() const {
    ScalarMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

ScalarMat ScalarMat::conj_transpose() const {
    ScalarMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j).conj();
    return r;
}

ScalarMat ScalarMat::operator*(const ScalarMat &o) const {
    if (cols_ != o.rows_)
        throw dimension_error("scalar matrix product shape mismatch");
    ScalarMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero())
                continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

std::vector<Scalar> ScalarMat::mul_vec(const std::vector<Scalar> &v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw dimension_error("matrix-vector shape mismatch");
    std::vector<Scalar> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero())
                r[i] += at(i, j) * v[j];
    return r;
}

void ScalarMat::append_row(const std::vector<Scalar> &row) {
    if (rows_ == 0 && cols_ == 0)
        cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_)
        throw dimension_error("appended row has wrong length");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

bool ScalarMat::operator==(const ScalarMat &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::vector<int> ScalarMat::rref(int pivot_col_limit) {
    int climit = pivot_col_limit < 0 ? cols_ : pivot_col_limit;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < climit && r < rows_; ++c) {
        // The operator matrices here are sparse; picking the sparsest
        // eligible pivot row limits fill-in. The reduced form is unique,
        // so the choice cannot change the result.
        int pr = -1;
        int best_nnz = cols_ + 1;
        for (int i = r; i < rows_; ++i) {
            if (at(i, c).is_zero())
                continue;
            int nnz = 0;
            for (int j = c; j < cols_ && nnz < best_nnz; ++j)
                if (!at(i, j).is_zero())
                    ++nnz;
            if (nnz < best_nnz) {
                best_nnz = nnz;
                pr = i;
            }
        }
        if (pr < 0)
            continue;
        if (pr != r)
            for (int j = 0; j < cols_; ++j)
                std::swap(at(pr, j), at(r, j));
        if (at(r, c) != Scalar(1)) {
            Scalar inv = at(r, c).inverse();
            for (int j = c; j < cols_; ++j)
                if (!at(r, j).is_zero())
                    at(r, j) *= inv;
        }
        for (int i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero())
                continue;
            Scalar f = at(i, c);
            for (int j = c; j < cols_; ++j) {
                const Scalar &prj = at(r, j);
                if (prj.is_zero())
                    continue;
                at(i, j) -= f * prj;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Scalar>> nullspace(ScalarMat m, bool canonical) {
    int n = m.cols();
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Scalar>> gens;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Scalar> g(n);
        g[f] = Scalar(1);
        for (size_t k = 0; k < pivots.size(); ++k)
            g[pivots[k]] = -m.at(static_cast<int>(k), f);
        gens.push_back(std::move(g));
    }
    // Re-reduce so the generator list itself is literal canonical RREF.
    if (canonical && !gens.empty()) {
        ScalarMat gm(0, n);
        for (const auto &g : gens)
            gm.append_row(g);
        gm.rref();
        gens.clear();
        for (int i = 0; i < gm.rows(); ++i) {
            std::vector<Scalar> row(n);
            bool nonzero = false;
            for (int j = 0; j < n; ++j) {
                row[j] = gm.at(i, j);
                nonzero = nonzero || !row[j].is_zero();
            }
            if (nonzero)
                gens.push_back(std::move(row));
        }
    }
    return gens;
}

std::optional<std::vector<Scalar>> solve(ScalarMat m, std::vector<Scalar> b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw dimension_error("solve: rhs length mismatch");
    int n = m.cols();
    ScalarMat aug(m.rows(), n + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    for (int c : pivots)
        if (c == n)
            return std::nullopt;
    std::vector<Scalar> x(n);
    for (size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = aug.at(static_cast<int>(k), n);
    return x;
}

std::optional<ScalarMat> invert(const ScalarMat &m) {
    if (m.rows() != m.cols())
        throw dimension_error("invert: matrix not square");
    int n = m.rows();
    ScalarMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1)
        return std::nullopt;
    ScalarMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<Scalar> reduce_against(const std::vector<std::vector<Scalar>> &rref_rows,
                                   const std::vector<int> &pivots,
                                   std::vector<Scalar> v) {
    for (size_t k = 0; k < rref_rows.size(); ++k) {
        Scalar f = v[pivots[k]];
        if (f.is_zero())
            continue;
        for (size_t j = 0; j < v.size(); ++j)
            if (!rref_rows[k][j].is_zero())
                v[j] -= f * rref_rows[k][j];
    }
    return v;
}

std::vector<Scalar> coords_in_rref(const std::vector<std::vector<Scalar>> &rref_rows,
                                   const std::vector<int> &pivots,
                                   const std::vector<Scalar> &v) {
    std::vector<Scalar> c(rref_rows.size());
    for (size_t k = 0; k < rref_rows.size(); ++k)
        c[k] = v[pivots[k]];
    return c;
}

} // namespace jetnf
