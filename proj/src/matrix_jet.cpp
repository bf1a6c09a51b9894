#include "jetnf/matrix_jet.hpp"

#include <set>

namespace jetnf {

MatrixJet::MatrixJet(int rows, int cols, int num_vars, int trunc_order)
    : m_(rows), n_(cols), p_(num_vars), order_(trunc_order) {
    if (rows < 1 || cols < 1)
        throw invalid_input("matrix jet needs positive dimensions");
    e_.assign(static_cast<size_t>(m_) * n_, SeriesJet(num_vars, trunc_order));
}

MatrixJet MatrixJet::identity(int n, int num_vars, int trunc_order) {
    MatrixJet r(n, n, num_vars, trunc_order);
    for (int i = 0; i < n; ++i)
        r.at(i, i) = SeriesJet::constant(num_vars, trunc_order, Scalar(1));
    return r;
}

MatrixJet MatrixJet::zero(int rows, int cols, int num_vars, int trunc_order) {
    return MatrixJet(rows, cols, num_vars, trunc_order);
}

const SeriesJet &MatrixJet::at(int i, int j) const {
    return e_.at(static_cast<size_t>(i) * n_ + j);
}

SeriesJet &MatrixJet::at(int i, int j) {
    return e_.at(static_cast<size_t>(i) * n_ + j);
}

void MatrixJet::set(int i, int j, SeriesJet s) {
    if (s.num_vars() != p_ || s.trunc_order() != order_)
        throw dimension_error("entry configuration mismatch");
    at(i, j) = std::move(s);
}

std::vector<Scalar> MatrixJet::coeff_matrix(const MultiIndex &I) const {
    std::vector<Scalar> r;
    r.reserve(e_.size());
    for (const auto &s : e_)
        r.push_back(s.coeff(I));
    return r;
}

std::vector<MultiIndex> MatrixJet::support() const {
    std::set<MultiIndex> s;
    for (const auto &entry : e_)
        for (const auto &[I, c] : entry.terms())
            s.insert(I);
    return {s.begin(), s.end()};
}

bool MatrixJet::is_zero() const {
    for (const auto &s : e_)
        if (!s.is_zero())
            return false;
    return true;
}

std::optional<int> MatrixJet::order() const {
    std::optional<int> best;
    for (const auto &s : e_) {
        auto o = s.order();
        if (o && (!best || *o < *best))
            best = o;
    }
    return best;
}

int MatrixJet::degree() const {
    int d = -1;
    for (const auto &s : e_)
        d = std::max(d, s.degree());
    return d;
}

void MatrixJet::check_same_config(const MatrixJet &o) const {
    if (p_ != o.p_)
        throw dimension_error("matrix jet variable count mismatch");
    if (order_ != o.order_)
        throw dimension_error("matrix jet truncation order mismatch");
}

MatrixJet MatrixJet::operator-() const {
    MatrixJet r = *this;
    for (auto &s : r.e_)
        s = -s;
    return r;
}

MatrixJet MatrixJet::operator+(const MatrixJet &o) const {
    check_same_config(o);
    if (m_ != o.m_ || n_ != o.n_)
        throw dimension_error("matrix jet shape mismatch");
    MatrixJet r = *this;
    for (size_t k = 0; k < e_.size(); ++k)
        r.e_[k] = r.e_[k] + o.e_[k];
    return r;
}

MatrixJet MatrixJet::operator-(const MatrixJet &o) const {
    return *this + (-o);
}

MatrixJet MatrixJet::operator*(const MatrixJet &o) const {
    check_same_config(o);
    if (n_ != o.m_)
        throw dimension_error("matrix jet product shape mismatch");
    MatrixJet r(m_, o.n_, p_, order_);
    for (int i = 0; i < m_; ++i)
        for (int k = 0; k < n_; ++k) {
            const SeriesJet &aik = at(i, k);
            if (aik.is_zero())
                continue;
            for (int j = 0; j < o.n_; ++j) {
                if (o.at(k, j).is_zero())
                    continue;
                r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
            }
        }
    return r;
}

MatrixJet MatrixJet::scale(const Scalar &c) const {
    MatrixJet r = *this;
    for (auto &s : r.e_)
        s = s.scale(c);
    return r;
}

bool MatrixJet::operator==(const MatrixJet &o) const {
    return m_ == o.m_ && n_ == o.n_ && p_ == o.p_ && order_ == o.order_ &&
           e_ == o.e_;
}

MatrixJet MatrixJet::project(int j) const {
    MatrixJet r = *this;
    for (auto &s : r.e_)
        s = s.project(j);
    return r;
}

MatrixJet MatrixJet::homogeneous(int j) const {
    MatrixJet r = *this;
    for (auto &s : r.e_)
        s = s.homogeneous(j);
    return r;
}

MatrixJet MatrixJet::transpose() const {
    MatrixJet r(n_, m_, p_, order_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

MatrixJet MatrixJet::conj_transpose() const {
    MatrixJet r(n_, m_, p_, order_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j)
            r.at(j, i) = at(i, j).conj();
    return r;
}

MatrixJet MatrixJet::conj() const {
    MatrixJet r = *this;
    for (auto &s : r.e_)
        s = s.conj();
    return r;
}

MatrixJet MatrixJet::derivative(const MultiIndex &J) const {
    MatrixJet r = *this;
    for (auto &s : r.e_)
        s = s.derivative(J);
    return r;
}

Scalar inner_product(const MatrixJet &a, const MatrixJet &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("inner product shape mismatch");
    if (a.num_vars() != b.num_vars() || a.trunc_order() != b.trunc_order())
        throw dimension_error("inner product configuration mismatch");
    // <A,B> = sum_I I! sum_{r,c} conj(b_I[r][c]) a_I[r][c], entry by entry.
    Scalar acc;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (const auto &[I, ca] : a.at(i, j).terms()) {
                Scalar cb = b.at(i, j).coeff(I);
                if (cb.is_zero())
                    continue;
                acc += ca * cb.conj() * Scalar(mpq_class(I.factorial()));
            }
    return acc;
}

MatrixJet apply_diff_op(const MatrixJet &b, const MatrixJet &p) {
    if (b.rows() != p.rows())
        throw dimension_error("differential operator shape mismatch");
    if (b.num_vars() != p.num_vars() || b.trunc_order() != p.trunc_order())
        throw dimension_error("differential operator configuration mismatch");
    MatrixJet acc(b.cols(), p.cols(), p.num_vars(), p.trunc_order());
    for (const auto &I : b.support()) {
        // conj(B_I^T) * d^I P: assemble the constant matrix product with
        // series entries on the right.
        MatrixJet dp = p.derivative(I);
        if (dp.is_zero())
            continue;
        for (int r = 0; r < b.cols(); ++r)
            for (int c = 0; c < p.cols(); ++c) {
                SeriesJet s(p.num_vars(), p.trunc_order());
                for (int k = 0; k < b.rows(); ++k) {
                    Scalar w = b.at(k, r).coeff(I).conj();
                    if (w.is_zero())
                        continue;
                    s = s + dp.at(k, c).scale(w);
                }
                acc.at(r, c) = acc.at(r, c) + s;
            }
    }
    return acc;
}

std::pair<MatrixJet, MatrixJet> d_operator(const MatrixJet &b,
                                           const MatrixJet &p) {
    if (b.rows() != p.rows() || b.cols() != p.cols())
        throw dimension_error("d_operator shape mismatch");
    MatrixJet nu_l =
        apply_diff_op(b.transpose(), p.transpose()).transpose();
    MatrixJet nu_r = -apply_diff_op(b, p);
    return {nu_l, nu_r};
}

} // namespace jetnf
