#include "jetnf/series_jet.hpp"

namespace jetnf {

SeriesJet::SeriesJet(int num_vars, int trunc_order)
    : p_(num_vars), order_(trunc_order) {
    if (num_vars < 1)
        throw invalid_input("series needs at least one variable");
    if (trunc_order < 0)
        throw invalid_input("negative truncation order");
}

SeriesJet SeriesJet::constant(int num_vars, int trunc_order, const Scalar &c) {
    SeriesJet s(num_vars, trunc_order);
    s.set_coeff(MultiIndex(num_vars), c);
    return s;
}

SeriesJet SeriesJet::monomial(int trunc_order, const MultiIndex &I,
                              const Scalar &c) {
    SeriesJet s(I.num_vars(), trunc_order);
    s.set_coeff(I, c);
    return s;
}

SeriesJet SeriesJet::variable(int num_vars, int trunc_order, int var) {
    return monomial(trunc_order, MultiIndex::unit(num_vars, var), Scalar(1));
}

Scalar SeriesJet::coeff(const MultiIndex &I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? Scalar() : it->second;
}

void SeriesJet::set_coeff(const MultiIndex &I, const Scalar &c) {
    if (I.num_vars() != p_)
        throw dimension_error("multi-index variable count mismatch");
    if (I.degree() > order_)
        throw invalid_input("coefficient degree exceeds truncation order");
    if (c.is_zero())
        terms_.erase(I);
    else
        terms_[I] = c;
}

void SeriesJet::add_to_coeff(const MultiIndex &I, const Scalar &c) {
    set_coeff(I, coeff(I) + c);
}

int SeriesJet::degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

std::optional<int> SeriesJet::order() const {
    if (terms_.empty())
        return std::nullopt;
    return terms_.begin()->first.degree();
}

void SeriesJet::check_compatible(const SeriesJet &o) const {
    if (p_ != o.p_)
        throw dimension_error("series variable count mismatch");
    if (order_ != o.order_)
        throw dimension_error("series truncation order mismatch");
}

SeriesJet SeriesJet::operator-() const {
    SeriesJet r(p_, order_);
    for (const auto &[I, c] : terms_)
        r.terms_.emplace(I, -c);
    return r;
}

SeriesJet SeriesJet::operator+(const SeriesJet &o) const {
    check_compatible(o);
    SeriesJet r = *this;
    for (const auto &[I, c] : o.terms_)
        r.add_to_coeff(I, c);
    return r;
}

SeriesJet SeriesJet::operator-(const SeriesJet &o) const {
    check_compatible(o);
    SeriesJet r = *this;
    for (const auto &[I, c] : o.terms_)
        r.add_to_coeff(I, -c);
    return r;
}

SeriesJet SeriesJet::operator*(const SeriesJet &o) const {
    check_compatible(o);
    SeriesJet r(p_, order_);
    for (const auto &[I, a] : terms_) {
        int di = I.degree();
        for (const auto &[J, b] : o.terms_) {
            if (di + J.degree() > order_)
                continue;
            r.add_to_coeff(I + J, a * b);
        }
    }
    return r;
}

SeriesJet SeriesJet::scale(const Scalar &c) const {
    SeriesJet r(p_, order_);
    if (c.is_zero())
        return r;
    for (const auto &[I, a] : terms_)
        r.terms_.emplace(I, a * c);
    return r;
}

bool SeriesJet::operator==(const SeriesJet &o) const {
    return p_ == o.p_ && order_ == o.order_ && terms_ == o.terms_;
}

SeriesJet SeriesJet::project(int j) const {
    if (j < 0 || j > order_)
        throw invalid_input("projection degree out of range");
    SeriesJet r(p_, order_);
    for (const auto &[I, c] : terms_) {
        if (I.degree() > j)
            break; // graded order: everything later is higher degree
        r.terms_.emplace(I, c);
    }
    return r;
}

SeriesJet SeriesJet::homogeneous(int j) const {
    if (j < 0 || j > order_)
        throw invalid_input("homogeneous degree out of range");
    SeriesJet r(p_, order_);
    for (const auto &[I, c] : terms_) {
        int d = I.degree();
        if (d > j)
            break;
        if (d == j)
            r.terms_.emplace(I, c);
    }
    return r;
}

SeriesJet SeriesJet::derivative(int var) const {
    SeriesJet r(p_, order_);
    for (const auto &[I, c] : terms_) {
        int e = I[var];
        if (e == 0)
            continue;
        r.add_to_coeff(I - MultiIndex::unit(p_, var),
                       c * Scalar(mpq_class(e)));
    }
    return r;
}

SeriesJet SeriesJet::derivative(const MultiIndex &J) const {
    SeriesJet r(p_, order_);
    for (const auto &[I, c] : terms_) {
        if (!I.contains(J))
            continue;
        r.add_to_coeff(I - J, c * Scalar(mpq_class(I.falling_factorial(J))));
    }
    return r;
}

SeriesJet SeriesJet::conj() const {
    SeriesJet r(p_, order_);
    for (const auto &[I, c] : terms_)
        r.terms_.emplace(I, c.conj());
    return r;
}

SeriesJet SeriesJet::shift_up(const MultiIndex &I) const {
    SeriesJet r(p_, order_);
    int d = I.degree();
    for (const auto &[J, c] : terms_) {
        if (J.degree() + d > order_)
            break;
        r.terms_.emplace(J + I, c);
    }
    return r;
}

SeriesJet SeriesJet::shift_down_pow(int k) const {
    if (p_ != 1)
        throw invalid_input("shift_down_pow needs a one-variable jet");
    SeriesJet r(p_, order_);
    for (const auto &[I, c] : terms_) {
        if (I[0] < k)
            throw invalid_input("series order below requested shift");
        r.terms_.emplace(MultiIndex(std::vector<int>{I[0] - k}), c);
    }
    return r;
}

SeriesJet SeriesJet::unit_inverse() const {
    Scalar u0 = coeff(MultiIndex(p_));
    if (u0.is_zero())
        throw invalid_input("series is not a unit");
    // w_0 = 1/u_0, then kill the degree-d error of u*w one degree at a time.
    SeriesJet w = constant(p_, order_, u0.inverse());
    for (int d = 1; d <= order_; ++d) {
        SeriesJet err = (*this * w - constant(p_, order_, Scalar(1)))
                            .homogeneous(d);
        w = w - err.scale(u0.inverse());
    }
    return w;
}

} // namespace jetnf
