#include "jetnf/multi_index.hpp"

namespace jetnf {

MultiIndex::MultiIndex(std::vector<int> e) : e_(std::move(e)) {
    if (e_.empty())
        throw invalid_input("multi-index needs at least one variable");
    for (int v : e_)
        if (v < 0)
            throw invalid_input("negative exponent in multi-index");
}

MultiIndex MultiIndex::unit(int p, int var) {
    MultiIndex I(p);
    I.e_.at(var) = 1;
    return I;
}

int MultiIndex::degree() const {
    int d = 0;
    for (int v : e_)
        d += v;
    return d;
}

mpz_class MultiIndex::factorial() const {
    mpz_class f = 1;
    for (int v : e_)
        for (int k = 2; k <= v; ++k)
            f *= k;
    return f;
}

bool MultiIndex::operator<(const MultiIndex &o) const {
    int da = degree(), db = o.degree();
    if (da != db)
        return da < db;
    // Same degree: bigger exponent on the earliest differing variable wins
    // the earlier slot, i.e. x1^d is the first degree-d monomial.
    for (size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k])
            return e_[k] > o.e_[k];
    return false;
}

MultiIndex MultiIndex::operator+(const MultiIndex &o) const {
    if (e_.size() != o.e_.size())
        throw dimension_error("multi-index variable count mismatch");
    MultiIndex r = *this;
    for (size_t k = 0; k < e_.size(); ++k)
        r.e_[k] += o.e_[k];
    return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex &o) const {
    if (!contains(o))
        throw invalid_input("multi-index difference would be negative");
    MultiIndex r = *this;
    for (size_t k = 0; k < e_.size(); ++k)
        r.e_[k] -= o.e_[k];
    return r;
}

bool MultiIndex::contains(const MultiIndex &o) const {
    if (e_.size() != o.e_.size())
        return false;
    for (size_t k = 0; k < e_.size(); ++k)
        if (e_[k] < o.e_[k])
            return false;
    return true;
}

mpz_class MultiIndex::falling_factorial(const MultiIndex &J) const {
    mpz_class f = 1;
    for (size_t k = 0; k < e_.size(); ++k)
        for (int v = e_[k]; v > e_[k] - J.e_[k]; --v)
            f *= v;
    return f;
}

std::vector<MultiIndex> monomials_of_degree(int p, int degree) {
    std::vector<MultiIndex> out;
    std::vector<int> cur(p, 0);
    // Recursive enumeration emitting in descending power of x1, which is
    // exactly the ascending graded-lex order within the degree.
    auto rec = [&](auto &&self, int pos, int rest) -> void {
        if (pos == p - 1) {
            cur[pos] = rest;
            out.emplace_back(cur);
            return;
        }
        for (int v = rest; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (p >= 1 && degree >= 0)
        rec(rec, 0, degree);
    return out;
}

std::vector<MultiIndex> monomials_in_range(int p, int d_lo, int d_hi) {
    std::vector<MultiIndex> out;
    for (int d = d_lo; d <= d_hi; ++d) {
        auto layer = monomials_of_degree(p, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

long monomial_count(int p, int d) {
    // C(d + p - 1, p - 1)
    long num = 1, den = 1;
    for (int k = 1; k <= p - 1; ++k) {
        num *= d + k;
        den *= k;
    }
    return num / den;
}

} // namespace jetnf
