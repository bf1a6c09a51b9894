#pragma once

#include <gmpxx.h>
#include <vector>

#include "jetnf/errors.hpp"

namespace jetnf {

/// Exponent vector I = (I_1 .. I_p) of a monomial x^I.
///
/// The total order is graded lexicographic: lower total degree first, and
/// within a degree the monomial with the larger power of the earliest
/// variable comes first (x1^2 < x1*x2 < x2^2 in ascending order). Every
/// basis enumeration and serialization in the library iterates in this
/// order, so outputs are deterministic.
class MultiIndex {
public:
    explicit MultiIndex(int p) : e_(p, 0) {}
    explicit MultiIndex(std::vector<int> e);
    /// Unit index for variable `var` (0-based).
    static MultiIndex unit(int p, int var);

    int num_vars() const { return static_cast<int>(e_.size()); }
    int degree() const;
    /// I! = I_1! ... I_p!
    mpz_class factorial() const;
    int operator[](int k) const { return e_[k]; }
    const std::vector<int> &exponents() const { return e_; }

    bool operator==(const MultiIndex &o) const { return e_ == o.e_; }
    bool operator!=(const MultiIndex &o) const { return e_ != o.e_; }
    /// Graded-lex strict order (see class comment).
    bool operator<(const MultiIndex &o) const;

    MultiIndex operator+(const MultiIndex &o) const;
    /// Componentwise difference; requires *this >= o componentwise.
    MultiIndex operator-(const MultiIndex &o) const;
    /// Componentwise o <= *this (o divides x^I).
    bool contains(const MultiIndex &o) const;

    /// falling factorial prod_k I_k!/(I_k - J_k)!; the coefficient
    /// produced by d^J x^I = ff * x^(I-J). Requires contains(J).
    mpz_class falling_factorial(const MultiIndex &J) const;

private:
    std::vector<int> e_;
};

/// All multi-indices of the given total degree over p variables, ascending.
std::vector<MultiIndex> monomials_of_degree(int p, int degree);
/// All multi-indices with d_lo <= degree <= d_hi, ascending graded-lex.
std::vector<MultiIndex> monomials_in_range(int p, int d_lo, int d_hi);
/// Number of monomials of exact total degree d over p variables.
long monomial_count(int p, int d);

} // namespace jetnf
