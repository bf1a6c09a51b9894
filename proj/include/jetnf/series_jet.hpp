#pragma once

#include <map>
#include <optional>

#include "jetnf/multi_index.hpp"
#include "jetnf/scalar.hpp"

namespace jetnf {

/// Truncated formal power series: an exact polynomial representative of an
/// element of K[[x_1..x_p]] / m^(N+1).
///
/// Invariants: no zero coefficients are stored, and all stored indices have
/// degree <= trunc_order, so equality is structural. Binary operations
/// require both operands to share num_vars and trunc_order; there is no
/// silent precision adjustment.
class SeriesJet {
public:
    SeriesJet(int num_vars, int trunc_order);
    static SeriesJet constant(int num_vars, int trunc_order, const Scalar &c);
    static SeriesJet monomial(int trunc_order, const MultiIndex &I,
                              const Scalar &c);
    /// The coordinate x_var (0-based) as a jet.
    static SeriesJet variable(int num_vars, int trunc_order, int var);

    int num_vars() const { return p_; }
    int trunc_order() const { return order_; }
    const std::map<MultiIndex, Scalar> &terms() const { return terms_; }

    Scalar coeff(const MultiIndex &I) const;
    /// Sets one coefficient; degree(I) > trunc_order is rejected.
    void set_coeff(const MultiIndex &I, const Scalar &c);
    void add_to_coeff(const MultiIndex &I, const Scalar &c);

    bool is_zero() const { return terms_.empty(); }
    /// Largest stored total degree (-1 for the zero jet).
    int degree() const;
    /// Smallest stored total degree; nullopt when zero through the truncation.
    std::optional<int> order() const;

    SeriesJet operator-() const;
    SeriesJet operator+(const SeriesJet &o) const;
    SeriesJet operator-(const SeriesJet &o) const;
    /// Exact product with all terms of degree > trunc_order discarded.
    SeriesJet operator*(const SeriesJet &o) const;
    SeriesJet scale(const Scalar &c) const;
    bool operator==(const SeriesJet &o) const;
    bool operator!=(const SeriesJet &o) const { return !(*this == o); }

    /// pi_j: drop all terms of degree > j. Requires 0 <= j <= trunc_order.
    SeriesJet project(int j) const;
    /// Degree-j homogeneous summand (pi_j - pi_{j-1}).
    SeriesJet homogeneous(int j) const;
    /// Exact d/dx_var.
    SeriesJet derivative(int var) const;
    /// d^J / dx^J, iterated exact derivative.
    SeriesJet derivative(const MultiIndex &J) const;
    /// Coefficient-wise complex conjugation.
    SeriesJet conj() const;

    /// Multiply by x^I, dropping terms past the truncation.
    SeriesJet shift_up(const MultiIndex &I) const;
    /// Divide by x_0^k for one-variable jets of order >= k. Degrees above
    /// trunc_order - k are unknown after the shift and come back as zero;
    /// callers must not rely on them.
    SeriesJet shift_down_pow(int k) const;
    /// Multiplicative inverse of a unit (nonzero constant term), exact
    /// through the truncation.
    SeriesJet unit_inverse() const;

private:
    void check_compatible(const SeriesJet &o) const;

    int p_;
    int order_;
    std::map<MultiIndex, Scalar> terms_;
};

} // namespace jetnf
