#pragma once

#include <gmpxx.h>
#include <string>

#include "jetnf/errors.hpp"

namespace jetnf {

/// Coefficient field. Rational is the subfield of GaussianRational with
/// zero imaginary part; these two are the only fields supported (the inner
/// product downstream needs a subfield of C closed under conjugation).
enum class Field : unsigned char { Rational, GaussianRational };

/// Exact element of Q or Q(i). Values are immutable in spirit: all
/// arithmetic returns fresh scalars, and the rational components are kept
/// canonical (lowest terms, positive denominator) so equality is structural.
class Scalar {
public:
    Scalar() : re_(0), im_(0), field_(Field::Rational) {}
    Scalar(long v) : re_(v), im_(0), field_(Field::Rational) {}
    explicit Scalar(mpq_class re, Field f = Field::Rational);
    Scalar(mpq_class re, mpq_class im, Field f);

    /// num/den, canonicalized.
    static Scalar rational(long num, long den);
    static Scalar gaussian(mpq_class re, mpq_class im);
    static Scalar zero(Field f) { return Scalar(mpq_class(0), f); }
    static Scalar one(Field f) { return Scalar(mpq_class(1), f); }
    /// The imaginary unit.
    static Scalar i();

    const mpq_class &re() const { return re_; }
    const mpq_class &im() const { return im_; }
    Field field() const { return field_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar operator-() const;
    Scalar operator+(const Scalar &o) const;
    Scalar operator-(const Scalar &o) const;
    Scalar operator*(const Scalar &o) const;
    Scalar operator/(const Scalar &o) const; // throws invalid_input on /0
    Scalar &operator+=(const Scalar &o) { return *this = *this + o; }
    Scalar &operator-=(const Scalar &o) { return *this = *this - o; }
    Scalar &operator*=(const Scalar &o) { return *this = *this * o; }
    Scalar &operator/=(const Scalar &o) { return *this = *this / o; }

    bool operator==(const Scalar &o) const {
        return re_ == o.re_ && im_ == o.im_;
    }
    bool operator!=(const Scalar &o) const { return !(*this == o); }

    /// Complex conjugate; identity on Q.
    Scalar conj() const;
    /// s * conj(s), a nonnegative rational (returned in the same field).
    Scalar norm() const;
    Scalar inverse() const;

    /// "num/den" (den omitted when 1), or "a/b+c/d*i" when im != 0.
    std::string to_string() const;
    /// Inverse of to_string; also accepts plain integers.
    static Scalar parse(const std::string &text);

private:
    // Arithmetic results of mpq_class are already canonical; this tag skips
    // the re-canonicalization that raw user input needs.
    struct raw_t {};
    Scalar(raw_t, mpq_class re, mpq_class im, Field f)
        : re_(std::move(re)), im_(std::move(im)), field_(f) {}

    mpq_class re_, im_;
    Field field_;
};

inline Scalar operator*(long a, const Scalar &s) { return Scalar(a) * s; }

/// Lowest-terms rational as a string, "n" or "n/d".
std::string q_to_string(const mpq_class &q);
/// Parses "n" or "n/d"; throws invalid_input on malformed text or d == 0.
mpq_class q_parse(const std::string &text);

} // namespace jetnf
