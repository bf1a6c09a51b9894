#include "jetnf/scalar.hpp"

namespace jetnf {

namespace {

Field join(Field a, Field b) {
    return (a == Field::GaussianRational || b == Field::GaussianRational)
               ? Field::GaussianRational
               : Field::Rational;
}

} // namespace

Scalar::Scalar(mpq_class re, Field f) : re_(std::move(re)), im_(0), field_(f) {
    re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im, Field f)
    : re_(std::move(re)), im_(std::move(im)), field_(f) {
    re_.canonicalize();
    im_.canonicalize();
    if (field_ == Field::Rational && im_ != 0)
        throw invalid_input("nonzero imaginary part in rational mode");
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0)
        throw invalid_input("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::gaussian(mpq_class re, mpq_class im) {
    return Scalar(std::move(re), std::move(im), Field::GaussianRational);
}

Scalar Scalar::i() { return gaussian(0, 1); }

Scalar Scalar::operator-() const {
    return Scalar(raw_t{}, -re_, -im_, field_);
}

Scalar Scalar::operator+(const Scalar &o) const {
    if (im_ == 0 && o.im_ == 0)
        return Scalar(raw_t{}, re_ + o.re_, 0, join(field_, o.field_));
    return Scalar(raw_t{}, re_ + o.re_, im_ + o.im_, join(field_, o.field_));
}

Scalar Scalar::operator-(const Scalar &o) const {
    if (im_ == 0 && o.im_ == 0)
        return Scalar(raw_t{}, re_ - o.re_, 0, join(field_, o.field_));
    return Scalar(raw_t{}, re_ - o.re_, im_ - o.im_, join(field_, o.field_));
}

Scalar Scalar::operator*(const Scalar &o) const {
    // Pure-rational products skip the two zero cross terms.
    if (im_ == 0 && o.im_ == 0)
        return Scalar(raw_t{}, re_ * o.re_, 0, join(field_, o.field_));
    return Scalar(raw_t{}, re_ * o.re_ - im_ * o.im_,
                  re_ * o.im_ + im_ * o.re_, join(field_, o.field_));
}

Scalar Scalar::inverse() const {
    if (im_ == 0) {
        if (re_ == 0)
            throw invalid_input("division by zero scalar");
        return Scalar(raw_t{}, 1 / re_, 0, field_);
    }
    mpq_class n = re_ * re_ + im_ * im_;
    return Scalar(raw_t{}, re_ / n, -im_ / n, field_);
}

Scalar Scalar::operator/(const Scalar &o) const { return *this * o.inverse(); }

Scalar Scalar::conj() const { return Scalar(raw_t{}, re_, -im_, field_); }

Scalar Scalar::norm() const {
    return Scalar(raw_t{}, re_ * re_ + im_ * im_, 0, field_);
}

std::string q_to_string(const mpq_class &q) { return q.get_str(); }

mpq_class q_parse(const std::string &text) {
    if (text.empty())
        throw invalid_input("empty rational literal");
    for (size_t k = 0; k < text.size(); ++k) {
        char c = text[k];
        bool ok = (c >= '0' && c <= '9') || c == '/' ||
                  (c == '-' && (k == 0 || text[k - 1] == '/'));
        if (!ok)
            throw invalid_input("malformed rational literal: " + text);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw invalid_input("malformed rational literal: " + text);
    if (q.get_den() == 0)
        throw invalid_input("zero denominator in: " + text);
    q.canonicalize();
    return q;
}

std::string Scalar::to_string() const {
    if (im_ == 0)
        return q_to_string(re_);
    std::string s = q_to_string(re_);
    if (im_ > 0)
        s += "+" + q_to_string(im_) + "*i";
    else
        s += "-" + q_to_string(mpq_class(-im_)) + "*i";
    return s;
}

Scalar Scalar::parse(const std::string &text) {
    // Split at the '+' or '-' that separates the real and imaginary parts;
    // signs directly after '/' or at position 0 belong to a component.
    size_t split = std::string::npos;
    for (size_t k = 1; k < text.size(); ++k) {
        if ((text[k] == '+' || text[k] == '-') && text[k - 1] != '/')
            split = k;
    }
    auto strip_i = [](std::string part) -> std::string {
        // "c*i" -> "c", "i" -> "1", "-i" -> "-1"
        if (part == "i")
            return "1";
        if (part == "-i" || part == "+i")
            return part.substr(0, 1) + "1";
        if (part.size() >= 2 && part.substr(part.size() - 2) == "*i")
            return part.substr(0, part.size() - 2);
        throw invalid_input("malformed scalar literal");
    };
    if (text.find('i') == std::string::npos)
        return Scalar(q_parse(text));
    if (split == std::string::npos)
        return gaussian(0, q_parse(strip_i(text)));
    std::string re_part = text.substr(0, split);
    std::string im_part = text.substr(split); // keeps the sign
    mpq_class im = q_parse(strip_i(im_part.substr(1)));
    if (im_part[0] == '-')
        im = -im;
    return gaussian(q_parse(re_part), im);
}

} // namespace jetnf
