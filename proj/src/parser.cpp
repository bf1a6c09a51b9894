#include "jetnf/parser.hpp"

#include <map>

namespace jetnf {

namespace {

constexpr int kMaxExponent = 100000;

enum class Tok {
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Semi,
    Plus,
    Minus,
    Star,
    Caret,
    Number,
    Ident,
    End
};

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string &src) : src_(src) { advance(); }

    const Token &peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() &&
               (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                src_[pos_] == '\r')) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_ = {Tok::End, "", line_, col_};
            return;
        }
        char c = src_[pos_];
        auto single = [&](Tok k) {
            tok_ = {k, std::string(1, c), line_, col_};
            ++pos_;
            ++col_;
        };
        switch (c) {
        case '[': single(Tok::LBracket); return;
        case ']': single(Tok::RBracket); return;
        case '(': single(Tok::LParen); return;
        case ')': single(Tok::RParen); return;
        case ',': single(Tok::Comma); return;
        case ';': single(Tok::Semi); return;
        case '+': single(Tok::Plus); return;
        case '-': single(Tok::Minus); return;
        case '*': single(Tok::Star); return;
        case '^': single(Tok::Caret); return;
        default: break;
        }
        if (c >= '0' && c <= '9') {
            size_t start = pos_;
            while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9')
                ++pos_;
            // Adjacent '/digits' makes a rational literal.
            if (pos_ < src_.size() && src_[pos_] == '/' &&
                pos_ + 1 < src_.size() && src_[pos_ + 1] >= '0' &&
                src_[pos_ + 1] <= '9') {
                ++pos_;
                while (pos_ < src_.size() && src_[pos_] >= '0' &&
                       src_[pos_] <= '9')
                    ++pos_;
            }
            tok_ = {Tok::Number, src_.substr(start, pos_ - start), line_, col_};
            col_ += static_cast<int>(pos_ - start);
            return;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   ((src_[pos_] >= 'a' && src_[pos_] <= 'z') ||
                    (src_[pos_] >= 'A' && src_[pos_] <= 'Z') ||
                    (src_[pos_] >= '0' && src_[pos_] <= '9') ||
                    src_[pos_] == '_'))
                ++pos_;
            tok_ = {Tok::Ident, src_.substr(start, pos_ - start), line_, col_};
            col_ += static_cast<int>(pos_ - start);
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'",
                          line_, col_);
    }

    const std::string &src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_{Tok::End, "", 1, 1};
};

/// Exact polynomial without truncation; parsing happens here so that terms
/// above the truncation can be reported rather than silently vanish.
struct Poly {
    std::map<MultiIndex, Scalar> terms;

    void add(const MultiIndex &I, const Scalar &c) {
        auto it = terms.find(I);
        Scalar s = (it == terms.end() ? Scalar() : it->second) + c;
        if (s.is_zero()) {
            if (it != terms.end())
                terms.erase(it);
        } else {
            terms[I] = s;
        }
    }
};

Poly poly_const(int p, const Scalar &c) {
    Poly r;
    if (!c.is_zero())
        r.terms.emplace(MultiIndex(p), c);
    return r;
}

Poly poly_add(const Poly &a, const Poly &b) {
    Poly r = a;
    for (const auto &[I, c] : b.terms)
        r.add(I, c);
    return r;
}

Poly poly_neg(const Poly &a) {
    Poly r;
    for (const auto &[I, c] : a.terms)
        r.terms.emplace(I, -c);
    return r;
}

Poly poly_mul(const Poly &a, const Poly &b) {
    Poly r;
    for (const auto &[I, c] : a.terms)
        for (const auto &[J, d] : b.terms)
            r.add(I + J, c * d);
    return r;
}

class Parser {
public:
    Parser(const std::string &src, const std::vector<std::string> &vars,
           Field field)
        : lex_(src), vars_(vars), field_(field) {
        for (size_t k = 0; k < vars.size(); ++k) {
            if (vars[k] == "i")
                throw invalid_input(
                    "'i' is reserved for the imaginary unit and cannot be a "
                    "variable name");
            var_index_[vars[k]] = static_cast<int>(k);
        }
    }

    std::vector<std::vector<Poly>> parse_matrix() {
        expect(Tok::LBracket, "'['");
        std::vector<std::vector<Poly>> rows;
        rows.push_back(parse_row());
        while (lex_.peek().kind == Tok::Semi) {
            lex_.take();
            rows.push_back(parse_row());
        }
        Token close = lex_.peek();
        expect(Tok::RBracket, "']'");
        for (const auto &row : rows)
            if (row.size() != rows[0].size())
                throw parse_error("rows have different lengths", close.line,
                                  close.col);
        expect(Tok::End, "end of input");
        return rows;
    }

    Poly parse_single() {
        Poly e = parse_expr();
        expect(Tok::End, "end of input");
        return e;
    }

private:
    std::vector<Poly> parse_row() {
        std::vector<Poly> row;
        row.push_back(parse_expr());
        while (lex_.peek().kind == Tok::Comma) {
            lex_.take();
            row.push_back(parse_expr());
        }
        return row;
    }

    Poly parse_expr() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus)
            neg = lex_.take().kind == Tok::Minus;
        Poly acc = parse_term();
        if (neg)
            acc = poly_neg(acc);
        while (lex_.peek().kind == Tok::Plus ||
               lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            Poly t = parse_term();
            acc = poly_add(acc, minus ? poly_neg(t) : t);
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc = poly_mul(acc, parse_factor());
        }
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_atom();
        if (lex_.peek().kind == Tok::Caret) {
            Token caret = lex_.take();
            Token e = lex_.peek();
            if (e.kind != Tok::Number || e.text.find('/') != std::string::npos)
                throw parse_error("exponent must be a nonnegative integer",
                                  e.line, e.col);
            lex_.take();
            long expv = 0;
            for (char c : e.text) {
                expv = expv * 10 + (c - '0');
                if (expv > kMaxExponent)
                    throw parse_error("exponent too large", e.line, e.col);
            }
            (void)caret;
            Poly acc = poly_const(num_vars(), Scalar(1));
            for (long k = 0; k < expv; ++k)
                acc = poly_mul(acc, base);
            return acc;
        }
        return base;
    }

    Poly parse_atom() {
        Token t = lex_.peek();
        switch (t.kind) {
        case Tok::LParen: {
            lex_.take();
            Poly e = parse_expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        case Tok::Number: {
            lex_.take();
            return poly_const(num_vars(), Scalar(q_parse(t.text)));
        }
        case Tok::Ident: {
            lex_.take();
            if (t.text == "i") {
                if (field_ != Field::GaussianRational)
                    throw parse_error(
                        "imaginary unit needs the gaussian field", t.line,
                        t.col);
                return poly_const(num_vars(), Scalar::i());
            }
            auto it = var_index_.find(t.text);
            if (it == var_index_.end())
                throw parse_error("unknown variable '" + t.text + "'", t.line,
                                  t.col);
            Poly r;
            r.terms.emplace(MultiIndex::unit(num_vars(), it->second),
                            Scalar(1));
            return r;
        }
        default:
            throw parse_error("expected a value, variable or '('", t.line,
                              t.col);
        }
    }

    void expect(Tok k, const std::string &what) {
        Token t = lex_.peek();
        if (t.kind != k)
            throw parse_error("expected " + what, t.line, t.col);
        lex_.take();
    }

    int num_vars() const { return static_cast<int>(vars_.size()); }

    Lexer lex_;
    const std::vector<std::string> &vars_;
    Field field_;
    std::map<std::string, int> var_index_;
};

SeriesJet poly_to_jet(const Poly &poly, int p, int trunc_order,
                      std::vector<std::string> &warnings,
                      const std::string &where) {
    SeriesJet s(p, trunc_order);
    int dropped = 0;
    int max_deg = 0;
    for (const auto &[I, c] : poly.terms) {
        if (I.degree() > trunc_order) {
            ++dropped;
            max_deg = std::max(max_deg, I.degree());
            continue;
        }
        s.set_coeff(I, c);
    }
    if (dropped > 0)
        warnings.push_back(where + ": " + std::to_string(dropped) +
                           " term(s) of degree up to " +
                           std::to_string(max_deg) +
                           " above truncation order " +
                           std::to_string(trunc_order) + " dropped");
    return s;
}

} // namespace

ParseResult parse_poly_matrix(const std::string &text,
                              const std::vector<std::string> &variables,
                              int trunc_order, Field field) {
    if (variables.empty())
        throw invalid_input("at least one variable must be declared");
    Parser parser(text, variables, field);
    auto rows = parser.parse_matrix();
    int m = static_cast<int>(rows.size());
    int n = static_cast<int>(rows[0].size());
    int p = static_cast<int>(variables.size());
    ParseResult res{MatrixJet(m, n, p, trunc_order), {}};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            res.matrix.set(i, j,
                           poly_to_jet(rows[i][j], p, trunc_order,
                                       res.warnings,
                                       "entry (" + std::to_string(i + 1) +
                                           "," + std::to_string(j + 1) + ")"));
    return res;
}

SeriesJet parse_poly(const std::string &text,
                     const std::vector<std::string> &variables,
                     int trunc_order, Field field) {
    Parser parser(text, variables, field);
    std::vector<std::string> warnings;
    return poly_to_jet(parser.parse_single(),
                       static_cast<int>(variables.size()), trunc_order,
                       warnings, "expression");
}

} // namespace jetnf
