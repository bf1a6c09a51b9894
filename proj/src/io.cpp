#include "jetnf/io.hpp"

namespace jetnf {

std::vector<std::string> default_var_names(int p) {
    std::vector<std::string> v;
    for (int k = 1; k <= p; ++k)
        v.push_back("x" + std::to_string(k));
    return v;
}

namespace {

std::string mono_text(const MultiIndex &I,
                      const std::vector<std::string> &vars) {
    std::string s;
    for (int k = 0; k < I.num_vars(); ++k) {
        if (I[k] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += vars[k];
        if (I[k] > 1)
            s += "^" + std::to_string(I[k]);
    }
    return s;
}

/// Splits a coefficient into (is_negative, magnitude-ish text) so terms can
/// be joined with " + " / " - ". Two-component Gaussian values are treated
/// as positive and parenthesized.
std::pair<bool, std::string> coeff_text(const Scalar &c) {
    if (c.im() == 0) {
        bool neg = c.re() < 0;
        mpq_class mag = neg ? mpq_class(-c.re()) : c.re();
        return {neg, q_to_string(mag)};
    }
    if (c.re() == 0) {
        bool neg = c.im() < 0;
        mpq_class mag = neg ? mpq_class(-c.im()) : c.im();
        if (mag == 1)
            return {neg, "i"};
        return {neg, q_to_string(mag) + "*i"};
    }
    return {false, "(" + c.to_string() + ")"};
}

} // namespace

std::string series_to_string(const SeriesJet &s,
                             const std::vector<std::string> &vars) {
    if (s.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[I, c] : s.terms()) {
        auto [neg, mag] = coeff_text(c);
        std::string mono = mono_text(I, vars);
        std::string body;
        if (mono.empty())
            body = mag;
        else if (mag == "1")
            body = mono;
        else
            body = mag + "*" + mono;
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

std::string matrix_to_string(const MatrixJet &a,
                             const std::vector<std::string> &vars) {
    std::string out = "[";
    for (int i = 0; i < a.rows(); ++i) {
        if (i)
            out += "; ";
        for (int j = 0; j < a.cols(); ++j) {
            if (j)
                out += ", ";
            out += series_to_string(a.at(i, j), vars);
        }
    }
    return out + "]";
}

nlohmann::ordered_json series_to_json(const SeriesJet &s) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &[I, c] : s.terms()) {
        nlohmann::ordered_json term;
        term["exps"] = I.exponents();
        term["re"] = q_to_string(c.re());
        term["im"] = q_to_string(c.im());
        arr.push_back(std::move(term));
    }
    return arr;
}

nlohmann::ordered_json matrix_to_json(const MatrixJet &a) {
    nlohmann::ordered_json j;
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    j["num_vars"] = a.num_vars();
    j["trunc_order"] = a.trunc_order();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (int i = 0; i < a.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 0; c < a.cols(); ++c)
            row.push_back(series_to_json(a.at(i, c)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

nlohmann::ordered_json group_element_to_json(const GroupElementJet &g) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(g.kind);
    j["U"] = matrix_to_json(g.u);
    if (g.kind == GroupKind::TwoSided || g.kind == GroupKind::Right)
        j["V"] = matrix_to_json(g.v);
    return j;
}

} // namespace jetnf
