#pragma once

#include <json.hpp>

#include "jetnf/group.hpp"

namespace jetnf {

/// Canonical text form: terms in graded-lex order, explicit '*' between
/// coefficient and monomial parts, e.g. "1/2*x1^2*x2 - 3*x2^3". Gaussian
/// coefficients with two components print parenthesized. parse_poly of the
/// output reproduces the jet exactly.
std::string series_to_string(const SeriesJet &s,
                             const std::vector<std::string> &vars);

/// "[a, b; c, d]" with entries in canonical text form.
std::string matrix_to_string(const MatrixJet &a,
                             const std::vector<std::string> &vars);

std::vector<std::string> default_var_names(int p);

/// JSON forms (schema-stable ordered objects).
nlohmann::ordered_json series_to_json(const SeriesJet &s);
nlohmann::ordered_json matrix_to_json(const MatrixJet &a);
/// {kind, U, V?}; V is omitted where the kind determines it.
nlohmann::ordered_json group_element_to_json(const GroupElementJet &g);

} // namespace jetnf
