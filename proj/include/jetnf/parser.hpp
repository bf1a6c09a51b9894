#pragma once

#include <vector>

#include "jetnf/matrix_jet.hpp"

namespace jetnf {

struct ParseResult {
    MatrixJet matrix;
    /// Human-readable notices, e.g. terms above the truncation dropped.
    std::vector<std::string> warnings;
};

/// Parses a polynomial matrix:
///   matrix := '[' row (';' row)* ']'
///   row    := expr (',' expr)*
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := '(' expr ')' | rational | 'i' | variable
/// Rationals are written n or n/d with no spaces around '/'. The imaginary
/// unit 'i' is only accepted in Gaussian mode and is reserved (it cannot be
/// declared as a variable). Variables map to x_1..x_p in declaration order.
/// Exact terms of degree above trunc_order are dropped with a warning.
/// Errors carry 1-based line/column positions.
ParseResult parse_poly_matrix(const std::string &text,
                              const std::vector<std::string> &variables,
                              int trunc_order, Field field);

/// Single polynomial expression (no brackets), same grammar as one entry.
SeriesJet parse_poly(const std::string &text,
                     const std::vector<std::string> &variables,
                     int trunc_order, Field field);

} // namespace jetnf
