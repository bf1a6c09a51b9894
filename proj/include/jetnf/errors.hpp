#pragma once

#include <stdexcept>
#include <string>

namespace jetnf {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shape or truncation-order mismatch between operands.
struct dimension_error : error {
    using error::error;
};

/// Input outside the operation's domain (singular constant term,
/// unsupported group kind, degree out of range, ...).
struct invalid_input : error {
    using error::error;
};

/// A graded basis grew past the configured column cap.
struct guardrail_error : error {
    using error::error;
};

/// Syntax error with source location (1-based line/column).
struct parse_error : error {
    int line;
    int col;
    parse_error(const std::string &msg, int line_, int col_)
        : error(msg + " at line " + std::to_string(line_) + ", column " +
                std::to_string(col_)),
          line(line_), col(col_) {}
};

} // namespace jetnf
