#pragma once

#include <iosfwd>

#include "jetnf/normal_form.hpp"

namespace jetnf {

/// One command invocation. matrix_text holds the inline or file-loaded
/// source; equiv uses matrix_text_b for the second matrix.
struct ProblemSpec {
    std::string command; // nf | verify-pde | determinacy | equiv | smith
    std::vector<std::string> vars;
    int order = 6;
    Field field = Field::Rational;
    GroupKind kind = GroupKind::TwoSided;
    std::string matrix_text;
    std::string matrix_text_b;
    int k = 0;      // verify-pde, determinacy
    int j_max = -1; // determinacy horizon; -1 = order
    int j = -1;     // equiv jet degree; -1 = order
    bool json = false;
    bool explain = false;
    bool full_g = false;
    long max_columns = -1; // -1: JETNORM_MAX_COLUMNS env var or default
};

/// Exit codes: 0 computed, 2 guardrail exceeded, 3 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitGuardrail = 2;
inline constexpr int kExitInvalid = 3;

/// Runs one command, writing the text or JSON report to `out`. Returns the
/// exit code; error text for nonzero codes is also written to `out`.
int run_command(const ProblemSpec &spec, std::ostream &out);

} // namespace jetnf
