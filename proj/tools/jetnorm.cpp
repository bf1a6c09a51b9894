#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jetnf/cli.hpp"

namespace {

std::string read_source(const std::string &inline_text,
                        const std::string &file) {
    if (!file.empty()) {
        if (file == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            return ss.str();
        }
        std::ifstream in(file);
        if (!in)
            throw jetnf::invalid_input("cannot open file: " + file);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    if (inline_text.empty())
        throw jetnf::invalid_input(
            "provide a matrix inline or with --file (use '-' for stdin)");
    return inline_text;
}

std::vector<std::string> split_vars(const std::string &csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"jetnorm: canonical forms of matrices of truncated "
                 "multivariate power series, in exact arithmetic"};
    app.require_subcommand(1);

    jetnf::ProblemSpec spec;
    std::string vars_csv = "x";
    std::string group = "two-sided";
    std::string field = "rational";
    std::string file, file_b;
    std::string matrix_a, matrix_b;

    auto add_common = [&](CLI::App *cmd, bool needs_group) {
        cmd->add_option("--vars", vars_csv,
                        "comma-separated variable names, declaration order "
                        "fixes x_1..x_p");
        cmd->add_option("--order", spec.order, "truncation order N")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--field", field, "rational | gaussian");
        cmd->add_option("--file", file,
                        "read the matrix from a file ('-' for stdin)");
        cmd->add_flag("--json", spec.json, "emit a JSON report");
        if (needs_group)
            cmd->add_option("--group", group,
                            "left | right | two-sided | conjugacy | "
                            "congruence");
    };

    auto *nf = app.add_subcommand("nf", "compute the canonical normal form "
                                        "with a certificate");
    add_common(nf, true);
    nf->add_flag("--full-g", spec.full_g,
                 "reduce the constant term by a non-unipotent transformation "
                 "first (left/right/two-sided; the composite is no longer "
                 "canonical for the unipotent subgroup)");
    nf->add_flag("--explain", spec.explain,
                 "dump the per-degree subspaces V^(j), W^(j)");
    nf->add_option("matrix", matrix_a, "inline matrix, e.g. '[x+x^2,0;0,y]'");

    auto *pde = app.add_subcommand("verify-pde",
                                   "check the differential-operator "
                                   "normal-form relations");
    add_common(pde, true);
    pde->add_option("--k", spec.k, "split degree (leading part A_k = B^(k))")
        ->check(CLI::NonNegativeNumber);
    pde->add_option("matrix", matrix_a, "inline matrix");

    auto *det = app.add_subcommand("determinacy",
                                   "per-degree image test for k-determinacy");
    add_common(det, true);
    det->add_option("--k", spec.k, "candidate determinacy degree")
        ->check(CLI::NonNegativeNumber);
    det->add_option("--jmax", spec.j_max, "test degrees k+1..jmax "
                                          "(default: the truncation order)");
    det->add_option("matrix", matrix_a, "inline matrix");

    auto *eq = app.add_subcommand("equiv", "search for a jet-equivalence "
                                           "witness");
    add_common(eq, true);
    eq->add_option("--j", spec.j, "jet degree (default: truncation order)");
    eq->add_option("--file-b", file_b, "second matrix from a file");
    eq->add_option("matrix", matrix_a, "first inline matrix");
    eq->add_option("matrix_b", matrix_b, "second inline matrix");

    auto *sm = app.add_subcommand("smith", "one-variable two-sided canonical "
                                           "form diag(x^k1, x^k2, ...)");
    add_common(sm, false);
    sm->add_option("matrix", matrix_a, "inline matrix");

    CLI11_PARSE(app, argc, argv);

    try {
        spec.vars = split_vars(vars_csv);
        if (field == "rational")
            spec.field = jetnf::Field::Rational;
        else if (field == "gaussian")
            spec.field = jetnf::Field::GaussianRational;
        else
            throw jetnf::invalid_input("unknown field: " + field +
                                       " (use rational or gaussian)");
        spec.kind = jetnf::kind_from_name(group);
        spec.command = app.get_subcommands().front()->get_name();
        spec.matrix_text = read_source(matrix_a, file);
        if (spec.command == "equiv")
            spec.matrix_text_b = read_source(matrix_b, file_b);
        return jetnf::run_command(spec, std::cout);
    } catch (const jetnf::error &e) {
        std::cout << "error: " << e.what() << "\n";
        return jetnf::kExitInvalid;
    }
}
