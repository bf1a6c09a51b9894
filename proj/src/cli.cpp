#include "jetnf/cli.hpp"

#include <cstdlib>
#include <ostream>

#include "jetnf/io.hpp"
#include "jetnf/parser.hpp"

namespace jetnf {

namespace {

using ojson = nlohmann::ordered_json;

long resolve_max_columns(long requested) {
    if (requested > 0)
        return requested;
    if (const char *env = std::getenv("JETNORM_MAX_COLUMNS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
        throw invalid_input("JETNORM_MAX_COLUMNS must be a positive integer");
    }
    return kDefaultMaxColumns;
}

void validate(const ProblemSpec &spec) {
    if (spec.vars.empty())
        throw invalid_input("declare at least one variable with --vars");
    for (size_t i = 0; i < spec.vars.size(); ++i)
        for (size_t j = i + 1; j < spec.vars.size(); ++j)
            if (spec.vars[i] == spec.vars[j])
                throw invalid_input("duplicate variable name: " +
                                    spec.vars[i]);
    if (spec.order < 0)
        throw invalid_input("truncation order must be nonnegative");
}

ojson base_report(const ProblemSpec &spec) {
    ojson j;
    j["command"] = spec.command;
    j["field"] = spec.field == Field::Rational ? "rational" : "gaussian";
    j["vars"] = spec.vars;
    j["order"] = spec.order;
    return j;
}

void emit(const ProblemSpec &spec, const ojson &report, std::ostream &out,
          const std::string &text) {
    if (spec.json)
        out << report.dump(2) << "\n";
    else
        out << text;
}

std::string degrees_table(const std::vector<DegreeLogEntry> &log) {
    std::string s = "  j   dim V   dim W   removed |v|^2\n";
    for (const auto &e : log) {
        s += "  " + std::to_string(e.j) + "   " + std::to_string(e.dim_v) +
             "       " + std::to_string(e.dim_w) + "       " +
             e.v_norm2.to_string() + "\n";
    }
    return s;
}

int cmd_nf(const ProblemSpec &spec, std::ostream &out) {
    auto parsed =
        parse_poly_matrix(spec.matrix_text, spec.vars, spec.order, spec.field);
    NormalFormOptions opt;
    opt.full_g = spec.full_g;
    opt.max_columns = resolve_max_columns(spec.max_columns);
    opt.var_names = spec.vars;
    std::string explain_dump;
    if (spec.explain)
        opt.explain = &explain_dump;
    auto res = normal_form(parsed.matrix, spec.kind, opt);
    auto ver = verify_certificate(res);

    ojson rep = base_report(spec);
    rep["group"] = kind_name(spec.kind);
    rep["full_g"] = spec.full_g;
    rep["input"] = matrix_to_json(parsed.matrix);
    rep["normal_form"] = matrix_to_json(res.b);
    rep["normal_form_text"] = matrix_to_string(res.b, spec.vars);
    rep["certificate"] = group_element_to_json(res.g);
    ojson degrees = ojson::array();
    for (const auto &e : res.log) {
        ojson d;
        d["j"] = e.j;
        d["dim_v"] = e.dim_v;
        d["dim_w"] = e.dim_w;
        d["removed_norm2"] = e.v_norm2.to_string();
        degrees.push_back(std::move(d));
    }
    rep["degrees"] = std::move(degrees);
    rep["verified"] = ver.ok;
    rep["warnings"] = parsed.warnings;
    rep["notes"] = res.notes;
    if (spec.explain)
        rep["explain"] = explain_dump;

    std::string text = "normal form (" + kind_name(spec.kind) + ", order " +
                       std::to_string(spec.order) + "):\n  " +
                       matrix_to_string(res.b, spec.vars) + "\n";
    text += "certificate U:\n  " + matrix_to_string(res.g.u, spec.vars) + "\n";
    if (spec.kind == GroupKind::TwoSided || spec.kind == GroupKind::Right)
        text += "certificate V:\n  " + matrix_to_string(res.g.v, spec.vars) +
                "\n";
    text += degrees_table(res.log);
    text += std::string("certificate verified: ") + (ver.ok ? "yes" : "NO") +
            "\n";
    for (const auto &w : parsed.warnings)
        text += "warning: " + w + "\n";
    for (const auto &n : res.notes)
        text += "note: " + n + "\n";
    if (spec.explain)
        text += explain_dump;
    emit(spec, rep, out, text);
    return ver.ok ? kExitOk : kExitInvalid;
}

int cmd_verify_pde(const ProblemSpec &spec, std::ostream &out) {
    auto parsed =
        parse_poly_matrix(spec.matrix_text, spec.vars, spec.order, spec.field);
    auto rep = check_pde(parsed.matrix, spec.k, spec.kind);

    ojson j = base_report(spec);
    j["group"] = kind_name(spec.kind);
    j["k"] = spec.k;
    ojson rels = ojson::array();
    for (const auto &r : rep.relations) {
        ojson rj;
        rj["relation"] = r.name;
        rj["pass"] = r.pass;
        if (!r.pass)
            rj["first_failure"] = r.first_failure;
        rels.push_back(std::move(rj));
    }
    j["relations"] = std::move(rels);
    j["all_pass"] = rep.all_pass();
    j["warnings"] = parsed.warnings;

    std::string text = "differential relations at split degree k = " +
                       std::to_string(spec.k) + " (" + kind_name(spec.kind) +
                       "):\n";
    for (const auto &r : rep.relations) {
        text += "  " + r.name + ": " + (r.pass ? "pass" : "FAIL") + "\n";
        if (!r.pass)
            text += "    first nonzero coefficient: " + r.first_failure + "\n";
    }
    emit(spec, j, out, text);
    return kExitOk;
}

int cmd_determinacy(const ProblemSpec &spec, std::ostream &out) {
    auto parsed =
        parse_poly_matrix(spec.matrix_text, spec.vars, spec.order, spec.field);
    int j_max = spec.j_max < 0 ? spec.order : spec.j_max;
    auto rep = determinacy_report(parsed.matrix, spec.kind, spec.k, j_max,
                                  resolve_max_columns(spec.max_columns),
                                  spec.vars);

    ojson j = base_report(spec);
    j["group"] = kind_name(spec.kind);
    j["k"] = spec.k;
    j["j_max"] = j_max;
    ojson verdicts = ojson::array();
    for (const auto &v : rep.verdicts) {
        ojson vj;
        vj["j"] = v.j;
        vj["contained"] = v.contained;
        if (!v.contained)
            vj["obstruction"] = v.obstruction;
        verdicts.push_back(std::move(vj));
    }
    j["verdicts"] = std::move(verdicts);
    j["first_fail"] = rep.first_fail ? ojson(*rep.first_fail) : ojson(nullptr);
    std::string caveat =
        rep.all_pass()
            ? "all degrees up to the horizon are reachable; this is evidence "
              "of " + std::to_string(spec.k) + "-determinacy, not a proof "
              "(the criterion quantifies over all degrees > k)"
            : "containment fails at degree " +
                  std::to_string(*rep.first_fail) + "; the matrix is not " +
                  std::to_string(*rep.first_fail - 1) +
                  "-determined with respect to the unipotent subgroup";
    j["conclusion"] = caveat;
    j["warnings"] = parsed.warnings;

    std::string text = "determinacy image test (" + kind_name(spec.kind) +
                       "), degrees " + std::to_string(spec.k + 1) + ".." +
                       std::to_string(j_max) + ":\n";
    for (const auto &v : rep.verdicts) {
        text += "  j = " + std::to_string(v.j) + ": " +
                (v.contained ? "contained" : "NOT contained") + "\n";
        if (!v.contained)
            text += "    " + v.obstruction + "\n";
    }
    text += caveat + "\n";
    emit(spec, j, out, text);
    return kExitOk;
}

int cmd_equiv(const ProblemSpec &spec, std::ostream &out) {
    auto pa =
        parse_poly_matrix(spec.matrix_text, spec.vars, spec.order, spec.field);
    auto pb = parse_poly_matrix(spec.matrix_text_b, spec.vars, spec.order,
                                spec.field);
    int j = spec.j < 0 ? spec.order : spec.j;
    auto res = jet_equivalence(pa.matrix, pb.matrix, spec.kind, j);
    bool verified = false;
    if (res.witness)
        verified = act(*res.witness, pa.matrix).project(j) ==
                   pb.matrix.project(j);

    ojson rep = base_report(spec);
    rep["group"] = kind_name(spec.kind);
    rep["j"] = j;
    rep["witness_found"] = res.witness.has_value();
    rep["system_solvable"] = res.system_solvable;
    rep["witness"] =
        res.witness ? group_element_to_json(*res.witness) : ojson(nullptr);
    rep["verified"] = res.witness ? ojson(verified) : ojson(nullptr);
    rep["note"] = res.note;

    std::string text;
    if (res.witness) {
        text = "witness found for pi_" + std::to_string(j) +
               " equivalence (" + kind_name(spec.kind) + ")\n";
        text += "U:\n  " + matrix_to_string(res.witness->u, spec.vars) + "\n";
        if (spec.kind == GroupKind::TwoSided || spec.kind == GroupKind::Right)
            text +=
                "V:\n  " + matrix_to_string(res.witness->v, spec.vars) + "\n";
        text += std::string("witness verified: ") + (verified ? "yes" : "NO") +
                "\n";
    } else {
        text = "no witness: " + res.note + "\n";
    }
    emit(spec, rep, out, text);
    return kExitOk;
}

int cmd_smith(const ProblemSpec &spec, std::ostream &out) {
    if (spec.vars.size() != 1)
        throw invalid_input(
            "the one-variable normal form needs exactly one variable");
    auto parsed =
        parse_poly_matrix(spec.matrix_text, spec.vars, spec.order, spec.field);
    auto res = one_variable_nf(parsed.matrix);
    bool verified = act(res.g, parsed.matrix) == res.b;

    ojson rep = base_report(spec);
    rep["normal_form"] = matrix_to_json(res.b);
    rep["normal_form_text"] = matrix_to_string(res.b, spec.vars);
    ojson orders = ojson::array();
    for (const auto &o : res.diagonal_orders)
        orders.push_back(o ? ojson(*o) : ojson(nullptr));
    rep["diagonal_orders"] = std::move(orders);
    rep["certificate"] = group_element_to_json(res.g);
    rep["verified"] = verified;
    rep["note"] = res.note;
    rep["warnings"] = parsed.warnings;

    std::string text = "one-variable two-sided normal form:\n  " +
                       matrix_to_string(res.b, spec.vars) + "\n";
    text += "diagonal orders:";
    for (const auto &o : res.diagonal_orders)
        text += o ? " " + std::to_string(*o) : " (0 at this truncation)";
    text += "\n";
    text += std::string("certificate verified: ") + (verified ? "yes" : "NO") +
            "\n";
    if (!res.note.empty())
        text += "note: " + res.note + "\n";
    emit(spec, rep, out, text);
    return verified ? kExitOk : kExitInvalid;
}

} // namespace

int run_command(const ProblemSpec &spec, std::ostream &out) {
    try {
        validate(spec);
        if (spec.command == "nf")
            return cmd_nf(spec, out);
        if (spec.command == "verify-pde")
            return cmd_verify_pde(spec, out);
        if (spec.command == "determinacy")
            return cmd_determinacy(spec, out);
        if (spec.command == "equiv")
            return cmd_equiv(spec, out);
        if (spec.command == "smith")
            return cmd_smith(spec, out);
        throw invalid_input("unknown command: " + spec.command);
    } catch (const guardrail_error &e) {
        out << "guardrail: " << e.what() << "\n";
        return kExitGuardrail;
    } catch (const parse_error &e) {
        out << "parse error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const error &e) {
        out << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

} // namespace jetnf
