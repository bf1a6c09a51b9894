#pragma once

#include "jetnf/graded.hpp"

namespace jetnf {

struct DegreeLogEntry {
    int j;
    long dim_v;
    long dim_w;
    Scalar v_norm2; // squared norm of the removed tangential part
};

/// Output of the jet-by-jet reduction: B = act(g, input) exactly through
/// the truncation, with B^(j) orthogonal to V^(j)(pi_{j-1} B) for every j.
/// g is unipotent unless full-G preprocessing was requested, in which case
/// only the composite certificate property holds.
struct NormalFormResult {
    MatrixJet input;
    GroupKind kind;
    MatrixJet b;
    GroupElementJet g;
    std::vector<DegreeLogEntry> log;
    bool full_g_preprocessed = false;
    std::vector<std::string> notes;
};

struct NormalFormOptions {
    bool full_g = false;
    long max_columns = kDefaultMaxColumns;
    /// When set, per-degree subspace dumps are appended here.
    std::string *explain = nullptr;
    std::vector<std::string> var_names; // labels for dumps only
};

/// Theorem-5.1-style construction: at each degree j the reachable part v_j
/// of B^(j) is removed by acting with exp(-nu_j), nu_j a minimum-norm
/// preimage of v_j. The degree-0 term is never altered; pass full_g to
/// first reduce the constant term (or, for one variable and the two-sided
/// group, the whole matrix) by a non-unipotent transformation.
NormalFormResult normal_form(const MatrixJet &a, GroupKind kind,
                             const NormalFormOptions &opt = {});

struct VerifyReport {
    bool ok = false;
    std::string detail;
};

/// Recomputes act(g, input) and compares with b coefficient-exactly;
/// checks unipotence (unless preprocessed) and the kind constraint on g.
VerifyReport verify_certificate(const NormalFormResult &r);

struct PdeRelation {
    std::string name;
    bool pass = false;
    std::string first_failure; // empty when pass
};

/// Differential-operator normal-form relations, split at degree k:
/// A_k = B^(k), b = B - pi_k B. Left checks (A_k*)^T(d/dx) b^T = 0, Right
/// checks A_k*(d/dx) b = 0, TwoSided both, Congruence their sum, Conjugacy
/// their difference (after removing the scalar constant part lambda*1).
struct PdeReport {
    GroupKind kind = GroupKind::TwoSided;
    int k = 0;
    std::vector<PdeRelation> relations;
    bool all_pass() const;
};

PdeReport check_pde(const MatrixJet &b, int k, GroupKind kind);

struct DeterminacyVerdict {
    int j;
    bool contained;
    std::string obstruction; // witness description when not contained
};

/// Per-degree image test: is the whole homogeneous degree-j matrix space
/// inside pi_j S'_A(0)(Lie(G))? All-pass up to the horizon is evidence of
/// k-determinacy (the true criterion quantifies over all j > k); any fail
/// at degree j certifies that A is not (j-1)-determined wrt G^0.
struct DeterminacyReport {
    GroupKind kind = GroupKind::TwoSided;
    int k = 0;
    int j_max = 0;
    std::vector<DeterminacyVerdict> verdicts;
    std::optional<int> first_fail;
    bool all_pass() const { return !first_fail.has_value(); }
};

DeterminacyReport determinacy_report(const MatrixJet &a, GroupKind kind,
                                     int k, int j_max,
                                     long max_columns = kDefaultMaxColumns,
                                     const std::vector<std::string>
                                         &var_names = {});

struct JetEquivalenceResult {
    std::optional<GroupElementJet> witness;
    bool system_solvable = false;
    std::string note;
};

/// Solves pi_j(U A - B V) = 0 as a truncated linear system in the jets of
/// (U, V) subject to the kind's linear constraints, then searches the
/// solution space for a point with invertible constant terms using a
/// fixed-seed deterministic schedule. Congruence is rejected: its
/// constraint on (U, V) is not linear.
JetEquivalenceResult jet_equivalence(const MatrixJet &a, const MatrixJet &b,
                                     GroupKind kind, int j);

/// Canonical one-variable two-sided form diag(x^k_1, ..., x^k_t, 0, ..)
/// with k_1 <= ... <= k_t, by valuation-based elimination. Diagonal
/// entries that vanish through the truncation are reported as such
/// (their order may exceed N or be infinite; the jet cannot tell).
struct OneVariableNF {
    MatrixJet b;
    GroupElementJet g; // two-sided, act(g, input) == b
    std::vector<std::optional<int>> diagonal_orders; // nullopt: 0 at trunc
    std::string note;
};

OneVariableNF one_variable_nf(const MatrixJet &a);

} // namespace jetnf
