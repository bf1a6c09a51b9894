#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jetnf/group.hpp"
#include "jetnf/parser.hpp"

namespace testutil {

/// Deterministic generator (xorshift-style); identical sequences on every
/// platform, so frozen expected values stay valid.
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed ? seed : 0x106689d45497fdb5ull) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % (hi - lo + 1));
    }
};

inline jetnf::Scalar random_scalar(Rng &rng, bool gaussian = false) {
    long num = rng.range(-6, 6);
    long den = rng.range(1, 4);
    mpq_class re(num, den);
    re.canonicalize();
    if (!gaussian)
        return jetnf::Scalar(re);
    mpq_class im(rng.range(-6, 6), rng.range(1, 4));
    im.canonicalize();
    return jetnf::Scalar::gaussian(re, im);
}

inline jetnf::SeriesJet random_series(Rng &rng, int p, int N,
                                      int min_degree = 0,
                                      bool gaussian = false) {
    jetnf::SeriesJet s(p, N);
    for (const auto &I : jetnf::monomials_in_range(p, min_degree, N))
        if (rng.range(0, 2) == 0)
            s.set_coeff(I, random_scalar(rng, gaussian));
    return s;
}

inline jetnf::MatrixJet random_matrix(Rng &rng, int m, int n, int p, int N,
                                      int min_degree = 0,
                                      bool gaussian = false) {
    jetnf::MatrixJet a(m, n, p, N);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            a.set(i, j, random_series(rng, p, N, min_degree, gaussian));
    return a;
}

/// Random Lie element of the kind: a random unconstrained pair pushed
/// through the delta projector (which lands exactly on the constraint).
inline jetnf::LieElementJet random_lie(Rng &rng, jetnf::GroupKind kind, int m,
                                       int n, int p, int N) {
    jetnf::MatrixJet nl = random_matrix(rng, m, m, p, N, 1);
    jetnf::MatrixJet nr = random_matrix(rng, n, n, p, N, 1);
    return jetnf::delta_project(nl, nr, kind);
}

/// Random unipotent element: exp of a random Lie element.
inline jetnf::GroupElementJet random_unipotent(Rng &rng, jetnf::GroupKind kind,
                                               int m, int n, int p, int N) {
    return jetnf::exp_element(random_lie(rng, kind, m, n, p, N));
}

inline jetnf::MatrixJet parse_mat(const std::string &text,
                                  const std::vector<std::string> &vars,
                                  int N,
                                  jetnf::Field f = jetnf::Field::Rational) {
    return jetnf::parse_poly_matrix(text, vars, N, f).matrix;
}

} // namespace testutil
