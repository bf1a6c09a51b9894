#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetnf/scalar.hpp"
#include "test_util.hpp"

using namespace jetnf;

TEST_CASE("conjugation") {
    Scalar a = Scalar::rational(3, 2);
    CHECK(a.conj() == a); // real scalars are fixed

    Scalar z = Scalar::gaussian(2, 5);
    CHECK(z.conj() == Scalar::gaussian(2, -5));
    CHECK(z.conj().conj() == z);

    // conj is a field automorphism: conj((1+i)(1-i)) = conj(2) = 2.
    Scalar s = Scalar::gaussian(1, 1), t = Scalar::gaussian(1, -1);
    CHECK((s * t).conj() == s.conj() * t.conj());
    CHECK(s * t == Scalar(mpq_class(2), Field::GaussianRational));
}

TEST_CASE("field laws are exact on random values") {
    testutil::Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        bool g = trial % 2 == 1;
        Scalar a = testutil::random_scalar(rng, g);
        Scalar b = testutil::random_scalar(rng, g);
        Scalar c = testutil::random_scalar(rng, g);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        if (!b.is_zero())
            CHECK((a / b) * b == a);
    }
}

TEST_CASE("norm is a nonnegative rational") {
    testutil::Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Scalar z = testutil::random_scalar(rng, true);
        Scalar n = z * z.conj();
        CHECK(n.im() == 0);
        CHECK(n.re() >= 0);
        CHECK((n.re() == 0) == z.is_zero());
        CHECK(n == z.norm());
    }
}

TEST_CASE("rational mode rejects imaginary parts") {
    CHECK_THROWS_AS(Scalar(mpq_class(1), mpq_class(1), Field::Rational),
                    invalid_input);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), invalid_input);
}

TEST_CASE("string round trip is bit-exact") {
    testutil::Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Scalar z = testutil::random_scalar(rng, trial % 2 == 1);
        CHECK(Scalar::parse(z.to_string()) == z);
    }
    CHECK(Scalar::rational(3, 2).to_string() == "3/2");
    CHECK(Scalar::gaussian(mpq_class(1, 2), mpq_class(-3, 4)).to_string() ==
          "1/2-3/4*i");
    CHECK(Scalar::parse("1/2-3/4*i") ==
          Scalar::gaussian(mpq_class(1, 2), mpq_class(-3, 4)));
    CHECK(Scalar::parse("-7") == Scalar(-7));
    CHECK_THROWS(Scalar::parse("1//2"));
}

TEST_CASE("mixed-field operations promote to gaussian") {
    Scalar a = Scalar::rational(1, 3);
    Scalar z = Scalar::i();
    CHECK((a + z).field() == Field::GaussianRational);
    CHECK((a * z) == Scalar::gaussian(0, mpq_class(1, 3)));
}
