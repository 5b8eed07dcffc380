#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sftcross/random.hpp"
#include "sftcross/scalar.hpp"

using namespace sftcross;

TEST_CASE("square-free decomposition pulls out the largest square") {
    auto [s, d] = squarefree_decompose(72);
    CHECK(s == 6);
    CHECK(d == 2);
    auto [s1, d1] = squarefree_decompose(1);
    CHECK(s1 == 1);
    CHECK(d1 == 1);
    auto [s15, d15] = squarefree_decompose(15);
    CHECK(s15 == 1);
    CHECK(d15 == 15);
}

TEST_CASE("square-free decomposition handles cofactors beyond the sieve") {
    Integer p("1000003");
    auto [s, d] = squarefree_decompose(p * p);
    CHECK(s == p);
    CHECK(d == 1);
    Integer q("1000033");
    auto [s2, d2] = squarefree_decompose(4 * p * q);
    CHECK(s2 == 2);
    CHECK(d2 == p * q);
}

TEST_CASE("radical products combine through the shared square factor") {
    RadScalar a = sqrt_nonneg_rational(Rational(6));
    RadScalar b = sqrt_nonneg_rational(Rational(10));
    RadScalar expected = RadScalar(Rational(2)) * sqrt_nonneg_rational(Rational(15));
    CHECK(a * b == expected);
    CHECK((a * b).str() == "2*sqrt(15)");

    RadScalar r2 = sqrt_nonneg_rational(Rational(2));
    CHECK((RadScalar(1) + r2) * (RadScalar(1) - r2) == RadScalar(-1));
    CHECK(r2 * r2 == RadScalar(2));
}

TEST_CASE("imaginary unit squares to -1 and conjugation flips it") {
    RadScalar i = RadScalar::i();
    CHECK(i * i == RadScalar(-1));
    CHECK(i.conj() == -i);
    RadScalar z = RadScalar(Gaussian(Rational(1), Rational(2)));
    CHECK(z * z.conj() == RadScalar(5));
}

TEST_CASE("single-term inverses multiply back to one") {
    RadScalar z = RadScalar(Gaussian(Rational(1), Rational(2)));
    CHECK(z * invert_monoradical(z) == RadScalar(1));
    RadScalar r = RadScalar::radical_term(5, Gaussian(Rational(3, 2)));
    CHECK(r * invert_monoradical(r) == RadScalar(1));
    CHECK_THROWS_AS(invert_monoradical(RadScalar(0)), DomainError);
    CHECK_THROWS_AS(invert_monoradical(RadScalar(1) + sqrt_nonneg_rational(Rational(2))),
                    UnsupportedError);
}

TEST_CASE("sqrt of a nonnegative rational squares back exactly") {
    RadScalar r = sqrt_nonneg_rational(Rational(9, 4));
    CHECK(r == RadScalar(Rational(3, 2)));
    RadScalar h = sqrt_nonneg_rational(Rational(1, 2));
    CHECK(h * h == RadScalar(Rational(1, 2)));
    CHECK(sqrt_nonneg_rational(Rational(0)) == RadScalar(0));
    CHECK_THROWS_AS(sqrt_nonneg_rational(Rational(-1)), DomainError);
}

TEST_CASE("sign of multi-radical reals is decided exactly") {
    // (sqrt(2) + sqrt(3))^2 = 5 + 2 sqrt(6) and 2 sqrt(6) < 5, so the
    // difference against sqrt(10) is negative
    RadScalar x = sqrt_nonneg_rational(Rational(2)) + sqrt_nonneg_rational(Rational(3)) -
                  sqrt_nonneg_rational(Rational(10));
    CHECK(x.sign_real() == -1);
    CHECK((-x).sign_real() == 1);
    CHECK(RadScalar(0).sign_real() == 0);
    CHECK((sqrt_nonneg_rational(Rational(2)) - RadScalar(Rational(3, 2))).sign_real() == -1);
    CHECK_THROWS_AS(RadScalar::i().sign_real(), DomainError);
}

TEST_CASE("rational_value only speaks for genuinely rational scalars") {
    CHECK(RadScalar(Rational(7, 3)).rational_value() == Rational(7, 3));
    CHECK_THROWS_AS(sqrt_nonneg_rational(Rational(2)).rational_value(), DomainError);
    CHECK(sqrt_nonneg_rational(Rational(4)).rational_value() == Rational(2));
}

TEST_CASE("printing and parsing round trip") {
    CHECK(parse_scalar("-1/2*sqrt(2) + i") ==
          RadScalar(Rational(-1, 2)) * sqrt_nonneg_rational(Rational(2)) + RadScalar::i());
    CHECK(parse_scalar("sqrt(8)") == RadScalar(2) * sqrt_nonneg_rational(Rational(2)));
    CHECK(parse_scalar("0") == RadScalar(0));
    CHECK_THROWS_AS(parse_scalar("sqrt(2"), InputError);
    CHECK_THROWS_AS(parse_scalar("2 + + 3"), InputError);

    Rng rng(42);
    for (int round = 0; round < 25; ++round) {
        RadScalar x = rng.scalar() + rng.scalar();
        CHECK(parse_scalar(x.str()) == x);
    }
}

TEST_CASE("field laws hold on seeded samples") {
    Rng rng(7);
    for (int round = 0; round < 30; ++round) {
        RadScalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
}
