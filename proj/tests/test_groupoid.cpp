#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sftcross/groupoid.hpp"
#include "sftcross/random.hpp"

using namespace sftcross;

namespace {
const TransitionMatrix F2({{1, 1}, {1, 1}});
const TransitionMatrix FIB({{1, 1}, {1, 0}});
const TransitionMatrix P3({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
const TransitionMatrix FULL3({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});

GroupoidElement s_hat(const TransitionMatrix& A, Symbol c) {
    return phi_iso(CrossedElement::from_function(quasi_basis(A).u[c]) *
                   CrossedElement::isometry(A));
}
}  // namespace

TEST_CASE("non-constant column sums are rejected") {
    CHECK_THROWS_WITH_AS(GroupoidElement{FIB}, doctest::Contains("column sums"),
                         UnsupportedError);
    CHECK_THROWS_AS(phi_iso(CrossedElement::unit(FIB)), UnsupportedError);
}

TEST_CASE("terms with empty bisections or zero coefficients vanish on insertion") {
    GroupoidElement x(P3);
    x.append({0}, {1}, RadScalar(1));
    CHECK(x.raw_empty());
    x.append({0}, {2, 0}, RadScalar(0));
    CHECK(x.raw_empty());
    x.append({0}, {2, 0}, RadScalar(1));
    CHECK(x.terms().size() == 1);
    CHECK_THROWS_AS(x.append({0, 0}, {}, RadScalar(1)), InputError);
}

TEST_CASE("the carried isometry lands on explicit bisections") {
    GroupoidElement s0 = s_hat(F2, 0);
    GroupoidElement expect(F2);
    expect.append({0, 0}, {0}, RadScalar(1));
    expect.append({0, 1}, {1}, RadScalar(1));
    CHECK(s0.terms() == expect.terms());

    CHECK(normalize_equals(phi_iso(CrossedElement::isometry(F2)),
                           GroupoidElement::isometry(F2)));
}

TEST_CASE("range and source projections of the symbol isometries") {
    GroupoidElement one = GroupoidElement::unit(F2);
    GroupoidElement s0 = s_hat(F2, 0);
    GroupoidElement s1 = s_hat(F2, 1);

    CHECK(normalize_equals(s0.adjoint() * s0, one));
    CHECK(!normalize_equals(s0 * s0.adjoint(), one));
    CHECK(normalize_equals(s0 * s0.adjoint() + s1 * s1.adjoint(), one));
}

TEST_CASE("a permutation shift identifies different projections") {
    GroupoidElement s0 = s_hat(P3, 0);
    GroupoidElement s1 = s_hat(P3, 1);
    CHECK(normalize_equals(s0.adjoint() * s0, s1 * s1.adjoint()));
    CHECK(!normalize_equals(s0.adjoint() * s0, GroupoidElement::unit(P3)));
    CHECK(normalize_equals(phi_iso(CrossedElement::from_function(
                               CylFun::indicator(P3, {1}))),
                           s0.adjoint() * s0));
}

TEST_CASE("raising bisections one level is exact") {
    GroupoidElement one = GroupoidElement::unit(F2);
    GroupoidElement raised(F2);
    for (const Word& w : admissible_words(F2, 2)) raised.append(w, w, RadScalar(1));
    CHECK(normalize_equals(one, raised));
    CHECK(normalize_is_zero(one - raised));

    GroupoidElement half(F2);
    half.append({0}, {0}, RadScalar(1));
    CHECK(!normalize_equals(one, half));
}

TEST_CASE("the groupoid map is a seeded homomorphism") {
    Rng rng(37);
    for (const TransitionMatrix& A : {F2, P3, FULL3}) {
        for (int round = 0; round < 3; ++round) {
            CrossedElement x = rng.element(A, 2, 2, 2);
            CrossedElement y = rng.element(A, 2, 2, 2);
            CHECK(normalize_equals(phi_iso(x * y), phi_iso(x) * phi_iso(y)));
            CHECK(normalize_equals(phi_iso(x.adjoint()), phi_iso(x).adjoint()));
            CHECK(normalize_equals(phi_iso(x + y), phi_iso(x) + phi_iso(y)));
        }
    }
}

TEST_CASE("groupoid equality agrees with the normal form") {
    Rng rng(41);
    for (int round = 0; round < 5; ++round) {
        CrossedElement x = rng.element(F2, 2, 2, 2);
        CrossedElement y = rng.element(F2, 2, 2, 2);
        CHECK(normalize_is_zero(phi_iso(x - y)) == equals(x, y));
    }
    CrossedElement S = CrossedElement::isometry(F2);
    CHECK(normalize_is_zero(phi_iso(S.adjoint() * S - CrossedElement::unit(F2))));
    CHECK(!normalize_is_zero(phi_iso(S * S.adjoint() - CrossedElement::unit(F2))));
}

TEST_CASE("structural relations hold whenever the groupoid applies") {
    for (const TransitionMatrix& A : {F2, P3, FULL3}) {
        Report rep = verify_groupoid_relations(A);
        for (const CheckLine& line : rep) {
            INFO(line.name);
            CHECK(line.pass);
        }
    }
}
