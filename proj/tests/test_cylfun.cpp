#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sftcross/cylfun.hpp"
#include "sftcross/random.hpp"

using namespace sftcross;

namespace {
const TransitionMatrix F2({{1, 1}, {1, 1}});
const TransitionMatrix FIB({{1, 1}, {1, 0}});
const TransitionMatrix P3({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});

CylFun one(const TransitionMatrix& A) { return CylFun::constant(A, RadScalar(1)); }
}  // namespace

TEST_CASE("values extend to deeper words by prefix truncation") {
    CylFun f(FIB, 1, {{{0}, RadScalar(2)}, {{1}, RadScalar(Rational(-1, 2))}});
    CHECK(f.value({0, 1, 0}) == RadScalar(2));
    CHECK(f.value({1, 0}) == RadScalar(Rational(-1, 2)));
    CHECK(f.refined(3).depth() == 3);
    CHECK(f.refined(3) == f);
    CHECK_THROWS_AS(f.refined(0), InputError);
    CHECK_THROWS_AS(f.value({}), InputError);
    // unspecified admissible words default to zero; alien words are refused
    CHECK(CylFun(FIB, 1, {{{0}, RadScalar(1)}}).value({1}) == RadScalar(0));
    CHECK_THROWS_AS(CylFun(FIB, 2, {{{1, 1}, RadScalar(1)}}), InputError);
}

TEST_CASE("composing with the shift raises depth by one") {
    CylFun f(FIB, 1, {{{0}, RadScalar(3)}, {{1}, RadScalar(5)}});
    CylFun af = alpha(f);
    CHECK(af.depth() == 2);
    CHECK(af.value({0, 0}) == RadScalar(3));
    CHECK(af.value({0, 1}) == RadScalar(5));
    CHECK(af.value({1, 0}) == RadScalar(3));
    CHECK(alpha_pow(f, 2).value({0, 0, 1}) == RadScalar(5));
    CHECK(alpha_pow(f, 0) == f);
}

TEST_CASE("raw transfer counts preimages on the golden-mean shift") {
    CylFun raw = transfer_raw(one(FIB));
    CHECK(raw.value({0}) == RadScalar(2));
    CHECK(raw.value({1}) == RadScalar(1));
    CHECK(transfer(one(FIB)) == one(FIB));
    // L(1_[0] alpha(1_[1])) = L(1_[01]) = (1/2) 1_[1] on the full 2-shift
    CylFun lhs = transfer(CylFun::indicator(F2, {0, 1}));
    CHECK(lhs == RadScalar(Rational(1, 2)) * CylFun::indicator(F2, {1}));
    CHECK(lhs == transfer(CylFun::indicator(F2, {0})) * CylFun::indicator(F2, {1}));
}

TEST_CASE("transfer axiom holds for seeded functions with mixed scalars") {
    Rng rng(11);
    for (const TransitionMatrix& A : {F2, FIB, P3}) {
        for (int round = 0; round < 10; ++round) {
            CylFun f = rng.cylfun(A, 1 + static_cast<int>(rng.below(3)));
            CylFun g = rng.cylfun(A, 1 + static_cast<int>(rng.below(3)));
            CHECK(transfer(f * alpha(g)) == transfer(f) * g);
        }
    }
}

TEST_CASE("expectations project onto shift-pullback functions") {
    Rng rng(3);
    for (int n = 1; n <= 2; ++n) {
        for (int round = 0; round < 6; ++round) {
            CylFun f = rng.cylfun(FIB, 1 + static_cast<int>(rng.below(2)));
            CylFun g = rng.cylfun(FIB, 1);
            CylFun ef = expectation_En(f, n);
            CHECK(expectation_En(ef, n) == ef);
            CHECK(expectation_En(alpha_pow(g, n) * f, n) == alpha_pow(g, n) * ef);
        }
    }
    CHECK(expectation_En(one(FIB), 3) == one(FIB));
}

TEST_CASE("quasi-basis on the golden-mean shift carries sqrt(2) weights") {
    QuasiBasis qb = quasi_basis(FIB);
    CHECK(qb.lambda.value({0, 0}) == RadScalar(2));
    CHECK(qb.lambda.value({0, 1}) == RadScalar(1));
    CHECK(qb.lambda.value({1, 0}) == RadScalar(2));
    CHECK(qb.u[0].value({0, 0}) == sqrt_nonneg_rational(Rational(2)));
    CHECK(qb.u[0].value({0, 1}) == RadScalar(1));
    CHECK(qb.u[0].value({1, 0}) == RadScalar(0));
    CHECK(qb.indE == qb.lambda);

    CylFun mass = CylFun::constant(FIB, RadScalar(0));
    for (const CylFun& uc : qb.u) mass = mass + uc * uc.conj();
    CHECK(mass == qb.lambda);
    CHECK(qb.I(2) == qb.lambda * alpha(qb.lambda));
    CHECK(qb.I(0) == one(FIB));
}

TEST_CASE("reconstruction through the quasi-basis is exact") {
    Rng rng(19);
    for (const TransitionMatrix& A : {F2, FIB, P3}) {
        for (int round = 0; round < 8; ++round)
            CHECK(quasi_basis_check(rng.cylfun(A, static_cast<int>(rng.below(4)))));
    }
}

TEST_CASE("the permutation shift degenerates to a trivial quasi-basis") {
    QuasiBasis qb = quasi_basis(P3);
    CHECK(qb.lambda == one(P3));
    CHECK(qb.u[0] == CylFun::indicator(P3, {0}));
    CHECK(qb.I(3) == one(P3));
}

TEST_CASE("multi-index products enumerate admissible index paths") {
    QuasiBasis qb = quasi_basis(F2);
    CHECK(qb.multi(0).size() == 1);
    CHECK(qb.multi(2).size() == 4);
    CylFun mass = CylFun::constant(F2, RadScalar(0));
    for (const CylFun& ui : qb.multi(2)) mass = mass + ui * ui.conj();
    CHECK(mass == qb.I(2));
    CHECK(mass == CylFun::constant(F2, RadScalar(4)));
}

TEST_CASE("pointwise inverse and sqrt guard their domains") {
    CylFun f(FIB, 1, {{{0}, RadScalar(4)}, {{1}, RadScalar(Rational(1, 9))}});
    CHECK(f.pointwise_sqrt() * f.pointwise_sqrt() == f);
    CHECK(f.pointwise_inverse() * f == one(FIB));
    CylFun z(FIB, 1, {{{0}, RadScalar(0)}, {{1}, RadScalar(1)}});
    CHECK_THROWS_AS(z.pointwise_inverse(), DomainError);
    CylFun neg(FIB, 1, {{{0}, RadScalar(-1)}, {{1}, RadScalar(1)}});
    CHECK_THROWS_AS(neg.pointwise_sqrt(), DomainError);
    CylFun irr(FIB, 1, {{{0}, sqrt_nonneg_rational(Rational(2))}, {{1}, RadScalar(1)}});
    CHECK_THROWS_AS(irr.pointwise_sqrt(), DomainError);
}

TEST_CASE("operations across different matrices are refused") {
    CHECK_THROWS_WITH_AS(one(F2) + one(FIB), doctest::Contains("different transition"),
                         InputError);
}
