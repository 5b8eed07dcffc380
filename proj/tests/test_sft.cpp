#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sftcross/sft.hpp"

using namespace sftcross;

namespace {
const TransitionMatrix F2({{1, 1}, {1, 1}});
const TransitionMatrix FIB({{1, 1}, {1, 0}});
const TransitionMatrix P3({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
const TransitionMatrix RED({{1, 1}, {0, 1}});
}  // namespace

TEST_CASE("degenerate matrices are rejected with the dead symbol named") {
    CHECK_THROWS_WITH_AS(TransitionMatrix({{1, 0}, {1, 0}}),
                         doctest::Contains("column"), InputError);
    CHECK_THROWS_WITH_AS(TransitionMatrix({{0, 0}, {1, 1}}),
                         doctest::Contains("successor"), InputError);
    CHECK_THROWS_AS(TransitionMatrix({{1, 1}, {1}}), InputError);
    CHECK_THROWS_AS(TransitionMatrix({{2, 0}, {1, 1}}), InputError);
}

TEST_CASE("golden-mean word counts follow the Fibonacci numbers") {
    // depth k admissible words are counted by F(k+2): 1, 2, 3, 5, 8
    CHECK(admissible_words(FIB, 0).size() == 1);
    CHECK(admissible_words(FIB, 1).size() == 2);
    CHECK(admissible_words(FIB, 2).size() == 3);
    CHECK(admissible_words(FIB, 3).size() == 5);
    CHECK(admissible_words(FIB, 4).size() == 8);
    CHECK(!is_admissible(FIB, {1, 1}));
    CHECK(is_admissible(FIB, {0, 1, 0, 0}));
}

TEST_CASE("eventually periodic points canonicalize to a unique form") {
    EvPerPoint x(F2, {0, 0, 1}, {0, 1, 0, 1});
    CHECK(x.preperiod() == Word{0});
    CHECK(x.cycle() == Word{0, 1});
    CHECK(x.at(0) == 0);
    CHECK(x.at(1) == 0);
    CHECK(x.at(2) == 1);
    CHECK(x.prefix(5) == Word{0, 0, 1, 0, 1});

    EvPerPoint y = x.shifted(2);
    CHECK(y.preperiod().empty());
    CHECK(y.cycle() == Word{1, 0});
    CHECK(y != x.shifted(1));
    CHECK(traj_equivalent(y, EvPerPoint(F2, {}, {0, 1})));
    CHECK(x == EvPerPoint(F2, {0}, {0, 1}));
    CHECK_THROWS_AS(EvPerPoint(FIB, {}, {1, 1}), InputError);
    CHECK_THROWS_AS(EvPerPoint(FIB, {1}, {1, 0}), InputError);
}

TEST_CASE("coincidence cylinders are certified exactly") {
    CHECK(cylinder_forces_coincidence(RED, {1}, 1, 0));
    CHECK(!cylinder_forces_coincidence(RED, {0}, 1, 0));
    CHECK(!cylinder_forces_coincidence(F2, {0, 0}, 1, 0));
    CHECK(cylinder_forces_coincidence(P3, {0}, 3, 0));
    CHECK(!cylinder_forces_coincidence(P3, {0}, 2, 0));
}

TEST_CASE("brute-force witness search matches the cycle criterion") {
    auto red_witness = topfree_bruteforce(RED, 1, 0, 4);
    REQUIRE(red_witness.has_value());
    CHECK(*red_witness == Word{1});

    auto p3_witness = topfree_bruteforce(P3, 3, 0, 4);
    REQUIRE(p3_witness.has_value());
    CHECK(*p3_witness == Word{0});

    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m < n; ++m) {
            CHECK(!topfree_bruteforce(F2, n, m, 4).has_value());
            CHECK(!topfree_bruteforce(FIB, n, m, 4).has_value());
        }
    CHECK_THROWS_AS(topfree_bruteforce(F2, 2, 2, 4), InputError);
}

TEST_CASE("analysis reports connectivity, preimage counts and closed sets") {
    Analysis fib = analyze(FIB);
    CHECK(fib.column_sums == std::vector<int>{2, 1});
    CHECK(!fib.constant_p.has_value());
    CHECK(fib.strongly_connected);
    CHECK(fib.predecessor_closed.empty());
    CHECK(fib.every_cycle_has_exit);

    Analysis red = analyze(RED);
    CHECK(!red.strongly_connected);
    REQUIRE(red.predecessor_closed.size() == 1);
    CHECK(red.predecessor_closed[0] == std::vector<Symbol>{0});
    CHECK(red.predecessor_closed_valid[0]);
    CHECK(!red.every_cycle_has_exit);
    CHECK(red.no_exit_cycle == Word{1});

    Analysis p3 = analyze(P3);
    CHECK(p3.constant_p == 1);
    CHECK(p3.strongly_connected);
    CHECK(p3.predecessor_closed.empty());
    CHECK(!p3.every_cycle_has_exit);

    Analysis f2 = analyze(F2);
    CHECK(f2.constant_p == 2);
    CHECK(f2.every_cycle_has_exit);
}

TEST_CASE("shift overlap detection drives the separating-cylinder search") {
    CHECK(shift_overlap_nonempty(FIB, {0}, 1, 0));
    CHECK(!shift_overlap_nonempty(FIB, {0, 1}, 1, 0));
    CHECK(shift_overlap_nonempty(F2, {0, 0}, 1, 0));
    CHECK(shift_overlap_nonempty(F2, {0, 1}, 2, 0));
    // [1] on the golden-mean shift: sigma x starts with 0, so sigma x never
    // lies in [1]
    CHECK(!shift_overlap_nonempty(FIB, {1}, 1, 0));
    CHECK(shift_overlap_nonempty(P3, {0}, 3, 0));
    CHECK(!shift_overlap_nonempty(P3, {0}, 2, 0));
}

TEST_CASE("word rendering stays unambiguous for wide alphabets") {
    CHECK(word_str({0, 1, 0}) == "010");
    CHECK(word_str({}) == "()");
    Word wide{10, 2};
    CHECK(word_str(wide) == "10,2");
}
