#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "sftcross/cli.hpp"

using namespace sftcross;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fix(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

bool has(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze prints the full report for a reducible shift") {
    Run r = run({"analyze", fix("red.json")});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "symbols: 0 1\n"
          "column sums: 0:1 1:2\n"
          "constant preimage count: no\n"
          "strongly connected: no\n"
          "predecessor-closed proper symbol sets:\n"
          "  {0} (valid sub-shift)\n"
          "every cycle has an exit: no\n"
          "not topologically free; witness cylinder [1] for the no-exit cycle\n"
          "coincidence witness: [1] for (n,m)=(1,0)\n"
          "brute-force search agrees with the cycle criterion\n");
}

TEST_CASE("analyze reports freeness for the golden-mean shift") {
    Run r = run({"analyze", fix("golden.json")});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "symbols: 0 1\n"
          "column sums: 0:2 1:1\n"
          "constant preimage count: no\n"
          "strongly connected: yes\n"
          "predecessor-closed proper symbol sets: none\n"
          "every cycle has an exit: yes\n"
          "topologically free: yes\n"
          "coincidence witness: none up to powers 3, depth 4\n"
          "brute-force search agrees with the cycle criterion\n");
}

TEST_CASE("analyze finds the period-three coincidence on the permutation shift") {
    Run r = run({"analyze", fix("perm3.json")});
    CHECK(r.code == 0);
    CHECK(has(r.out, "constant preimage count: 1\n"));
    CHECK(has(r.out,
              "not topologically free; witness cylinder [012] for the no-exit "
              "cycle\n"));
    CHECK(has(r.out, "coincidence witness: [0] for (n,m)=(3,0)\n"));
    CHECK(has(r.out, "agrees with the cycle criterion"));
}

TEST_CASE("measure prints exact stationary data") {
    Run uniform = run({"measure", fix("golden.json")});
    CHECK(uniform.code == 0);
    CHECK(uniform.out ==
          "weights: uniform\n"
          "stationary symbol masses: 0:2/3 1:1/3\n"
          "fully supported: yes\n"
          "cylinder masses at depth 2: [00]:1/3 [01]:1/3 [10]:1/3\n");

    Run weighted = run({"measure", fix("golden_weighted.json"), "--depth", "1"});
    CHECK(weighted.code == 0);
    CHECK(weighted.out ==
          "weights: from file\n"
          "stationary symbol masses: 0:3/5 1:2/5\n"
          "fully supported: yes\n"
          "cylinder masses at depth 1: [0]:3/5 [1]:2/5\n");

    Run red = run({"measure", fix("red.json")});
    CHECK(red.code == 0);
    CHECK(has(red.out, "stationary symbol masses: 0:1 1:0\n"));
    CHECK(has(red.out, "fully supported: no\n"));
}

TEST_CASE("verify runs every applicable suite and reports a pass") {
    Run full = run({"verify", fix("full2.json"), "--suite", "all", "--seed", "7"});
    CHECK(full.code == 0);
    CHECK(!has(full.out, "FAIL"));
    CHECK(has(full.out, "checks passed\n"));
    CHECK(has(full.out, "PASS unit redundancy sum_c u_c S S* u_c = 1\n"));
    CHECK(has(full.out, "PASS matrix-element oracle agrees with the normal form\n"));
    CHECK(has(full.out, "PASS groupoid equality agrees with the normal form\n"));

    Run golden = run({"verify", fix("golden.json"), "--suite", "all", "--seed", "7"});
    CHECK(golden.code == 0);
    CHECK(has(golden.out, "SKIP groupoid suite: column sums are not constant\n"));
    CHECK(!has(golden.out, "FAIL"));
}

TEST_CASE("verify skips the gns oracle when it would be unsound") {
    Run weighted = run({"verify", fix("golden_weighted.json"), "--suite", "gns"});
    CHECK(weighted.code == 0);
    CHECK(has(weighted.out, "SKIP gns equality oracle: file weights are not uniform\n"));
    CHECK(has(weighted.out, "PASS S* M_f S = M_{L_w(f)} on cylinder vectors\n"));

    Run red = run({"verify", fix("red.json"), "--suite", "gns"});
    CHECK(red.code == 0);
    CHECK(has(red.out, "SKIP gns suite: stationary measure is not fully supported\n"));
}

TEST_CASE("verify rejects an explicitly requested inapplicable suite") {
    Run r = run({"verify", fix("golden.json"), "--suite", "groupoid"});
    CHECK(r.code == 2);
    CHECK(has(r.err, "error: column sums are not constant"));

    Run unknown = run({"verify", fix("golden.json"), "--suite", "bogus"});
    CHECK(unknown.code == 2);
    CHECK(has(unknown.err, "unknown suite"));
}

TEST_CASE("verify output is byte-identical across runs with a fixed seed") {
    Run a = run({"verify", fix("full2.json"), "--suite", "all", "--seed", "3"});
    Run b = run({"verify", fix("full2.json"), "--suite", "all", "--seed", "3"});
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
}

TEST_CASE("eval checks equalities with the documented exit codes") {
    Run eq = run({"eval", fix("full2.json"), "--op", "equals", "--expr", "S'*S",
                  "--expr", "1"});
    CHECK(eq.code == 0);
    CHECK(eq.out == "true\n");

    Run ne = run({"eval", fix("full2.json"), "--op", "equals", "--expr", "S*S'",
                  "--expr", "1"});
    CHECK(ne.code == 1);
    CHECK(ne.out == "false\n");
}

TEST_CASE("eval prints the normal form of the range projection") {
    Run r = run({"eval", fix("full2.json"), "--expr", "S*S'"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "degree 0 (N=1, M=1, r=1)\n"
          "  00 | 00 : 1\n"
          "  00 | 10 : 1\n"
          "  01 | 01 : 1\n"
          "  01 | 11 : 1\n"
          "  10 | 00 : 1\n"
          "  10 | 10 : 1\n"
          "  11 | 01 : 1\n"
          "  11 | 11 : 1\n");

    Run zero = run({"eval", fix("full2.json"), "--expr", "S'*S - 1"});
    CHECK(zero.code == 0);
    CHECK(zero.out == "0\n");
}

TEST_CASE("eval applies the expectations and prints expressions") {
    Run g = run({"eval", fix("full2.json"), "--op", "G", "--expr", "S*S'"});
    CHECK(g.code == 0);
    CHECK(g.out == "{00: 1/2, 01: 1/2, 10: 1/2, 11: 1/2}\n");

    Run f = run({"eval", fix("full2.json"), "--op", "F", "--expr", "f + S"});
    CHECK(f.code == 0);
    CHECK(f.out == "((1/2)*e_0 + (-1/3)*e_1) * S^0 * S^0' * ((1))\n");

    Run adj = run({"eval", fix("full2.json"), "--op", "adjoint", "--expr", "S"});
    CHECK(adj.code == 0);
    CHECK(adj.out == "((1)) * S^0 * S^1' * ((1))\n");

    Run prod = run({"eval", fix("full2.json"), "--op", "product", "--expr", "S'",
                    "--expr", "f*S"});
    CHECK(prod.code == 0);
    CHECK(prod.out == "((1/12)*e_0 + (1/12)*e_1) * S^0 * S^0' * ((1))\n");
}

TEST_CASE("eval rejects malformed requests") {
    CHECK(run({"eval", fix("full2.json"), "--op", "equals", "--expr", "S"}).code == 2);
    CHECK(run({"eval", fix("full2.json"), "--op", "bogus", "--expr", "S"}).code == 2);
    Run bad = run({"eval", fix("full2.json"), "--expr", "2 +"});
    CHECK(bad.code == 2);
    CHECK(has(bad.err, "error: expression"));
    Run alien = run({"eval", fix("full2.json"), "--expr", "e_2"});
    CHECK(alien.code == 2);
}

TEST_CASE("quotient restricts onto a predecessor-closed symbol set") {
    Run r = run({"quotient", fix("red.json"), "--keep", "0"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "kept symbols: 0\n"));
    CHECK(has(r.out, "restricted matrix:\n  1\n"));
    CHECK(has(r.out, "PASS kernel contains 1_[1]\n"));
    CHECK(has(r.out, "PASS restriction is multiplicative on seeded pairs\n"));
    CHECK(has(r.out, "PASS restriction preserves adjoints on seeded pairs\n"));

    Run bad = run({"quotient", fix("red.json"), "--keep", "1"});
    CHECK(bad.code == 2);
    CHECK(has(bad.err, "not predecessor-closed"));

    Run unknown = run({"quotient", fix("red.json"), "--keep", "bogus"});
    CHECK(unknown.code == 2);
    CHECK(has(unknown.err, "unknown symbol"));
}

TEST_CASE("grandeh reports the separating cylinder or the failure honestly") {
    Run ok = run({"grandeh", fix("golden.json"), "--point", ":01", "--n", "1",
                  "--m", "0"});
    CHECK(ok.code == 0);
    CHECK(ok.out ==
          "point: :01\n"
          "separating cylinder: [01]\n"
          "h S^1 S*^0 h = 0: verified\n");

    Run fail = run({"grandeh", fix("golden.json"), "--point", "0101:0", "--n", "2",
                    "--m", "0", "--depth", "4"});
    CHECK(fail.code == 1);
    CHECK(has(fail.err, "search failed: no separating cylinder of depth <= 4"));

    Run fixed = run({"grandeh", fix("golden.json"), "--point", ":0", "--n", "2",
                     "--m", "1"});
    CHECK(fixed.code == 2);
    CHECK(has(fixed.err, "coincide"));

    Run deep = run({"grandeh", fix("golden.json"), "--point", "0101:0", "--n", "2",
                    "--m", "0"});
    CHECK(deep.code == 0);
    CHECK(has(deep.out, "separating cylinder: [010100]\n"));
}

TEST_CASE("argument errors exit with code 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus", fix("red.json")}).code == 2);
    CHECK(run({"analyze"}).code == 2);
    CHECK(run({"analyze", fix("red.json"), "--bogus", "1"}).code == 2);
    CHECK(run({"analyze", fix("red.json"), "--depth", "x"}).code == 2);
    CHECK(run({"verify", fix("red.json"), "--seed", "1", "--seed", "2"}).code == 2);
    CHECK(run({"analyze", fix("nonexistent.json")}).code == 2);
    CHECK(run({"analyze", fix("red.json"), "extra"}).code == 2);
}
