#include "sftcross/cli.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "sftcross/expr.hpp"
#include "sftcross/gns.hpp"
#include "sftcross/groupoid.hpp"
#include "sftcross/random.hpp"
#include "sftcross/system_file.hpp"

namespace sftcross {

namespace {

struct Args {
    std::string command;
    std::string file;
    std::map<std::string, std::string> flags;
    std::vector<std::string> exprs;
};

Args parse_args(const std::vector<std::string>& argv) {
    if (argv.empty())
        throw InputError(
            "usage: sftcross {analyze|measure|verify|eval|quotient|grandeh} <file> "
            "[--suite S] [--seed N] [--depth D] [--expr E] [--op OP] [--keep CSV] "
            "[--point PRE:CYC] [--n N] [--m M]");
    Args a;
    a.command = argv[0];
    for (size_t i = 1; i < argv.size(); ++i) {
        const std::string& tok = argv[i];
        if (tok.rfind("--", 0) == 0) {
            if (i + 1 >= argv.size())
                throw InputError("flag " + tok + " needs a value");
            const std::string& val = argv[++i];
            if (tok == "--expr") {
                a.exprs.push_back(val);
            } else if (tok == "--suite" || tok == "--seed" || tok == "--depth" ||
                       tok == "--op" || tok == "--keep" || tok == "--point" ||
                       tok == "--n" || tok == "--m") {
                if (!a.flags.emplace(tok, val).second)
                    throw InputError("flag " + tok + " given twice");
            } else {
                throw InputError("unknown flag " + tok);
            }
        } else if (a.file.empty()) {
            a.file = tok;
        } else {
            throw InputError("unexpected argument \"" + tok + "\"");
        }
    }
    if (a.file.empty()) throw InputError("missing <file> argument");
    return a;
}

long flag_long(const Args& a, const std::string& name, long fallback) {
    auto it = a.flags.find(name);
    if (it == a.flags.end()) return fallback;
    try {
        size_t used = 0;
        long v = std::stol(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw InputError("flag " + name + " needs an integer, got \"" + it->second + "\"");
    }
}

std::string flag_str(const Args& a, const std::string& name, const std::string& fallback) {
    auto it = a.flags.find(name);
    return it == a.flags.end() ? fallback : it->second;
}

bool print_report(const Report& rep, std::ostream& out) {
    bool ok = true;
    for (const CheckLine& line : rep) {
        out << (line.pass ? "PASS " : "FAIL ") << line.name;
        if (!line.pass && !line.detail.empty()) out << ": " << line.detail;
        out << "\n";
        ok = ok && line.pass;
    }
    return ok;
}

std::string set_name(const SystemFile& sys, const std::vector<Symbol>& set) {
    std::string out = "{";
    for (size_t i = 0; i < set.size(); ++i) {
        if (i) out += ",";
        out += sys.symbols[set[i]];
    }
    return out + "}";
}

// Every term must be a (left coefficient) * S with unit right coefficient;
// such a combination vanishes before any level raising exactly when the
// left coefficients cancel, since L is faithful on positive elements.
bool raw_isometry_column_zero(const CrossedElement& z) {
    CylFun one = CylFun::constant(z.matrix(), RadScalar(1));
    CylFun sum = CylFun::constant(z.matrix(), RadScalar(0));
    for (const Monomial& t : z.terms()) {
        if (t.n != 1 || t.m != 0 || !(t.b == one)) return false;
        sum = sum + t.a;
    }
    return sum.is_zero();
}

int cmd_analyze(const Args& args, std::ostream& out) {
    SystemFile sys = load_system(args.file);
    const TransitionMatrix& A = sys.matrix;
    int max_depth = static_cast<int>(flag_long(args, "--depth", 4));
    if (max_depth < 1) throw InputError("--depth must be positive");

    Analysis an = analyze(A);
    out << "symbols:";
    for (const std::string& s : sys.symbols) out << " " << s;
    out << "\n";
    out << "column sums:";
    for (Symbol c = 0; c < A.symbol_count(); ++c)
        out << " " << sys.symbols[c] << ":" << an.column_sums[c];
    out << "\n";
    out << "constant preimage count: ";
    if (an.constant_p)
        out << *an.constant_p << "\n";
    else
        out << "no\n";
    out << "strongly connected: " << (an.strongly_connected ? "yes" : "no") << "\n";

    if (an.predecessor_closed.empty()) {
        out << "predecessor-closed proper symbol sets: none\n";
    } else {
        out << "predecessor-closed proper symbol sets:\n";
        for (size_t i = 0; i < an.predecessor_closed.size(); ++i)
            out << "  " << set_name(sys, an.predecessor_closed[i])
                << (an.predecessor_closed_valid[i] ? " (valid sub-shift)"
                                                   : " (restriction degenerate)")
                << "\n";
    }

    out << "every cycle has an exit: " << (an.every_cycle_has_exit ? "yes" : "no")
        << "\n";

    // smallest witness over n > m, powers up to 3
    std::optional<Word> witness;
    int wn = 0, wm = 0;
    for (int n = 1; n <= 3 && !witness; ++n)
        for (int m = 0; m < n && !witness; ++m)
            if (auto w = topfree_bruteforce(A, n, m, max_depth)) {
                witness = w;
                wn = n;
                wm = m;
            }
    if (an.every_cycle_has_exit)
        out << "topologically free: yes\n";
    else
        out << "not topologically free; witness cylinder [" +
                   sys.word_name(an.no_exit_cycle) + "] for the no-exit cycle\n";
    if (witness)
        out << "coincidence witness: [" << sys.word_name(*witness) << "] for (n,m)=("
            << wn << "," << wm << ")\n";
    else
        out << "coincidence witness: none up to powers 3, depth " << max_depth << "\n";

    bool agree = an.every_cycle_has_exit == !witness.has_value();
    out << "brute-force search " << (agree ? "agrees" : "DISAGREES")
        << " with the cycle criterion\n";
    return agree ? 0 : 1;
}

int cmd_measure(const Args& args, std::ostream& out) {
    SystemFile sys = load_system(args.file);
    out << "weights: " << (sys.weights ? "from file" : "uniform") << "\n";
    InvariantMeasure mu = solve_invariant(sys.effective_weights());
    out << "stationary symbol masses:";
    for (Symbol c = 0; c < sys.matrix.symbol_count(); ++c)
        out << " " << sys.symbols[c] << ":" << mu.symbol_masses()[c].get_str();
    out << "\n";
    out << "fully supported: " << (mu.fully_supported() ? "yes" : "no") << "\n";
    int depth = static_cast<int>(flag_long(args, "--depth", 2));
    if (depth < 0) throw InputError("--depth must be nonnegative");
    out << "cylinder masses at depth " << depth << ":";
    for (const Word& w : admissible_words(sys.matrix, depth))
        out << " [" << sys.word_name(w) << "]:" << mu.cylinder_mass(w).get_str();
    out << "\n";
    return 0;
}

void suite_transfer(const SystemFile& sys, std::uint64_t seed, int depth, Report& rep) {
    const TransitionMatrix& A = sys.matrix;
    Rng rng(seed);
    bool axiom = true;
    for (int round = 0; round < 8; ++round) {
        CylFun f = rng.cylfun(A, 1 + static_cast<int>(rng.below(depth)));
        CylFun g = rng.cylfun(A, 1 + static_cast<int>(rng.below(depth)));
        axiom = axiom && transfer(f * alpha(g)) == transfer(f) * g;
    }
    rep.push_back({"transfer axiom L(f alpha(g)) = L(f) g, uniform", axiom, ""});
    rep.push_back({"L(1) = 1",
                   transfer(CylFun::constant(A, RadScalar(1))) ==
                       CylFun::constant(A, RadScalar(1)),
                   ""});
    if (sys.weights) {
        bool waxiom = true;
        for (int round = 0; round < 8; ++round) {
            CylFun f = rng.cylfun(A, 1 + static_cast<int>(rng.below(depth)));
            CylFun g = rng.cylfun(A, 1 + static_cast<int>(rng.below(depth)));
            waxiom = waxiom && transfer(f * alpha(g), *sys.weights) ==
                                   transfer(f, *sys.weights) * g;
        }
        rep.push_back({"transfer axiom with file weights", waxiom, ""});
    }
    InvariantMeasure mu = solve_invariant(sys.effective_weights());
    Report inv = invariance_checks(mu.weights(), mu.symbol_masses(), seed, depth);
    rep.insert(rep.end(), inv.begin(), inv.end());
}

void suite_quasibasis(const SystemFile& sys, std::uint64_t seed, int depth, Report& rep) {
    const TransitionMatrix& A = sys.matrix;
    Rng rng(seed);
    bool recon = true;
    for (int round = 0; round < 8; ++round)
        recon = recon &&
                quasi_basis_check(rng.cylfun(A, static_cast<int>(rng.below(depth + 1))));
    rep.push_back({"reconstruction f = sum_c u_c E_1(u_c* f)", recon, ""});
    QuasiBasis qb = quasi_basis(A);
    CylFun mass = CylFun::constant(A, RadScalar(0));
    for (const CylFun& uc : qb.u) mass = mass + uc * uc.conj();
    rep.push_back({"index sum_c u_c u_c* equals the preimage count",
                   mass == qb.lambda && qb.indE == qb.lambda, ""});
}

void suite_redundancy(const SystemFile& sys, std::uint64_t seed, int depth, Report& rep) {
    const TransitionMatrix& A = sys.matrix;
    QuasiBasis qb = quasi_basis(A);
    CrossedElement S = CrossedElement::isometry(A);
    CrossedElement k0(A);
    for (const CylFun& uc : qb.u)
        k0 += CrossedElement::from_function(uc) * S * S.adjoint() *
              CrossedElement::from_function(uc);
    rep.push_back({"unit redundancy sum_c u_c S S* u_c = 1",
                   equals(k0, CrossedElement::unit(A)), ""});

    CrossedElement defect = CrossedElement::unit(A) - k0;
    bool witness = true;
    for (int d = 0; d <= std::min(3, depth); ++d)
        for (const Word& w : admissible_words(A, d))
            witness = witness &&
                      raw_isometry_column_zero(
                          defect * CrossedElement::from_function(CylFun::indicator(A, w)) * S);
    rep.push_back({"(1 - k0) e_w S = 0 before the quotient, words to depth 3", witness, ""});

    Rng rng(seed);
    bool randomized = true;
    for (int round = 0; round < 6; ++round) {
        CylFun b = rng.cylfun(A, static_cast<int>(rng.below(depth + 1)));
        randomized = randomized &&
                     raw_isometry_column_zero(defect * CrossedElement::from_function(b) * S);
    }
    rep.push_back({"(1 - k0) b S = 0 for seeded b", randomized, ""});
}

void suite_ck(const SystemFile& sys, std::uint64_t, int depth, Report& rep) {
    Report ck = verify_finite_index_identities(sys.matrix, std::min(depth, 3));
    rep.insert(rep.end(), ck.begin(), ck.end());
}

void suite_gns(const SystemFile& sys, std::uint64_t seed, int depth, Report& rep,
               std::ostream& out) {
    InvariantMeasure mu = solve_invariant(sys.effective_weights());
    if (!mu.fully_supported()) {
        out << "SKIP gns suite: stationary measure is not fully supported\n";
        return;
    }
    Report av = av_relation_checks(mu, seed, depth);
    rep.insert(rep.end(), av.begin(), av.end());

    if (!mu.weights().is_uniform()) {
        out << "SKIP gns equality oracle: file weights are not uniform\n";
        return;
    }
    const TransitionMatrix& A = sys.matrix;
    CrossedElement S = CrossedElement::isometry(A);
    CrossedElement one = CrossedElement::unit(A);
    bool agree = equality_oracle(S.adjoint() * S, one, mu) == equals(S.adjoint() * S, one) &&
                 equality_oracle(S * S.adjoint(), one, mu) == equals(S * S.adjoint(), one);
    Rng rng(seed);
    for (int round = 0; round < 4; ++round) {
        CrossedElement x = rng.element(A, 2, 1, 1);
        CrossedElement y = rng.element(A, 2, 1, 1);
        if (round % 2 == 0) y = x + CrossedElement::from_function(rng.cylfun(A, 1));
        agree = agree && equality_oracle(x, y, mu) == equals(x, y);
    }
    rep.push_back({"matrix-element oracle agrees with the normal form", agree, ""});
}

void suite_groupoid(const SystemFile& sys, std::uint64_t seed, int depth, Report& rep,
                    std::ostream* skip_note) {
    const TransitionMatrix& A = sys.matrix;
    Analysis an = analyze(A);
    if (!an.constant_p) {
        if (!skip_note)
            throw UnsupportedError(
                "column sums are not constant; the groupoid picture needs every "
                "point to have the same number of preimages");
        *skip_note << "SKIP groupoid suite: column sums are not constant\n";
        return;
    }
    Report gr = verify_groupoid_relations(A);
    rep.insert(rep.end(), gr.begin(), gr.end());

    Rng rng(seed);
    bool hom = true, agree = true;
    int max_pow = std::min(depth, 2);
    for (int round = 0; round < 5; ++round) {
        CrossedElement x = rng.element(A, 2, max_pow, 1);
        CrossedElement y = rng.element(A, 2, max_pow, 1);
        hom = hom && normalize_equals(phi_iso(x * y), phi_iso(x) * phi_iso(y));
        CrossedElement z = (round % 2 == 0)
                               ? y
                               : x + CrossedElement::from_function(rng.cylfun(A, 1));
        agree = agree && (normalize_equals(phi_iso(x), phi_iso(z)) == equals(x, z));
    }
    rep.push_back({"phi is multiplicative on seeded pairs", hom, ""});
    rep.push_back({"groupoid equality agrees with the normal form", agree, ""});
}

int cmd_verify(const Args& args, std::ostream& out) {
    SystemFile sys = load_system(args.file);
    std::uint64_t seed = static_cast<std::uint64_t>(flag_long(args, "--seed", 1));
    int depth = static_cast<int>(flag_long(args, "--depth", 3));
    if (depth < 1) throw InputError("--depth must be positive");
    std::string suite = flag_str(args, "--suite", "all");
    const std::set<std::string> known{"transfer", "quasibasis", "redundancy",
                                      "ck",       "gns",        "groupoid"};
    if (suite != "all" && !known.count(suite))
        throw InputError("unknown suite \"" + suite + "\"");
    bool all = suite == "all";

    Report rep;
    if (all || suite == "transfer") suite_transfer(sys, seed, depth, rep);
    if (all || suite == "quasibasis") suite_quasibasis(sys, seed, depth, rep);
    if (all || suite == "redundancy") suite_redundancy(sys, seed, depth, rep);
    if (all || suite == "ck") suite_ck(sys, seed, depth, rep);
    if (all || suite == "gns") suite_gns(sys, seed, depth, rep, out);
    if (all || suite == "groupoid")
        suite_groupoid(sys, seed, depth, rep, all ? &out : nullptr);

    bool ok = print_report(rep, out);
    size_t failed = 0;
    for (const CheckLine& line : rep)
        if (!line.pass) ++failed;
    if (ok)
        out << "all " << rep.size() << " checks passed\n";
    else
        out << failed << " of " << rep.size() << " checks failed\n";
    return ok ? 0 : 1;
}

int cmd_eval(const Args& args, std::ostream& out) {
    SystemFile sys = load_system(args.file);
    std::string op = flag_str(args, "--op", "normal-form");
    size_t want = (op == "equals" || op == "product") ? 2 : 1;
    if (args.exprs.size() != want)
        throw InputError("--op " + op + " needs exactly " + std::to_string(want) +
                         " --expr argument(s), got " + std::to_string(args.exprs.size()));
    CrossedElement x = parse_expression(args.exprs[0], sys);
    if (op == "normal-form") {
        out << normal_form(x).str();
        return 0;
    }
    if (op == "equals") {
        CrossedElement y = parse_expression(args.exprs[1], sys);
        bool eq = equals(x, y);
        out << (eq ? "true" : "false") << "\n";
        return eq ? 0 : 1;
    }
    if (op == "F") {
        out << to_expression_string(expectation_F(x)) << "\n";
        return 0;
    }
    if (op == "G") {
        out << expectation_G(x).str() << "\n";
        return 0;
    }
    if (op == "adjoint") {
        out << to_expression_string(x.adjoint()) << "\n";
        return 0;
    }
    if (op == "product") {
        CrossedElement y = parse_expression(args.exprs[1], sys);
        out << to_expression_string(x * y) << "\n";
        return 0;
    }
    throw InputError("unknown op \"" + op + "\"");
}

int cmd_quotient(const Args& args, std::ostream& out) {
    SystemFile sys = load_system(args.file);
    const TransitionMatrix& A = sys.matrix;
    std::string csv = flag_str(args, "--keep", "");
    if (csv.empty()) throw InputError("quotient needs --keep with symbol names");
    std::vector<Symbol> keep;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        keep.push_back(sys.symbol_index(csv.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    Restriction res = restriction_hom(A, keep);

    out << "kept symbols:";
    for (Symbol v : res.keep) out << " " << sys.symbols[v];
    out << "\n";
    out << "restricted matrix:\n";
    for (const auto& row : res.sub.rows()) {
        out << " ";
        for (int e : row) out << " " << e;
        out << "\n";
    }

    Report rep;
    for (Symbol c = 0; c < A.symbol_count(); ++c) {
        if (std::binary_search(res.keep.begin(), res.keep.end(), c)) continue;
        bool zero = res.map(CylFun::indicator(A, {c})).is_zero();
        rep.push_back({"kernel contains 1_[" + sys.symbols[c] + "]", zero, ""});
    }
    std::uint64_t seed = static_cast<std::uint64_t>(flag_long(args, "--seed", 1));
    Rng rng(seed);
    bool mult = true, star = true;
    for (int round = 0; round < 5; ++round) {
        CrossedElement x = rng.element(A, 2, 1, 1);
        CrossedElement y = rng.element(A, 2, 1, 1);
        mult = mult && equals(res.map(x * y), res.map(x) * res.map(y));
        star = star && equals(res.map(x.adjoint()), res.map(x).adjoint());
    }
    rep.push_back({"restriction is multiplicative on seeded pairs", mult, ""});
    rep.push_back({"restriction preserves adjoints on seeded pairs", star, ""});
    bool ok = print_report(rep, out);
    return ok ? 0 : 1;
}

int cmd_grandeh(const Args& args, std::ostream& out) {
    SystemFile sys = load_system(args.file);
    std::string point = flag_str(args, "--point", "");
    if (point.empty()) throw InputError("grandeh needs --point PRE:CYC");
    size_t colon = point.find(':');
    if (colon == std::string::npos)
        throw InputError("--point must be of the form PRE:CYC");
    Word pre = sys.parse_word(point.substr(0, colon));
    Word cyc = sys.parse_word(point.substr(colon + 1));
    if (!args.flags.count("--n") || !args.flags.count("--m"))
        throw InputError("grandeh needs --n and --m");
    int n = static_cast<int>(flag_long(args, "--n", 0));
    int m = static_cast<int>(flag_long(args, "--m", 0));
    int max_depth = static_cast<int>(flag_long(args, "--depth", 8));
    if (max_depth < 1) throw InputError("--depth must be positive");

    EvPerPoint x0(sys.matrix, pre, cyc);
    out << "point: " << x0.str() << "\n";
    CylFun h = grande_h(sys.matrix, x0, n, m, max_depth);
    Word w = support(h).front();
    out << "separating cylinder: [" << sys.word_name(w) << "]\n";
    out << "h S^" << n << " S*^" << m << " h = 0: verified\n";
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    try {
        Args a = parse_args(args);
        if (a.command == "analyze") return cmd_analyze(a, out);
        if (a.command == "measure") return cmd_measure(a, out);
        if (a.command == "verify") return cmd_verify(a, out);
        if (a.command == "eval") return cmd_eval(a, out);
        if (a.command == "quotient") return cmd_quotient(a, out);
        if (a.command == "grandeh") return cmd_grandeh(a, out);
        throw InputError("unknown command \"" + a.command + "\"");
    } catch (const SearchFailureError& e) {
        err << "search failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace sftcross
