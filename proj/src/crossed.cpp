#include "sftcross/crossed.hpp"

#include <algorithm>
#include <sstream>

namespace sftcross {

Monomial::Monomial(CylFun a_, int n_, int m_, CylFun b_)
    : a(std::move(a_)), n(n_), m(m_), b(std::move(b_)) {
    if (n < 0 || m < 0) throw InputError("negative isometry powers in monomial");
    if (a.matrix() != b.matrix())
        throw InputError("monomial coefficients over different transition matrices");
}

Monomial multiply(const Monomial& x, const Monomial& y) {
    if (x.matrix() != y.matrix())
        throw InputError("product of monomials over different transition matrices");
    CylFun bc = x.b * y.a;
    if (x.m <= y.n)
        return Monomial(x.a * alpha_pow(transfer_pow(bc, x.m), x.n),
                        x.n + y.n - x.m, y.m, y.b);
    return Monomial(x.a, x.n, x.m - y.n + y.m,
                    alpha_pow(transfer_pow(bc, y.n), y.m) * y.b);
}

Monomial adjoint(const Monomial& x) {
    return Monomial(x.b.conj(), x.m, x.n, x.a.conj());
}

CrossedElement::CrossedElement(const Monomial& mono) : A_(mono.matrix()) {
    append(mono);
}

CrossedElement CrossedElement::from_function(const CylFun& f) {
    CrossedElement out(f.matrix());
    out.append(Monomial(f, 0, 0, CylFun::constant(f.matrix(), RadScalar(1))));
    return out;
}

CrossedElement CrossedElement::from_scalar(const TransitionMatrix& A,
                                           const RadScalar& c) {
    return from_function(CylFun::constant(A, c));
}

CrossedElement CrossedElement::unit(const TransitionMatrix& A) {
    return from_scalar(A, RadScalar(1));
}

CrossedElement CrossedElement::isometry(const TransitionMatrix& A) {
    CylFun one = CylFun::constant(A, RadScalar(1));
    CrossedElement out(A);
    out.append(Monomial(one, 1, 0, one));
    return out;
}

void CrossedElement::append(const Monomial& mono) {
    if (mono.matrix() != A_)
        throw InputError("appending a monomial over a different transition matrix");
    if (mono.a.is_zero() || mono.b.is_zero()) return;
    terms_.push_back(mono);
}

CrossedElement CrossedElement::adjoint() const {
    CrossedElement out(A_);
    for (const Monomial& t : terms_) out.append(sftcross::adjoint(t));
    return out;
}

CrossedElement CrossedElement::operator-() const {
    CrossedElement out(A_);
    for (const Monomial& t : terms_) out.append(Monomial(-t.a, t.n, t.m, t.b));
    return out;
}

CrossedElement& CrossedElement::operator+=(const CrossedElement& o) {
    if (o.A_ != A_) throw InputError("sum of elements over different transition matrices");
    for (const Monomial& t : o.terms_) append(t);
    return *this;
}

CrossedElement& CrossedElement::operator-=(const CrossedElement& o) {
    return *this += -o;
}

CrossedElement operator*(const CrossedElement& a, const CrossedElement& b) {
    if (a.A_ != b.A_)
        throw InputError("product of elements over different transition matrices");
    CrossedElement out(a.A_);
    for (const Monomial& x : a.terms_)
        for (const Monomial& y : b.terms_) out.append(multiply(x, y));
    return out;
}

CrossedElement operator*(const RadScalar& c, const CrossedElement& x) {
    CrossedElement out(x.A_);
    for (const Monomial& t : x.terms_)
        out.append(Monomial(c * t.a, t.n, t.m, t.b));
    return out;
}

CrossedElement raise_level(const Monomial& x) {
    QuasiBasis qb = quasi_basis(x.matrix());
    CrossedElement out(x.matrix());
    for (const CylFun& uc : qb.u)
        out.append(Monomial(x.a * alpha_pow(uc, x.n), x.n + 1, x.m + 1,
                            alpha_pow(uc, x.m) * x.b));
    return out;
}

NormalForm normal_form(const CrossedElement& x, const std::map<int, int>& levels) {
    std::map<int, std::vector<Monomial>> by_degree;
    for (const Monomial& t : x.terms()) by_degree[t.degree()].push_back(t);

    std::map<int, DegreeBlock> blocks;
    for (auto& [d, terms] : by_degree) {
        int maxn = 0;
        for (const Monomial& t : terms) maxn = std::max(maxn, t.n);
        int N = maxn;
        if (auto it = levels.find(d); it != levels.end()) {
            if (it->second < maxn)
                throw InputError("requested level " + std::to_string(it->second) +
                                 " below the maximal isometry power " +
                                 std::to_string(maxn) + " at degree " +
                                 std::to_string(d));
            N = it->second;
        }
        const int M = N - d;

        std::vector<Monomial> raised;
        std::vector<Monomial> queue = terms;
        while (!queue.empty()) {
            Monomial t = queue.back();
            queue.pop_back();
            if (t.n == N) {
                raised.push_back(std::move(t));
                continue;
            }
            CrossedElement up = raise_level(t);
            for (const Monomial& r : up.terms()) queue.push_back(r);
        }

        int r = 1;
        for (const Monomial& t : raised)
            r = std::max({r, t.a.depth() - N, t.b.depth() - M});

        DegreeBlock block{N, M, r, {}};
        for (const Monomial& t : raised) {
            CylFun a = t.a.refined(N + r), b = t.b.refined(M + r);
            for (const auto& [w, va] : a.values()) {
                if (va.is_zero()) continue;
                for (const auto& [wp, vb] : b.values()) {
                    if (vb.is_zero()) continue;
                    // the r-tails are the shared future after both prefixes
                    if (!std::equal(w.end() - r, w.end(), wp.end() - r)) continue;
                    RadScalar c = va * vb;
                    auto key = std::make_pair(w, wp);
                    auto it = block.coeffs.find(key);
                    if (it == block.coeffs.end()) {
                        block.coeffs.emplace(std::move(key), std::move(c));
                    } else {
                        it->second += c;
                        if (it->second.is_zero()) block.coeffs.erase(it);
                    }
                }
            }
        }
        if (!block.coeffs.empty()) blocks.emplace(d, std::move(block));
    }
    return NormalForm(std::move(blocks));
}

std::string NormalForm::str() const {
    if (blocks_.empty()) return "0\n";
    std::ostringstream out;
    for (const auto& [d, blk] : blocks_) {
        out << "degree " << d << " (N=" << blk.n << ", M=" << blk.m
            << ", r=" << blk.tail << ")\n";
        for (const auto& [pair, c] : blk.coeffs)
            out << "  " << word_str(pair.first) << " | " << word_str(pair.second)
                << " : " << c.str() << "\n";
    }
    return out.str();
}

bool is_zero(const CrossedElement& x) { return normal_form(x).is_zero(); }

bool equals(const CrossedElement& x, const CrossedElement& y) {
    return is_zero(x - y);
}

CrossedElement expectation_F(const CrossedElement& x) {
    CrossedElement out(x.matrix());
    for (const Monomial& t : x.terms())
        if (t.n == t.m) out.append(t);
    return out;
}

namespace {

CrossedElement pow_elem(const CrossedElement& e, int k) {
    CrossedElement out = CrossedElement::unit(e.matrix());
    for (int j = 0; j < k; ++j) out = out * e;
    return out;
}

}  // namespace

CylFun expectation_G(const CrossedElement& x) {
    const TransitionMatrix& A = x.matrix();
    QuasiBasis qb = quasi_basis(A);

    CylFun direct = CylFun::constant(A, RadScalar(0));
    int N = 0;
    for (const Monomial& t : x.terms()) {
        if (t.n != t.m) continue;
        direct = direct + t.a * qb.I(t.n).pointwise_inverse() * t.b;
        N = std::max(N, t.n);
    }

    // recompute through the normalized multi-index basis and insist the two
    // paths agree
    CrossedElement x0 = expectation_F(x);
    CylFun root = qb.I(N).pointwise_sqrt().pointwise_inverse();
    CrossedElement basis_form(A);
    CylFun vsum = CylFun::constant(A, RadScalar(0));
    for (const CylFun& ui : qb.multi(N)) {
        CylFun vi = root * ui;
        basis_form += CrossedElement::from_function(vi) * x0 *
                      CrossedElement::from_function(vi.conj());
        vsum = vsum + vi * vi.conj();
    }
    if (!(vsum == CylFun::constant(A, RadScalar(1))))
        throw Error("normalized multi-index basis does not sum to the unit");
    if (!equals(basis_form, CrossedElement::from_function(direct)))
        throw Error("expectation mismatch between slice and basis computations");
    return direct;
}

Report verify_finite_index_identities(const TransitionMatrix& A, int n_max) {
    Report rep;
    QuasiBasis qb = quasi_basis(A);
    CrossedElement one = CrossedElement::unit(A);
    CrossedElement S = CrossedElement::isometry(A);

    CrossedElement k0(A);
    for (const CylFun& uc : qb.u)
        k0 += CrossedElement::from_function(uc) * S * S.adjoint() *
              CrossedElement::from_function(uc);
    rep.push_back({"unit redundancy sum_c u_c S S* u_c = 1", equals(k0, one), ""});

    for (int n = 1; n <= n_max; ++n) {
        CrossedElement absorb(A);
        CylFun mass = CylFun::constant(A, RadScalar(0));
        CrossedElement Sn = pow_elem(S, n);
        for (const CylFun& ui : qb.multi(n)) {
            CrossedElement eu = CrossedElement::from_function(ui);
            absorb += eu * Sn * Sn.adjoint() * eu.adjoint();
            mass = mass + ui * ui.conj();
        }
        rep.push_back({"multi-index absorption at level " + std::to_string(n),
                       equals(absorb, one), ""});
        rep.push_back({"multi-index mass equals I(" + std::to_string(n) + ")",
                       mass == qb.I(n), ""});
    }

    bool cols = true;
    std::string col_detail;
    CrossedElement row_sum(A);
    for (Symbol c = 0; c < A.symbol_count(); ++c) {
        CrossedElement sc = CrossedElement::from_function(qb.u[c]) * S;
        CylFun target = CylFun::constant(A, RadScalar(0));
        for (Symbol b = 0; b < A.symbol_count(); ++b)
            if (A.edge(c, b)) target = target + CylFun::indicator(A, {b});
        if (cols && !equals(sc.adjoint() * sc, CrossedElement::from_function(target))) {
            cols = false;
            col_detail = "fails at symbol " + std::to_string(c);
        }
        row_sum += sc * sc.adjoint();
    }
    rep.push_back({"s_c* s_c = sum_b A(c,b) 1_[b]", cols, col_detail});
    rep.push_back({"sum_c s_c s_c* = 1", equals(row_sum, one), ""});
    return rep;
}

CylFun grande_h(const TransitionMatrix& A, const EvPerPoint& x0, int n, int m,
                int max_depth) {
    if (n < 0 || m < 0 || n == m)
        throw InputError("separating cylinder needs distinct nonnegative powers");
    if (x0.shifted(n) == x0.shifted(m))
        throw InputError("the two shifts of " + x0.str() +
                         " coincide; no separating cylinder exists");
    for (int k = 1; k <= max_depth; ++k) {
        Word w = x0.prefix(static_cast<size_t>(k));
        if (shift_overlap_nonempty(A, w, n, m)) continue;
        CylFun h = CylFun::indicator(A, w);
        CrossedElement eh = CrossedElement::from_function(h);
        CrossedElement S = CrossedElement::isometry(A);
        CrossedElement prod = eh * pow_elem(S, n) * pow_elem(S.adjoint(), m) * eh;
        if (!is_zero(prod))
            throw Error("separating cylinder postcondition failed at " + word_str(w));
        return h;
    }
    throw SearchFailureError("no separating cylinder of depth <= " +
                             std::to_string(max_depth) + " around " + x0.str() +
                             " for powers (" + std::to_string(n) + "," +
                             std::to_string(m) + ")");
}

Restriction restriction_hom(const TransitionMatrix& A, const std::vector<Symbol>& keep) {
    std::vector<Symbol> k = keep;
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    if (k.empty()) throw InputError("empty kept symbol set");
    for (Symbol v : k)
        if (v < 0 || v >= A.symbol_count())
            throw InputError("unknown symbol " + std::to_string(v));
    for (Symbol b = 0; b < A.symbol_count(); ++b) {
        if (std::binary_search(k.begin(), k.end(), b)) continue;
        for (Symbol v : k)
            if (A.edge(b, v))
                throw InputError("kept set is not predecessor-closed: symbol " +
                                 std::to_string(b) + " has an edge into kept symbol " +
                                 std::to_string(v));
    }
    std::vector<std::vector<int>> rows(k.size(), std::vector<int>(k.size(), 0));
    for (size_t i = 0; i < k.size(); ++i)
        for (size_t j = 0; j < k.size(); ++j)
            rows[i][j] = A.edge(k[i], k[j]) ? 1 : 0;
    try {
        return Restriction{A, TransitionMatrix(rows), k};
    } catch (const InputError& e) {
        throw InputError(std::string("restricted matrix is not a valid sub-shift: ") +
                         e.what());
    }
}

CylFun Restriction::map(const CylFun& f) const {
    if (f.matrix() != full)
        throw InputError("function is not over the restricted matrix's parent");
    std::map<Word, RadScalar> vals;
    for (const Word& ws : admissible_words(sub, f.depth())) {
        Word orig(ws.size());
        for (size_t j = 0; j < ws.size(); ++j) orig[j] = keep[ws[j]];
        vals[ws] = f.value(orig);
    }
    return CylFun(sub, f.depth(), vals);
}

CrossedElement Restriction::map(const CrossedElement& x) const {
    CrossedElement out(sub);
    for (const Monomial& t : x.terms())
        out.append(Monomial(map(t.a), t.n, t.m, map(t.b)));
    return out;
}

namespace {

std::string expr_word_token(const Word& w) {
    bool wide = false;
    for (Symbol s : w)
        if (s > 9) wide = true;
    std::string out = "e_";
    for (size_t j = 0; j < w.size(); ++j) {
        if (wide && j) out += '_';
        out += std::to_string(w[j]);
    }
    return out;
}

std::string fun_expr(const CylFun& f) {
    if (f.depth() == 0) return "(" + f.value(Word{}).str() + ")";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, v] : f.values()) {
        if (v.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << v.str() << ")*" << expr_word_token(w);
    }
    if (first) return "0";
    return out.str();
}

}  // namespace

std::string to_expression_string(const CrossedElement& x) {
    if (x.terms().empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Monomial& t : x.terms()) {
        if (!first) out << " + ";
        first = false;
        out << "(" << fun_expr(t.a) << ") * S^" << t.n << " * S^" << t.m
            << "' * (" << fun_expr(t.b) << ")";
    }
    return out.str();
}

}  // namespace sftcross
