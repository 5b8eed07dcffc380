#include "sftcross/groupoid.hpp"

#include <algorithm>

namespace sftcross {

namespace {

int constant_column_sum(const TransitionMatrix& A) {
    int p = A.column_sum(0);
    for (Symbol c = 1; c < A.symbol_count(); ++c)
        if (A.column_sum(c) != p)
            throw UnsupportedError(
                "column sums are not constant; the groupoid picture needs every "
                "point to have the same number of preimages");
    return p;
}

std::vector<Symbol> allowed_after(const TransitionMatrix& A, const Word& w) {
    std::vector<Symbol> out;
    for (Symbol b = 0; b < A.symbol_count(); ++b)
        if (w.empty() || A.edge(w.back(), b)) out.push_back(b);
    return out;
}

}  // namespace

GroupoidElement::GroupoidElement(TransitionMatrix A) : A_(std::move(A)) {
    p_ = constant_column_sum(A_);
}

void GroupoidElement::append(const Word& mu, const Word& nu, const RadScalar& coeff) {
    if (!is_admissible(A_, mu) || !is_admissible(A_, nu))
        throw InputError("inadmissible word in a groupoid term");
    if (coeff.is_zero()) return;
    std::vector<Symbol> am = allowed_after(A_, mu), an = allowed_after(A_, nu);
    std::vector<Symbol> common;
    std::set_intersection(am.begin(), am.end(), an.begin(), an.end(),
                          std::back_inserter(common));
    if (common.empty()) return;
    auto key = std::make_pair(mu, nu);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GroupoidElement GroupoidElement::adjoint() const {
    GroupoidElement out(A_);
    for (const auto& [key, c] : terms_) out.append(key.second, key.first, c.conj());
    return out;
}

GroupoidElement GroupoidElement::operator-() const {
    GroupoidElement out(A_);
    for (const auto& [key, c] : terms_) out.append(key.first, key.second, -c);
    return out;
}

GroupoidElement& GroupoidElement::operator+=(const GroupoidElement& o) {
    if (o.A_ != A_)
        throw InputError("sum of groupoid elements over different matrices");
    for (const auto& [key, c] : o.terms_) append(key.first, key.second, c);
    return *this;
}

GroupoidElement& GroupoidElement::operator-=(const GroupoidElement& o) {
    return *this += -o;
}

GroupoidElement operator*(const RadScalar& c, const GroupoidElement& x) {
    GroupoidElement out(x.A_);
    for (const auto& [key, v] : x.terms_) out.append(key.first, key.second, c * v);
    return out;
}

GroupoidElement GroupoidElement::unit(const TransitionMatrix& A) {
    GroupoidElement out(A);
    out.append({}, {}, RadScalar(1));
    return out;
}

GroupoidElement GroupoidElement::isometry(const TransitionMatrix& A) {
    GroupoidElement out(A);
    RadScalar inv_root_p = sqrt_nonneg_rational(Rational(1, out.p()));
    for (Symbol c = 0; c < A.symbol_count(); ++c)
        out.append({c}, {}, inv_root_p);
    return out;
}

GroupoidElement convolve(const GroupoidElement& x, const GroupoidElement& y) {
    if (x.matrix() != y.matrix())
        throw InputError("convolution over different transition matrices");
    const TransitionMatrix& A = x.matrix();
    GroupoidElement out(A);
    for (const auto& [sk, sc] : x.terms()) {
        for (const auto& [tk, tc] : y.terms()) {
            const Word& mu = sk.first;
            const Word& nu = sk.second;
            const Word& rho = tk.first;
            const Word& tau = tk.second;
            RadScalar c = sc * tc;
            if (nu.size() < rho.size()) {
                if (!std::equal(nu.begin(), nu.end(), rho.begin())) continue;
                Word mue = mu;
                mue.insert(mue.end(), rho.begin() + nu.size(), rho.end());
                if (!is_admissible(A, mue)) continue;
                out.append(mue, tau, c);
            } else if (rho.size() < nu.size()) {
                if (!std::equal(rho.begin(), rho.end(), nu.begin())) continue;
                Word taue = tau;
                taue.insert(taue.end(), nu.begin() + rho.size(), nu.end());
                if (!is_admissible(A, taue)) continue;
                out.append(mu, taue, c);
            } else {
                if (nu != rho) continue;
                // common tails must be continuable past mu, nu and tau alike;
                // when nu does not constrain beyond mu and tau the product is
                // a single bisection, otherwise it splits one level down
                std::vector<Symbol> am = allowed_after(A, mu);
                std::vector<Symbol> an = allowed_after(A, nu);
                std::vector<Symbol> at = allowed_after(A, tau);
                std::vector<Symbol> inter;
                std::set_intersection(am.begin(), am.end(), at.begin(), at.end(),
                                      std::back_inserter(inter));
                if (std::includes(an.begin(), an.end(), inter.begin(), inter.end())) {
                    out.append(mu, tau, c);
                    continue;
                }
                for (Symbol b : inter) {
                    if (!std::binary_search(an.begin(), an.end(), b)) continue;
                    Word mub = mu, taub = tau;
                    mub.push_back(b);
                    taub.push_back(b);
                    out.append(mub, taub, c);
                }
            }
        }
    }
    return out;
}

namespace {

void raise_into(const TransitionMatrix& A, const Word& mu, const Word& nu,
                const RadScalar& c, size_t target,
                std::map<std::pair<Word, Word>, RadScalar>& acc) {
    if (mu.size() == target) {
        auto key = std::make_pair(mu, nu);
        auto it = acc.find(key);
        if (it == acc.end()) {
            acc.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
        return;
    }
    for (Symbol b = 0; b < A.symbol_count(); ++b) {
        if (!mu.empty() && !A.edge(mu.back(), b)) continue;
        if (!nu.empty() && !A.edge(nu.back(), b)) continue;
        Word mub = mu, nub = nu;
        mub.push_back(b);
        nub.push_back(b);
        raise_into(A, mub, nub, c, target, acc);
    }
}

std::map<int, std::map<std::pair<Word, Word>, RadScalar>> normalize(
    const GroupoidElement& x) {
    std::map<int, size_t> target;
    for (const auto& [key, c] : x.terms()) {
        int d = static_cast<int>(key.second.size()) - static_cast<int>(key.first.size());
        auto [it, fresh] = target.emplace(d, key.first.size());
        if (!fresh) it->second = std::max(it->second, key.first.size());
    }
    std::map<int, std::map<std::pair<Word, Word>, RadScalar>> out;
    for (const auto& [key, c] : x.terms()) {
        int d = static_cast<int>(key.second.size()) - static_cast<int>(key.first.size());
        raise_into(x.matrix(), key.first, key.second, c, target.at(d), out[d]);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

bool normalize_is_zero(const GroupoidElement& x) { return normalize(x).empty(); }

bool normalize_equals(const GroupoidElement& x, const GroupoidElement& y) {
    return normalize_is_zero(x - y);
}

GroupoidElement phi_fun(const CylFun& f) {
    GroupoidElement out(f.matrix());
    for (const auto& [w, v] : f.values()) out.append(w, w, v);
    return out;
}

GroupoidElement phi_iso(const CrossedElement& x) {
    GroupoidElement v = GroupoidElement::isometry(x.matrix());
    GroupoidElement vstar = v.adjoint();
    GroupoidElement out(x.matrix());
    for (const Monomial& t : x.terms()) {
        GroupoidElement g = phi_fun(t.a);
        for (int j = 0; j < t.n; ++j) g = g * v;
        for (int j = 0; j < t.m; ++j) g = g * vstar;
        out += g * phi_fun(t.b);
    }
    return out;
}

Report verify_groupoid_relations(const TransitionMatrix& A) {
    Report rep;
    GroupoidElement one = GroupoidElement::unit(A);
    GroupoidElement v = GroupoidElement::isometry(A);
    const int p = v.p();

    GroupoidElement pairs(A);
    RadScalar inv_p(Rational(1, p));
    for (Symbol c = 0; c < A.symbol_count(); ++c)
        for (Symbol cp = 0; cp < A.symbol_count(); ++cp)
            pairs.append({c}, {cp}, inv_p);
    rep.push_back({"v v* = (1/p) sum over compatible symbol pairs",
                   normalize_equals(v * v.adjoint(), pairs), ""});
    rep.push_back({"v* v = 1", normalize_equals(v.adjoint() * v, one), ""});

    QuasiBasis qb = quasi_basis(A);
    bool covar = true, trans = true;
    for (const Word& w : admissible_words(A, 2)) {
        CylFun f = CylFun::indicator(A, w);
        GroupoidElement pf = phi_fun(f);
        covar = covar && normalize_equals(v * pf, phi_fun(alpha(f)) * v);
        trans = trans && normalize_equals(v.adjoint() * pf * v, phi_fun(transfer(f)));
    }
    rep.push_back({"v f = alpha(f) v on depth-2 indicators", covar, ""});
    rep.push_back({"v* f v = L(f) on depth-2 indicators", trans, ""});

    GroupoidElement red(A);
    for (const CylFun& uc : qb.u) {
        GroupoidElement pu = phi_fun(uc);
        red += pu * v * v.adjoint() * pu;
    }
    rep.push_back({"sum_c u_c v v* u_c = 1", normalize_equals(red, one), ""});
    return rep;
}

}  // namespace sftcross
