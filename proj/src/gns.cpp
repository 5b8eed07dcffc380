#include "sftcross/gns.hpp"

#include <algorithm>

#include "sftcross/random.hpp"

namespace sftcross {

void GnsVector::add(const CylFun& f, int k) {
    if (f.matrix() != A_)
        throw InputError("vector slot over a different transition matrix");
    auto it = slots_.find(k);
    if (it == slots_.end()) {
        if (!f.is_zero()) slots_.emplace(k, f);
        return;
    }
    CylFun sum = it->second + f;
    if (sum.is_zero())
        slots_.erase(it);
    else
        it->second = sum;
}

GnsVector GnsVector::operator-() const {
    GnsVector out(A_);
    for (const auto& [k, f] : slots_) out.add(-f, k);
    return out;
}

GnsVector operator+(const GnsVector& a, const GnsVector& b) {
    if (a.A_ != b.A_) throw InputError("vector sum over different transition matrices");
    GnsVector out = a;
    for (const auto& [k, f] : b.slots_) out.add(f, k);
    return out;
}

GnsVector operator-(const GnsVector& a, const GnsVector& b) { return a + (-b); }

GnsVector shift_up(const GnsVector& v) {
    GnsVector out(v.matrix());
    for (const auto& [k, f] : v.slots()) out.add(alpha(f), k + 1);
    return out;
}

GnsVector shift_down(const GnsVector& v, const TransferWeights& w) {
    GnsVector out(v.matrix());
    for (const auto& [k, f] : v.slots()) out.add(transfer(f, w), k - 1);
    return out;
}

GnsVector mult(const CylFun& f, const GnsVector& v) {
    GnsVector out(v.matrix());
    for (const auto& [k, g] : v.slots()) out.add(f * g, k);
    return out;
}

namespace {

void require_faithful(const InvariantMeasure& mu) {
    if (!mu.fully_supported())
        throw OracleUnavailableError(
            "state is not faithful: some cylinder has zero mass");
}

}  // namespace

GnsVector act(const CrossedElement& x, const GnsVector& v, const InvariantMeasure& mu) {
    if (x.matrix() != v.matrix() || x.matrix() != mu.matrix())
        throw InputError("element, vector and measure over different matrices");
    require_faithful(mu);
    GnsVector out(x.matrix());
    for (const auto& [k, f] : v.slots()) {
        for (const Monomial& t : x.terms()) {
            CylFun g = transfer_pow(t.b * f, t.m, mu.weights());
            out.add(t.a * alpha_pow(g, t.n), k + t.n - t.m);
        }
    }
    return out;
}

CylFun act_plain(const CrossedElement& x, const CylFun& f, const InvariantMeasure& mu) {
    if (x.matrix() != f.matrix() || x.matrix() != mu.matrix())
        throw InputError("element, function and measure over different matrices");
    require_faithful(mu);
    CylFun out = CylFun::constant(x.matrix(), RadScalar(0));
    for (const Monomial& t : x.terms())
        out = out + t.a * alpha_pow(transfer_pow(t.b * f, t.m, mu.weights()), t.n);
    return out;
}

RadScalar inner(const InvariantMeasure& mu, const GnsVector& u, const GnsVector& v) {
    if (u.matrix() != v.matrix() || u.matrix() != mu.matrix())
        throw InputError("inner product over different matrices");
    RadScalar out(0);
    for (const auto& [k, f] : u.slots()) {
        auto it = v.slots().find(k);
        if (it == v.slots().end()) continue;
        out += inner(mu, it->second, f);
    }
    return out;
}

RadScalar matrix_element(const CrossedElement& x, const GnsVector& u,
                         const GnsVector& v, const InvariantMeasure& mu) {
    return inner(mu, u, act(x, v, mu));
}

bool equality_oracle(const CrossedElement& x, const CrossedElement& y,
                     const InvariantMeasure& mu) {
    if (x.matrix() != y.matrix())
        throw InputError("comparing elements over different transition matrices");
    require_faithful(mu);
    if (!mu.weights().is_uniform())
        throw OracleUnavailableError(
            "oracle needs the uniform transfer weights: the action respects the "
            "product's defining identities only for the canonical transfer");
    const TransitionMatrix& A = x.matrix();
    CrossedElement z = x - y;

    std::map<int, int> level;
    for (const Monomial& t : z.terms()) {
        auto [it, fresh] = level.emplace(t.degree(), t.n);
        if (!fresh) it->second = std::max(it->second, t.n);
    }
    for (const auto& [d, N] : level) {
        const int M = N - d;
        int r = 1;
        for (const Monomial& t : z.terms())
            if (t.degree() == d)
                r = std::max({r, t.a.depth() - N, t.b.depth() - M});
        for (const Word& wp : admissible_words(A, M + r)) {
            GnsVector img = act(z, GnsVector(CylFun::indicator(A, wp), 0), mu);
            auto it = img.slots().find(d);
            if (it == img.slots().end()) continue;
            // the slot component has depth <= N+r, and cylinder masses are
            // strictly positive, so pairing against every e_w of length N+r
            // vanishes exactly when the component is the zero function
            if (!it->second.is_zero()) return false;
        }
    }
    return true;
}

Report av_relation_checks(const InvariantMeasure& mu, std::uint64_t seed, int depth) {
    require_faithful(mu);
    if (depth < 1) throw InputError("depth must be at least 1");
    const TransitionMatrix& A = mu.matrix();
    const TransferWeights& w = mu.weights();
    Rng rng(seed);

    bool transfer_ok = true, isometry_ok = true, adjoint_ok = true, covar_ok = true;
    for (int round = 0; round < 6; ++round) {
        int df = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(depth)));
        CylFun f = rng.cylfun(A, df);
        CylFun g = rng.cylfun(A, static_cast<int>(rng.below(static_cast<std::uint64_t>(depth) + 1)));
        CylFun h = rng.cylfun(A, static_cast<int>(rng.below(static_cast<std::uint64_t>(depth) + 1)));
        int k = static_cast<int>(rng.below(5)) - 2;
        GnsVector v(g, k);
        GnsVector u(h, k);

        GnsVector lhs = shift_down(mult(f, shift_up(v)), w);
        GnsVector rhs = mult(transfer(f, w), v);
        transfer_ok = transfer_ok && (lhs - rhs).is_zero();

        isometry_ok = isometry_ok &&
                      inner(mu, shift_up(u), shift_up(v)) == inner(mu, u, v);

        GnsVector v_lower(h, k - 1);
        adjoint_ok = adjoint_ok &&
                     inner(mu, shift_down(GnsVector(g, k), w), v_lower) ==
                         inner(mu, GnsVector(g, k), shift_up(v_lower));

        covar_ok = covar_ok &&
                   (shift_up(mult(f, v)) - mult(alpha(f), shift_up(v))).is_zero();
    }

    Report rep;
    rep.push_back({"S* M_f S = M_{L_w(f)} on cylinder vectors", transfer_ok, ""});
    rep.push_back({"shift part is isometric for the state", isometry_ok, ""});
    rep.push_back({"<S*u, v> = <u, Sv>", adjoint_ok, ""});
    rep.push_back({"covariance S M_f = M_{alpha(f)} S", covar_ok, ""});
    return rep;
}

}  // namespace sftcross
