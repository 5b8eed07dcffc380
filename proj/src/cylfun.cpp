#include "sftcross/cylfun.hpp"

#include <sstream>

namespace sftcross {

CylFun::CylFun(TransitionMatrix A, int depth, const std::map<Word, RadScalar>& values)
    : A_(std::move(A)), depth_(depth) {
    if (depth < 0) throw InputError("negative function depth");
    for (const Word& w : admissible_words(A_, depth_)) vals_[w];
    for (const auto& [w, v] : values) {
        auto it = vals_.find(w);
        if (it == vals_.end())
            throw InputError("function value on non-admissible or wrong-depth word " +
                             word_str(w));
        it->second = v;
    }
}

CylFun CylFun::constant(const TransitionMatrix& A, const RadScalar& value) {
    return CylFun(A, 0, {{Word{}, value}});
}

CylFun CylFun::indicator(const TransitionMatrix& A, const Word& w) {
    if (!is_admissible(A, w))
        throw InputError("indicator of non-admissible word " + word_str(w));
    return CylFun(A, static_cast<int>(w.size()), {{w, RadScalar(1)}});
}

const RadScalar& CylFun::value(const Word& w) const {
    if (static_cast<int>(w.size()) < depth_)
        throw InputError("word " + word_str(w) + " shallower than function depth " +
                         std::to_string(depth_));
    auto it = vals_.find(static_cast<int>(w.size()) == depth_
                             ? w
                             : Word(w.begin(), w.begin() + depth_));
    if (it == vals_.end())
        throw InputError("word " + word_str(w) + " not admissible");
    return it->second;
}

CylFun CylFun::refined(int depth) const {
    if (depth < depth_) throw InputError("cannot coarsen a cylinder function");
    if (depth == depth_) return *this;
    CylFun out(A_, depth, {});
    for (auto& [w, v] : out.vals_) v = value(w);
    return out;
}

bool CylFun::is_zero() const {
    for (const auto& [w, v] : vals_)
        if (!v.is_zero()) return false;
    return true;
}

CylFun CylFun::conj() const {
    CylFun out = *this;
    for (auto& [w, v] : out.vals_) v = v.conj();
    return out;
}

CylFun CylFun::operator-() const {
    CylFun out = *this;
    for (auto& [w, v] : out.vals_) v = -v;
    return out;
}

namespace {

void require_same_matrix(const CylFun& f, const CylFun& g) {
    if (f.matrix() != g.matrix())
        throw InputError("cylinder functions over different transition matrices");
}

template <typename Op>
CylFun zip(const CylFun& f, const CylFun& g, Op op) {
    require_same_matrix(f, g);
    int d = std::max(f.depth(), g.depth());
    CylFun a = f.refined(d), b = g.refined(d);
    std::map<Word, RadScalar> vals;
    for (const auto& [w, v] : a.values()) vals[w] = op(v, b.values().at(w));
    return CylFun(f.matrix(), d, vals);
}

}  // namespace

CylFun operator+(const CylFun& f, const CylFun& g) {
    return zip(f, g, [](const RadScalar& x, const RadScalar& y) { return x + y; });
}

CylFun operator-(const CylFun& f, const CylFun& g) {
    return zip(f, g, [](const RadScalar& x, const RadScalar& y) { return x - y; });
}

CylFun operator*(const CylFun& f, const CylFun& g) {
    return zip(f, g, [](const RadScalar& x, const RadScalar& y) { return x * y; });
}

CylFun operator*(const RadScalar& c, const CylFun& f) {
    CylFun out = f;
    for (auto& [w, v] : out.vals_) v = c * v;
    return out;
}

bool operator==(const CylFun& f, const CylFun& g) {
    require_same_matrix(f, g);
    int d = std::max(f.depth(), g.depth());
    return f.refined(d).values() == g.refined(d).values();
}

CylFun CylFun::pointwise_inverse() const {
    CylFun out = *this;
    for (auto& [w, v] : out.vals_) {
        if (v.is_zero())
            throw DomainError("pointwise inverse of zero at word " + word_str(w));
        v = invert_monoradical(v);
    }
    return out;
}

CylFun CylFun::pointwise_sqrt() const {
    CylFun out = *this;
    for (auto& [w, v] : out.vals_) {
        if (!v.is_rational() || v.rational_value() < 0)
            throw DomainError("pointwise sqrt needs nonnegative rational value at word " +
                              word_str(w) + ", got " + v.str());
        v = sqrt_nonneg_rational(v.rational_value());
    }
    return out;
}

std::string CylFun::str() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [w, v] : vals_) {
        if (!first) out << ", ";
        first = false;
        out << word_str(w) << ": " << v.str();
    }
    out << '}';
    return out.str();
}

CylFun alpha(const CylFun& f) {
    std::map<Word, RadScalar> vals;
    for (const Word& w : admissible_words(f.matrix(), f.depth() + 1))
        vals[w] = f.value(Word(w.begin() + 1, w.end()));
    return CylFun(f.matrix(), f.depth() + 1, vals);
}

CylFun alpha_pow(const CylFun& f, int n) {
    if (n < 0) throw InputError("negative power of alpha");
    CylFun out = f;
    for (int j = 0; j < n; ++j) out = alpha(out);
    return out;
}

CylFun transfer_raw(const CylFun& f) {
    const TransitionMatrix& A = f.matrix();
    int dout = std::max(1, f.depth() - 1);
    std::map<Word, RadScalar> vals;
    for (const Word& y : admissible_words(A, dout)) {
        RadScalar sum;
        for (Symbol b = 0; b < A.symbol_count(); ++b) {
            if (!A.edge(b, y.front())) continue;
            Word by;
            by.reserve(y.size() + 1);
            by.push_back(b);
            by.insert(by.end(), y.begin(), y.end());
            sum += f.value(by);
        }
        vals[y] = sum;
    }
    return CylFun(A, dout, vals);
}

CylFun transfer(const CylFun& f) {
    const TransitionMatrix& A = f.matrix();
    CylFun raw = transfer_raw(f);
    std::map<Word, RadScalar> vals;
    for (const auto& [y, v] : raw.values()) {
        Rational inv(1, A.column_sum(y.front()));
        inv.canonicalize();
        vals[y] = RadScalar(inv) * v;
    }
    return CylFun(A, raw.depth(), vals);
}

CylFun transfer_pow(const CylFun& f, int n) {
    if (n < 0) throw InputError("negative power of the transfer operator");
    CylFun out = f;
    for (int j = 0; j < n; ++j) out = transfer(out);
    return out;
}

CylFun expectation_En(const CylFun& f, int n) {
    return alpha_pow(transfer_pow(f, n), n);
}

CylFun QuasiBasis::I(int n) const {
    if (n < 0) throw InputError("negative level");
    CylFun out = CylFun::constant(A, RadScalar(1));
    for (int j = 0; j < n; ++j) out = out * alpha_pow(lambda, j);
    return out;
}

std::vector<CylFun> QuasiBasis::multi(int n) const {
    if (n < 0) throw InputError("negative level");
    std::vector<CylFun> out{CylFun::constant(A, RadScalar(1))};
    for (int j = 0; j < n; ++j) {
        std::vector<CylFun> next;
        next.reserve(out.size() * u.size());
        for (const CylFun& prefix : out)
            for (const CylFun& uc : u) next.push_back(prefix * alpha_pow(uc, j));
        out = std::move(next);
    }
    return out;
}

QuasiBasis quasi_basis(const TransitionMatrix& A) {
    CylFun lam = alpha(transfer_raw(CylFun::constant(A, RadScalar(1))));
    QuasiBasis qb{A, {}, lam, lam};
    for (Symbol c = 0; c < A.symbol_count(); ++c) {
        CylFun cut = lam * CylFun::indicator(A, {c});
        qb.u.push_back(cut.pointwise_sqrt());
    }
    return qb;
}

bool quasi_basis_check(const CylFun& f) {
    QuasiBasis qb = quasi_basis(f.matrix());
    CylFun sum = CylFun::constant(f.matrix(), RadScalar(0));
    for (const CylFun& uc : qb.u)
        sum = sum + uc * expectation_En(uc.conj() * f, 1);
    return sum == f;
}

std::vector<Word> support(const CylFun& f) {
    std::vector<Word> out;
    for (const auto& [w, v] : f.values())
        if (!v.is_zero()) out.push_back(w);
    return out;
}

}  // namespace sftcross
