#include "sftcross/random.hpp"

namespace sftcross {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) return 0;
    return gen_() % n;
}

Rational Rng::rational(long lo, long hi) {
    long span = hi - lo + 1;
    long num = lo + static_cast<long>(below(static_cast<std::uint64_t>(span)));
    long den = 1 + static_cast<long>(below(4));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

RadScalar Rng::scalar() {
    static const long rads[4] = {2, 3, 5, 6};
    switch (below(8)) {
        case 5: {
            Integer d(rads[below(4)]);
            return RadScalar(rational()) +
                   RadScalar::radical_term(d, Gaussian(rational(1, 3)));
        }
        case 6:
            return RadScalar(Gaussian(rational(), rational(1, 3)));
        case 7:
            return RadScalar(rational(1, 3)) * RadScalar::i();
        default:
            return RadScalar(rational());
    }
}

Word Rng::word(const TransitionMatrix& A, int len) {
    Word w;
    if (len <= 0) return w;
    w.push_back(static_cast<Symbol>(below(static_cast<std::uint64_t>(A.symbol_count()))));
    while (static_cast<int>(w.size()) < len) {
        std::vector<Symbol> next;
        for (Symbol b = 0; b < A.symbol_count(); ++b)
            if (A.edge(w.back(), b)) next.push_back(b);
        w.push_back(next[below(next.size())]);
    }
    return w;
}

CylFun Rng::cylfun(const TransitionMatrix& A, int depth) {
    std::map<Word, RadScalar> vals;
    for (const Word& w : admissible_words(A, depth)) vals.emplace(w, scalar());
    return CylFun(A, depth, vals);
}

Monomial Rng::monomial(const TransitionMatrix& A, int max_pow, int max_depth) {
    int n = static_cast<int>(below(static_cast<std::uint64_t>(max_pow) + 1));
    int m = static_cast<int>(below(static_cast<std::uint64_t>(max_pow) + 1));
    CylFun a = cylfun(A, static_cast<int>(below(static_cast<std::uint64_t>(max_depth) + 1)));
    CylFun b = cylfun(A, static_cast<int>(below(static_cast<std::uint64_t>(max_depth) + 1)));
    return Monomial(std::move(a), n, m, std::move(b));
}

CrossedElement Rng::element(const TransitionMatrix& A, int max_terms, int max_pow,
                            int max_depth) {
    CrossedElement out(A);
    std::uint64_t k = 1 + below(static_cast<std::uint64_t>(max_terms));
    for (std::uint64_t j = 0; j < k; ++j) out.append(monomial(A, max_pow, max_depth));
    return out;
}

}  // namespace sftcross
