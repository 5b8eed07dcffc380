#include "sftcross/scalar.hpp"

#include <cctype>
#include <cstring>
#include <sstream>
#include <vector>

namespace sftcross {

Gaussian Gaussian::inv() const {
    if (is_zero()) throw DomainError("inverse of zero");
    Rational n = re * re + im * im;
    return {re / n, -im / n};
}

std::pair<Integer, Integer> squarefree_decompose(Integer n) {
    if (n < 0) throw DomainError("squarefree_decompose: negative input");
    if (n == 0) return {Integer(0), Integer(1)};
    const unsigned long bound = 1000000;
    Integer s = 1, d = 1;
    auto extract = [&](unsigned long p) {
        unsigned long e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) {
            Integer pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), p, e / 2);
            s *= pw;
            if (e % 2) d *= p;
        }
    };
    extract(2);
    bool sieved_to_sqrt = Integer(9) > n;
    for (unsigned long p = 3; p <= bound; p += 2) {
        if (Integer(p) * Integer(p) > n) {
            sieved_to_sqrt = true;
            break;
        }
        extract(p);
    }
    if (n == 1) return {s, d};
    if (sieved_to_sqrt) {
        // every prime up to sqrt(n) was removed, so n is prime
        d *= n;
        return {s, d};
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        s *= r;
        return {s, d};
    }
    // cofactor has all prime factors above the sieve bound; below bound^3 it
    // is a prime or a product of two distinct primes, hence square-free
    Integer cube = Integer(bound);
    cube = cube * cube * cube;
    if (n < cube) {
        d *= n;
        return {s, d};
    }
    throw UnsupportedError("radicand has an unfactorable cofactor: " + n.get_str());
}

RadScalar RadScalar::radical_term(const Integer& d, const Gaussian& c) {
    RadScalar r;
    if (!c.is_zero()) r.terms_[d] = c;
    return r;
}

bool RadScalar::is_real() const {
    for (const auto& [d, c] : terms_)
        if (c.im != 0) return false;
    return true;
}

bool RadScalar::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == 1 &&
           terms_.begin()->second.im == 0;
}

Rational RadScalar::rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw DomainError("scalar is not rational: " + str());
    return terms_.begin()->second.re;
}

RadScalar RadScalar::conj() const {
    RadScalar out;
    for (const auto& [d, c] : terms_) out.terms_[d] = c.conj();
    return out;
}

RadScalar RadScalar::operator-() const {
    RadScalar out;
    for (const auto& [d, c] : terms_) out.terms_[d] = -c;
    return out;
}

RadScalar& RadScalar::operator+=(const RadScalar& o) {
    for (const auto& [d, c] : o.terms_) {
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_.emplace(d, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

RadScalar& RadScalar::operator-=(const RadScalar& o) { return *this += -o; }

RadScalar operator*(const RadScalar& a, const RadScalar& b) {
    RadScalar out;
    for (const auto& [d1, c1] : a.terms_)
        for (const auto& [d2, c2] : b.terms_) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
            Integer key = (d1 / g) * (d2 / g);
            Gaussian coeff = c1 * c2 * Gaussian(Rational(g));
            auto it = out.terms_.find(key);
            if (it == out.terms_.end()) {
                if (!coeff.is_zero()) out.terms_.emplace(key, coeff);
            } else {
                it->second += coeff;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    return out;
}

int RadScalar::sign_real() const {
    if (!is_real()) throw DomainError("sign of a non-real scalar: " + str());
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return sgn(terms_.begin()->second.re);
    // Exact dyadic enclosure of each radical, widened until zero is excluded.
    // Distinct square-free radicals are linearly independent over Q, so a
    // nonzero term map has a nonzero value and the loop terminates.
    for (unsigned prec = 8; prec <= (1u << 14); prec *= 2) {
        Integer scale = Integer(1) << prec;
        Rational lo(0), hi(0);
        for (const auto& [d, c] : terms_) {
            Integer root;
            Integer rad = d * scale * scale;
            mpz_sqrt(root.get_mpz_t(), rad.get_mpz_t());
            Rational l(root, scale), h(root + 1, scale);
            l.canonicalize();
            h.canonicalize();
            if (c.re >= 0) {
                lo += c.re * l;
                hi += c.re * h;
            } else {
                lo += c.re * h;
                hi += c.re * l;
            }
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    throw DomainError("sign determination exceeded precision budget: " + str());
}

std::string RadScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Rational& coeff, const Integer& d, bool imag) {
        if (coeff == 0) return;
        bool neg = coeff < 0;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        Rational a = abs(coeff);
        std::vector<std::string> factors;
        if (a != 1 || (d == 1 && !imag)) factors.push_back(a.get_str());
        if (d != 1) factors.push_back("sqrt(" + d.get_str() + ")");
        if (imag) factors.push_back("i");
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) out << '*';
            out << factors[i];
        }
    };
    for (const auto& [d, c] : terms_) {
        emit(c.re, d, false);
        emit(c.im, d, true);
    }
    return out.str();
}

RadScalar sqrt_nonneg_rational(const Rational& r) {
    if (r < 0) throw DomainError("sqrt of negative rational: " + r.get_str());
    if (r == 0) return RadScalar();
    auto [s, d] = squarefree_decompose(r.get_num() * r.get_den());
    Rational coeff(s, r.get_den());
    coeff.canonicalize();
    return RadScalar::radical_term(d, Gaussian(coeff));
}

RadScalar invert_monoradical(const RadScalar& x) {
    const auto& t = x.terms();
    if (t.empty()) throw DomainError("inverse of zero");
    if (t.size() > 1)
        throw UnsupportedError("inverse of a multi-term scalar: " + x.str());
    const Integer& d = t.begin()->first;
    Gaussian cd = t.begin()->second * Gaussian(Rational(d));
    return RadScalar::radical_term(d, cd.inv());
}

namespace {

struct ScalarParser {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_word(const char* w) {
        skip_ws();
        size_t n = std::strlen(w);
        if (s.compare(pos, n, w) == 0) {
            pos += n;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw InputError("scalar parse error at offset " + std::to_string(pos) +
                         ": " + why + " in \"" + s + "\"");
    }
    Integer integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Integer(s.substr(start, pos - start));
    }
    Rational rational() {
        Integer num = integer();
        if (eat('/')) {
            Integer den = integer();
            if (den == 0) fail("zero denominator");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }
    Integer radicand() {
        if (!eat('(')) fail("expected ( after sqrt");
        Integer d = integer();
        if (d <= 0) fail("sqrt radicand must be positive");
        if (!eat(')')) fail("expected )");
        return d;
    }
    RadScalar term() {
        skip_ws();
        if (eat('-')) return -term();
        if (eat_word("sqrt")) {
            RadScalar r = sqrt_nonneg_rational(Rational(radicand()));
            if (eat('*')) {
                if (!eat_word("i")) fail("expected i after *");
                return r * RadScalar::i();
            }
            return r;
        }
        if (eat_word("i")) return RadScalar::i();
        RadScalar r{rational()};
        while (eat('*')) {
            if (eat_word("sqrt"))
                r = r * sqrt_nonneg_rational(Rational(radicand()));
            else if (eat_word("i"))
                r = r * RadScalar::i();
            else
                fail("expected sqrt(...) or i after *");
        }
        return r;
    }
    RadScalar parse() {
        skip_ws();
        if (pos >= s.size()) fail("empty scalar");
        RadScalar acc = term();
        for (;;) {
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                fail("expected + or -");
        }
        return acc;
    }
};

}  // namespace

RadScalar parse_scalar(const std::string& text) {
    ScalarParser p{text};
    return p.parse();
}

}  // namespace sftcross
