#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "sftcross/errors.hpp"

namespace sftcross {

using Integer = mpz_class;
using Rational = mpq_class;

// a + b*i with exact rational a, b.
struct Gaussian {
    Rational re, im;

    Gaussian() : re(0), im(0) {}
    Gaussian(Rational r) : re(std::move(r)), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    Gaussian conj() const { return {re, -im}; }

    Gaussian operator-() const { return {-re, -im}; }
    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }

    Gaussian inv() const;  // DomainError on zero
};

// n >= 0 decomposed as s*s*d with d square-free; UnsupportedError when the
// unfactored cofactor is too large to classify exactly.
std::pair<Integer, Integer> squarefree_decompose(Integer n);

// Finite sum  sum_d c_d * sqrt(d)  over square-free d >= 1 with Gaussian
// rational c_d.  Normalized: no zero coefficients stored, d = 1 carries the
// rational part.  Distinct square-free radicals are linearly independent over
// the rationals, so equality of the term maps decides equality of values.
class RadScalar {
  public:
    RadScalar() = default;
    RadScalar(long n) : RadScalar(Rational(n)) {}
    RadScalar(const Rational& r) {
        if (r != 0) terms_[1] = Gaussian(r);
    }
    RadScalar(const Gaussian& g) {
        if (!g.is_zero()) terms_[1] = g;
    }
    // c * sqrt(d); d must already be square-free and positive.
    static RadScalar radical_term(const Integer& d, const Gaussian& c);
    static RadScalar i() { return RadScalar(Gaussian(Rational(0), Rational(1))); }

    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;
    // The value as a Rational if the scalar is rational, else nullopt-style
    // via a flag; kept as a throwing accessor plus a predicate for brevity.
    bool is_rational() const;
    Rational rational_value() const;  // DomainError unless is_rational()

    RadScalar conj() const;
    RadScalar operator-() const;
    RadScalar& operator+=(const RadScalar& o);
    RadScalar& operator-=(const RadScalar& o);
    friend RadScalar operator+(RadScalar a, const RadScalar& b) { return a += b; }
    friend RadScalar operator-(RadScalar a, const RadScalar& b) { return a -= b; }
    friend RadScalar operator*(const RadScalar& a, const RadScalar& b);
    friend bool operator==(const RadScalar& a, const RadScalar& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const RadScalar& a, const RadScalar& b) {
        return !(a == b);
    }

    // Exact sign of a real scalar: -1, 0, +1.  DomainError on non-real input.
    int sign_real() const;

    const std::map<Integer, Gaussian>& terms() const { return terms_; }

    std::string str() const;

  private:
    std::map<Integer, Gaussian> terms_;
};

// sqrt of a nonnegative rational, radicand reduced to square-free form.
// DomainError on negative input.
RadScalar sqrt_nonneg_rational(const Rational& r);

// Inverse of a single-term scalar c*sqrt(d).  UnsupportedError on multi-term
// input, DomainError on zero.
RadScalar invert_monoradical(const RadScalar& x);

// Literal syntax: signed terms joined by '+'/'-', each term one of
//   rational | rational*sqrt(p) | sqrt(p) | i | rational*i |
//   rational*sqrt(p)*i | sqrt(p)*i
// with rational ::= int ('/' posint)?.  Radicands are square-free reduced.
RadScalar parse_scalar(const std::string& text);

}  // namespace sftcross
