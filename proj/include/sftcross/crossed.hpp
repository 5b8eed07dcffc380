#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sftcross/cylfun.hpp"
#include "sftcross/report.hpp"

namespace sftcross {

// a S^n S*^m b with cylinder-function coefficients.  S is the isometry
// implementing the shift: S f = alpha(f) S and S^* f S = L(f) with L the
// unit-preserving counting transfer, so products of monomials are monomials.
struct Monomial {
    CylFun a;
    int n, m;
    CylFun b;

    Monomial(CylFun a_, int n_, int m_, CylFun b_);
    int degree() const { return n - m; }
    const TransitionMatrix& matrix() const { return a.matrix(); }
};

Monomial multiply(const Monomial& x, const Monomial& y);
Monomial adjoint(const Monomial& x);

// Finite sum of monomials over one matrix; zero is the empty sum.
class CrossedElement {
  public:
    explicit CrossedElement(TransitionMatrix A) : A_(std::move(A)) {}
    CrossedElement(const Monomial& mono);

    static CrossedElement from_function(const CylFun& f);
    static CrossedElement from_scalar(const TransitionMatrix& A, const RadScalar& c);
    static CrossedElement unit(const TransitionMatrix& A);
    static CrossedElement isometry(const TransitionMatrix& A);  // S

    const TransitionMatrix& matrix() const { return A_; }
    const std::vector<Monomial>& terms() const { return terms_; }

    void append(const Monomial& mono);  // drops terms with a zero coefficient

    CrossedElement adjoint() const;
    CrossedElement operator-() const;
    CrossedElement& operator+=(const CrossedElement& o);
    CrossedElement& operator-=(const CrossedElement& o);
    friend CrossedElement operator+(CrossedElement a, const CrossedElement& b) {
        return a += b;
    }
    friend CrossedElement operator-(CrossedElement a, const CrossedElement& b) {
        return a -= b;
    }
    friend CrossedElement operator*(const CrossedElement& a, const CrossedElement& b);
    friend CrossedElement operator*(const RadScalar& c, const CrossedElement& x);

  private:
    TransitionMatrix A_;
    std::vector<Monomial> terms_;
};

// a S^n S*^m b  =  sum_c (a alpha^n(u_c)) S^{n+1} S*^{m+1} (alpha^m(u_c) b),
// the unit redundancy pushed one level up.
CrossedElement raise_level(const Monomial& x);

// Per gauge degree n-m: all terms raised to a common level (N, M), refined to
// a shared tail depth r >= 1 and expanded over elementary word pairs with
// matching r-tails.  Those elementary monomials are linearly independent
// (each hits its own matrix slot in the shift representation), so an element
// is zero exactly when every block is empty.
struct DegreeBlock {
    int n = 0, m = 0;
    int tail = 1;
    std::map<std::pair<Word, Word>, RadScalar> coeffs;
};

class NormalForm {
  public:
    explicit NormalForm(std::map<int, DegreeBlock> blocks) : blocks_(std::move(blocks)) {}
    const std::map<int, DegreeBlock>& blocks() const { return blocks_; }
    bool is_zero() const { return blocks_.empty(); }
    std::string str() const;

  private:
    std::map<int, DegreeBlock> blocks_;
};

// levels maps gauge degree -> requested level N (>= the maximal n present).
NormalForm normal_form(const CrossedElement& x, const std::map<int, int>& levels = {});

bool is_zero(const CrossedElement& x);
bool equals(const CrossedElement& x, const CrossedElement& y);

// Keeps the gauge-degree-zero terms.
CrossedElement expectation_F(const CrossedElement& x);

// G(a S^n S*^m b) = [n = m] a I(n)^{-1} b, the faithful expectation onto the
// function algebra; also recomputed as sum_i v_i x v_i^* with v_i the
// normalized multi-index quasi-basis and the two results compared.
CylFun expectation_G(const CrossedElement& x);

// (a) unit redundancy, (b) multi-index absorption and index identities for
// n <= n_max, (c) Cuntz-Krieger relations for s_c = u_c S.
Report verify_finite_index_identities(const TransitionMatrix& A, int n_max);

// Indicator h of a cylinder around x0 with  h S^n S*^m h = 0, found by
// deepening the cylinder until [w] misses sigma^{-n}(sigma^m[w]).
CylFun grande_h(const TransitionMatrix& A, const EvPerPoint& x0, int n, int m,
                int max_depth);

// Componentwise restriction onto the sub-shift over a predecessor-closed
// symbol set; predecessor closure keeps preimage counts intact, so the map
// intertwines alpha and L and is multiplicative on crossed elements.
struct Restriction {
    TransitionMatrix full;
    TransitionMatrix sub;
    std::vector<Symbol> keep;  // ascending original symbols

    CylFun map(const CylFun& f) const;
    CrossedElement map(const CrossedElement& x) const;
};

Restriction restriction_hom(const TransitionMatrix& A, const std::vector<Symbol>& keep);

std::string to_expression_string(const CrossedElement& x);

}  // namespace sftcross
