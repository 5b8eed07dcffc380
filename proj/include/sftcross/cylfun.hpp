#pragma once

#include <map>
#include <vector>

#include "sftcross/scalar.hpp"
#include "sftcross/sft.hpp"

namespace sftcross {

// Function on the shift space depending on the first `depth` coordinates,
// held as one value per admissible word of that depth (zeros included).
// Operations on two functions require the same matrix and refine to the
// larger depth first.
class CylFun {
  public:
    CylFun(TransitionMatrix A, int depth, const std::map<Word, RadScalar>& values);
    static CylFun constant(const TransitionMatrix& A, const RadScalar& value);
    static CylFun indicator(const TransitionMatrix& A, const Word& w);

    const TransitionMatrix& matrix() const { return A_; }
    int depth() const { return depth_; }
    const std::map<Word, RadScalar>& values() const { return vals_; }
    // Value on the cylinder of w; w may be deeper than the function.
    const RadScalar& value(const Word& w) const;

    CylFun refined(int depth) const;
    bool is_zero() const;

    CylFun conj() const;
    CylFun operator-() const;
    friend CylFun operator+(const CylFun& f, const CylFun& g);
    friend CylFun operator-(const CylFun& f, const CylFun& g);
    friend CylFun operator*(const CylFun& f, const CylFun& g);
    friend CylFun operator*(const RadScalar& c, const CylFun& f);
    friend bool operator==(const CylFun& f, const CylFun& g);
    friend bool operator!=(const CylFun& f, const CylFun& g) { return !(f == g); }

    CylFun pointwise_inverse() const;  // values must be nonzero single-term
    CylFun pointwise_sqrt() const;     // values must be nonnegative rationals

    std::string str() const;

  private:
    TransitionMatrix A_;
    int depth_;
    std::map<Word, RadScalar> vals_;
};

// Composition with the shift: alpha(f)(x) = f(sigma x), depth k -> k+1.
CylFun alpha(const CylFun& f);
CylFun alpha_pow(const CylFun& f, int n);

// Counting transfer (sum of f over preimages) and its unit-preserving
// normalization; output depth max(1, k-1).
CylFun transfer_raw(const CylFun& f);
CylFun transfer(const CylFun& f);
CylFun transfer_pow(const CylFun& f, int n);

// E_n = alpha^n . L^n, the expectation onto functions factoring through sigma^n.
CylFun expectation_En(const CylFun& f, int n);

// u_c = sqrt(Lambda * 1_[c]) with Lambda = alpha(transfer_raw(1)); these
// satisfy  f = sum_c u_c E_1(u_c^* f)  exactly on cylinder functions.
struct QuasiBasis {
    TransitionMatrix A;
    std::vector<CylFun> u;  // indexed by symbol
    CylFun lambda;          // depth 2, value colsum(w1) at w0 w1
    CylFun indE;            // index of E_1, equals lambda

    CylFun I(int n) const;                 // lambda alpha(lambda) ... , I(0) = 1
    std::vector<CylFun> multi(int n) const;  // u_i0 alpha(u_i1) ... over all multi-indices
};

QuasiBasis quasi_basis(const TransitionMatrix& A);

bool quasi_basis_check(const CylFun& f);

std::vector<Word> support(const CylFun& f);

}  // namespace sftcross
