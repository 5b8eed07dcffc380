#pragma once

#include <map>
#include <utility>

#include "sftcross/crossed.hpp"
#include "sftcross/report.hpp"

namespace sftcross {

// Span of the functions coeff * chi_{Z(mu,nu)} on the shift groupoid, where
// Z(mu,nu) = {(x, |nu|-|mu|, y) : x in [mu], y in [nu], common tail}. Only
// matrices with constant column sum p are supported: the isometry carried
// over from the product picture weights every preimage by 1/sqrt(p).
//
// Terms are keyed by (mu, nu); a pair whose bisection is empty (no symbol
// may follow both last letters) is dropped on insertion, as is a zero
// coefficient.
class GroupoidElement {
  public:
    explicit GroupoidElement(TransitionMatrix A);

    const TransitionMatrix& matrix() const { return A_; }
    int p() const { return p_; }
    const std::map<std::pair<Word, Word>, RadScalar>& terms() const { return terms_; }
    bool raw_empty() const { return terms_.empty(); }

    void append(const Word& mu, const Word& nu, const RadScalar& coeff);

    GroupoidElement adjoint() const;
    GroupoidElement operator-() const;
    GroupoidElement& operator+=(const GroupoidElement& o);
    GroupoidElement& operator-=(const GroupoidElement& o);
    friend GroupoidElement operator+(GroupoidElement a, const GroupoidElement& b) {
        a += b;
        return a;
    }
    friend GroupoidElement operator-(GroupoidElement a, const GroupoidElement& b) {
        a -= b;
        return a;
    }
    friend GroupoidElement operator*(const RadScalar& c, const GroupoidElement& x);

    static GroupoidElement unit(const TransitionMatrix& A);
    // p^{-1/2} sum_c (c, eps): the image of the isometry
    static GroupoidElement isometry(const TransitionMatrix& A);

  private:
    TransitionMatrix A_;
    int p_ = 0;
    std::map<std::pair<Word, Word>, RadScalar> terms_;
};

GroupoidElement convolve(const GroupoidElement& x, const GroupoidElement& y);
inline GroupoidElement operator*(const GroupoidElement& x, const GroupoidElement& y) {
    return convolve(x, y);
}

// Raises every term, per degree |nu|-|mu|, to a common |mu| by the exact
// refinement Z(mu,nu) = disjoint union over b of Z(mu b, nu b), then compares
// coefficient maps. Complete: fixed-length pairs with nonempty bisections
// have pairwise disjoint supports.
bool normalize_equals(const GroupoidElement& x, const GroupoidElement& y);
bool normalize_is_zero(const GroupoidElement& x);

GroupoidElement phi_fun(const CylFun& f);
GroupoidElement phi_iso(const CrossedElement& x);

Report verify_groupoid_relations(const TransitionMatrix& A);

}  // namespace sftcross
