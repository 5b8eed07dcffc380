#pragma once

#include <cstdint>
#include <map>

#include "sftcross/crossed.hpp"
#include "sftcross/measure.hpp"
#include "sftcross/report.hpp"

namespace sftcross {

// Finite sum of simple tensors f (x) delta_k in H (x) l^2(Z), H the dense
// cylinder-function subspace of L^2(mu). Stored slotwise on k; zero slots
// are dropped, so is_zero() means the empty sum.
class GnsVector {
  public:
    explicit GnsVector(TransitionMatrix A) : A_(std::move(A)) {}
    GnsVector(const CylFun& f, int k) : A_(f.matrix()) { add(f, k); }

    const TransitionMatrix& matrix() const { return A_; }
    const std::map<int, CylFun>& slots() const { return slots_; }
    bool is_zero() const { return slots_.empty(); }

    void add(const CylFun& f, int k);
    GnsVector operator-() const;
    friend GnsVector operator+(const GnsVector& a, const GnsVector& b);
    friend GnsVector operator-(const GnsVector& a, const GnsVector& b);

  private:
    TransitionMatrix A_;
    std::map<int, CylFun> slots_;
};

// Elementary operators on vectors. The isometry part is weight-independent;
// its adjoint with respect to the mu inner product is the weighted transfer,
// which is what shift_down applies.
GnsVector shift_up(const GnsVector& v);
GnsVector shift_down(const GnsVector& v, const TransferWeights& w);
GnsVector mult(const CylFun& f, const GnsVector& v);

// Termwise action: (a, n, m, b) sends f (x) delta_k to
// a . alpha^n(L_w^m(b f)) (x) delta_{k+n-m}. Requires a faithful state
// (fully supported measure); acts on the given presentation of x.
GnsVector act(const CrossedElement& x, const GnsVector& v, const InvariantMeasure& mu);

// The same action with the l^2(Z) index forgotten: the representation on H
// alone, whose cyclic vector 1 is fixed by the isometry part.
CylFun act_plain(const CrossedElement& x, const CylFun& f, const InvariantMeasure& mu);

// <u, v> = sum_k phi(u_k^* v_k): conjugate-linear in u, linear in v.
RadScalar inner(const InvariantMeasure& mu, const GnsVector& u, const GnsVector& v);

RadScalar matrix_element(const CrossedElement& x, const GnsVector& u,
                         const GnsVector& v, const InvariantMeasure& mu);

// True iff every matrix element of x - y against the probe family
// e_w (x) delta_{n-m}, e_w' (x) delta_0 vanishes, probing per degree at the
// normal-form levels (N, M, r) of the raw terms. Complete because distinct
// tail-compatible word pairs land in distinct slots with strictly positive
// cylinder masses. Needs a fully supported measure with uniform weights:
// only then does the action factor through the product's defining
// identities, so the verdict is a statement about the elements and not the
// presentations.
bool equality_oracle(const CrossedElement& x, const CrossedElement& y,
                     const InvariantMeasure& mu);

// Seeded identity suite on cylinder vectors: S* M_f S = M_{L_w(f)}, isometry
// of the shift part for the state, <S*u, v> = <u, Sv>, and the covariance
// S M_f = M_{alpha(f)} S.
Report av_relation_checks(const InvariantMeasure& mu, std::uint64_t seed, int depth);

}  // namespace sftcross
