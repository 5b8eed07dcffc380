#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sftcross/cylfun.hpp"
#include "sftcross/report.hpp"

namespace sftcross {

// Positive rational weight per edge with unit column sums: for every symbol
// c the weights w(b,c) over predecessors b sum to 1, so each point x gets a
// probability vector on its preimages b.x.
class TransferWeights {
  public:
    TransferWeights(TransitionMatrix A, std::map<std::pair<Symbol, Symbol>, Rational> w);
    const TransitionMatrix& matrix() const { return A_; }
    const Rational& at(Symbol b, Symbol c) const;
    bool is_uniform() const;

    friend bool operator==(const TransferWeights& a, const TransferWeights& b) {
        return a.A_ == b.A_ && a.w_ == b.w_;
    }

  private:
    TransitionMatrix A_;
    std::map<std::pair<Symbol, Symbol>, Rational> w_;
};

// w(b,c) = 1 / column_sum(c): equal mass on every preimage.
TransferWeights uniform_weights(const TransitionMatrix& A);

CylFun transfer(const CylFun& f, const TransferWeights& w);
CylFun transfer_pow(const CylFun& f, int n, const TransferWeights& w);
CylFun expectation_En(const CylFun& f, int n, const TransferWeights& w);

// Shift-invariant probability measure determined by weights plus a stationary
// symbol vector:  m_c = sum_{b : A(c,b)=1} w(c,b) m_b,  sum m = 1,  m >= 0.
// Cylinder masses are the weight products  mu[w0..wk] = w(w0,w1)...w(wk-1,wk) m_wk.
class InvariantMeasure {
  public:
    InvariantMeasure(TransferWeights w, std::vector<Rational> m);

    const TransferWeights& weights() const { return w_; }
    const TransitionMatrix& matrix() const { return w_.matrix(); }
    const std::vector<Rational>& symbol_masses() const { return m_; }
    bool fully_supported() const;
    Rational cylinder_mass(const Word& w) const;

  private:
    TransferWeights w_;
    std::vector<Rational> m_;
};

// Stationary vector for the weights, solved exactly.  For reducible matrices
// the mass goes to the terminal class of the reversed edge graph containing
// the smallest symbol (deterministic, solution may not be fully supported).
InvariantMeasure solve_invariant(const TransferWeights& w);

RadScalar state_phi(const InvariantMeasure& mu, const CylFun& f);
// phi(g^* f): linear in f, conjugate-linear in g.
RadScalar inner(const InvariantMeasure& mu, const CylFun& f, const CylFun& g);

// phi.alpha = phi, phi.L_w = phi, and the fiber-sum disintegration of phi,
// each on seeded random functions.  Takes the symbol vector raw so callers
// can probe broken (non-stationary) inputs.
Report invariance_checks(const TransferWeights& w, const std::vector<Rational>& m,
                         uint64_t seed, int depth);

}  // namespace sftcross
