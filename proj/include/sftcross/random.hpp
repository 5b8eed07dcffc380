#pragma once

#include <cstdint>
#include <random>

#include "sftcross/crossed.hpp"

namespace sftcross {

// Seeded generator for randomized checks. Draws raw mt19937_64 words and
// reduces them by modulo so a fixed seed yields the same stream on every
// platform; the standard distribution templates are implementation-defined
// and never used.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t below(std::uint64_t n);

    // numerator in [lo, hi], denominator in [1, 4]
    Rational rational(long lo = -4, long hi = 4);

    // mostly rational; sometimes a radical term, a Gaussian pair, or a pure
    // imaginary, so downstream checks exercise the full scalar tower
    RadScalar scalar();

    Word word(const TransitionMatrix& A, int len);
    CylFun cylfun(const TransitionMatrix& A, int depth);
    Monomial monomial(const TransitionMatrix& A, int max_pow, int max_depth);
    CrossedElement element(const TransitionMatrix& A, int max_terms, int max_pow,
                           int max_depth);

  private:
    std::mt19937_64 gen_;
};

}  // namespace sftcross
