#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sftcross/errors.hpp"

namespace sftcross {

using Symbol = int;
using Word = std::vector<Symbol>;

// 0/1 transition matrix A; symbol b may be followed by c iff A(b,c) = 1.
// No zero rows (every symbol has a successor) and no zero columns (every
// symbol has a predecessor), so the shift is surjective with finite fibers.
class TransitionMatrix {
  public:
    explicit TransitionMatrix(std::vector<std::vector<int>> rows);

    int symbol_count() const { return n_; }
    bool edge(Symbol b, Symbol c) const { return rows_[b][c] != 0; }
    int column_sum(Symbol c) const { return col_sums_[c]; }
    int row_sum(Symbol b) const { return row_sums_[b]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    friend bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
        return a.rows_ == b.rows_;
    }
    friend bool operator!=(const TransitionMatrix& a, const TransitionMatrix& b) {
        return !(a == b);
    }

  private:
    int n_ = 0;
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_sums_, col_sums_;
};

bool is_admissible(const TransitionMatrix& A, const Word& w);

// All admissible words of the given depth in lexicographic order; depth 0
// yields the single empty word.
std::vector<Word> admissible_words(const TransitionMatrix& A, int depth);

std::string word_str(const Word& w);

// Eventually periodic point  pre . cyc cyc cyc ...  held in canonical form:
// primitive cycle and shortest preperiod (in particular the preperiod never
// ends with the cycle's last symbol).  The canonical form is unique, so
// equality is a syntactic check.
class EvPerPoint {
  public:
    EvPerPoint(const TransitionMatrix& A, Word pre, Word cyc);

    const Word& preperiod() const { return pre_; }
    const Word& cycle() const { return cyc_; }

    Symbol at(size_t k) const;
    Word prefix(size_t k) const;
    EvPerPoint shifted(size_t k) const;

    friend bool operator==(const EvPerPoint& a, const EvPerPoint& b) {
        return a.pre_ == b.pre_ && a.cyc_ == b.cyc_;
    }
    friend bool operator!=(const EvPerPoint& a, const EvPerPoint& b) {
        return !(a == b);
    }

    std::string str() const;

  private:
    EvPerPoint() = default;
    void canonicalize();
    Word pre_, cyc_;
};

// Some shifts of x and y agree, which for eventually periodic points means
// the tail cycles are rotations of each other.
bool traj_equivalent(const EvPerPoint& x, const EvPerPoint& y);

struct Analysis {
    std::vector<int> column_sums;
    std::optional<int> constant_p;       // set when all column sums agree
    bool strongly_connected = false;
    // Nontrivial symbol sets closed under taking predecessors, each sorted,
    // listed by ascending bitmask; valid[i] records whether the restricted
    // matrix is again a transition matrix (no zero rows or columns).
    std::vector<std::vector<Symbol>> predecessor_closed;
    std::vector<bool> predecessor_closed_valid;
    bool every_cycle_has_exit = false;
    Word no_exit_cycle;                  // witness when a cycle has no exit
};

Analysis analyze(const TransitionMatrix& A);

// Whether [w] is contained in { x : sigma^n x = sigma^m x }.  Exact: checks
// the equalities pinned inside w on every admissible completion, then that
// the forced (n-m)-periodic continuation is the unique admissible one.
bool cylinder_forces_coincidence(const TransitionMatrix& A, const Word& w, int n, int m);

// Smallest-depth, lexicographically first witness word w with [w] contained
// in the coincidence set, searched at depths 1..max_depth.
std::optional<Word> topfree_bruteforce(const TransitionMatrix& A, int n, int m,
                                       int max_depth);

// Whether [w] meets  sigma^{-n}( sigma^m [w] ).
bool shift_overlap_nonempty(const TransitionMatrix& A, const Word& w, int n, int m);

}  // namespace sftcross
