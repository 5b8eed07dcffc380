#include "sftcross/sft.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sftcross {

TransitionMatrix::TransitionMatrix(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
    n_ = static_cast<int>(rows_.size());
    if (n_ == 0) throw InputError("transition matrix is empty");
    for (int b = 0; b < n_; ++b) {
        if (static_cast<int>(rows_[b].size()) != n_)
            throw InputError("transition matrix is not square: row " +
                             std::to_string(b) + " has " +
                             std::to_string(rows_[b].size()) + " entries, expected " +
                             std::to_string(n_));
        for (int c = 0; c < n_; ++c)
            if (rows_[b][c] != 0 && rows_[b][c] != 1)
                throw InputError("transition matrix entry (" + std::to_string(b) +
                                 "," + std::to_string(c) + ") is not 0 or 1");
    }
    row_sums_.assign(n_, 0);
    col_sums_.assign(n_, 0);
    for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
            if (rows_[b][c]) {
                ++row_sums_[b];
                ++col_sums_[c];
            }
    for (int b = 0; b < n_; ++b)
        if (row_sums_[b] == 0)
            throw InputError("transition matrix row " + std::to_string(b) +
                             " is zero: symbol has no successor");
    for (int c = 0; c < n_; ++c)
        if (col_sums_[c] == 0)
            throw InputError("transition matrix column " + std::to_string(c) +
                             " is zero: symbol has no predecessor");
}

bool is_admissible(const TransitionMatrix& A, const Word& w) {
    for (Symbol s : w)
        if (s < 0 || s >= A.symbol_count()) return false;
    for (size_t j = 0; j + 1 < w.size(); ++j)
        if (!A.edge(w[j], w[j + 1])) return false;
    return true;
}

std::vector<Word> admissible_words(const TransitionMatrix& A, int depth) {
    if (depth < 0) throw InputError("negative word depth");
    std::vector<Word> out;
    Word cur;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == depth) {
            out.push_back(cur);
            return;
        }
        for (Symbol c = 0; c < A.symbol_count(); ++c) {
            if (!cur.empty() && !A.edge(cur.back(), c)) continue;
            cur.push_back(c);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "()";
    bool wide = false;
    for (Symbol s : w)
        if (s > 9) wide = true;
    std::ostringstream out;
    for (size_t j = 0; j < w.size(); ++j) {
        if (wide && j) out << ',';
        out << w[j];
    }
    return out.str();
}

EvPerPoint::EvPerPoint(const TransitionMatrix& A, Word pre, Word cyc)
    : pre_(std::move(pre)), cyc_(std::move(cyc)) {
    if (cyc_.empty()) throw InputError("eventually periodic point needs a nonempty cycle");
    Word closure = pre_;
    closure.insert(closure.end(), cyc_.begin(), cyc_.end());
    closure.push_back(cyc_.front());  // checks the cycle wrap and the junction
    if (!is_admissible(A, closure))
        throw InputError("eventually periodic point " + word_str(pre_) + ":" +
                         word_str(cyc_) + " is not admissible");
    canonicalize();
}

void EvPerPoint::canonicalize() {
    size_t q = cyc_.size();
    for (size_t p = 1; p < q; ++p) {
        if (q % p) continue;
        bool periodic = true;
        for (size_t j = 0; j + p < q && periodic; ++j)
            if (cyc_[j] != cyc_[j + p]) periodic = false;
        if (periodic) {
            cyc_.resize(p);
            break;
        }
    }
    while (!pre_.empty() && pre_.back() == cyc_.back()) {
        pre_.pop_back();
        std::rotate(cyc_.begin(), cyc_.end() - 1, cyc_.end());
    }
}

Symbol EvPerPoint::at(size_t k) const {
    if (k < pre_.size()) return pre_[k];
    return cyc_[(k - pre_.size()) % cyc_.size()];
}

Word EvPerPoint::prefix(size_t k) const {
    Word w(k);
    for (size_t j = 0; j < k; ++j) w[j] = at(j);
    return w;
}

EvPerPoint EvPerPoint::shifted(size_t k) const {
    EvPerPoint out;
    out.cyc_ = cyc_;
    if (k <= pre_.size()) {
        out.pre_.assign(pre_.begin() + k, pre_.end());
    } else {
        size_t r = (k - pre_.size()) % cyc_.size();
        std::rotate(out.cyc_.begin(), out.cyc_.begin() + r, out.cyc_.end());
    }
    // dropping a prefix of a canonical form leaves it canonical
    return out;
}

std::string EvPerPoint::str() const {
    return (pre_.empty() ? std::string() : word_str(pre_)) + ":" + word_str(cyc_);
}

bool traj_equivalent(const EvPerPoint& x, const EvPerPoint& y) {
    const Word& a = x.cycle();
    const Word& b = y.cycle();
    if (a.size() != b.size()) return false;
    Word doubled = a;
    doubled.insert(doubled.end(), a.begin(), a.end());
    return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) !=
           doubled.end();
}

Analysis analyze(const TransitionMatrix& A) {
    const int n = A.symbol_count();
    Analysis out;
    out.column_sums.resize(n);
    for (int c = 0; c < n; ++c) out.column_sums[c] = A.column_sum(c);
    bool constant = true;
    for (int c = 1; c < n; ++c)
        if (out.column_sums[c] != out.column_sums[0]) constant = false;
    if (constant) out.constant_p = out.column_sums[0];

    auto reach = [&](bool forward) {
        std::vector<bool> seen(n, false);
        std::vector<int> stack = {0};
        seen[0] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                bool e = forward ? A.edge(v, u) : A.edge(u, v);
                if (e && !seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
        return seen;
    };
    auto fwd = reach(true), bwd = reach(false);
    out.strongly_connected = true;
    for (int v = 0; v < n; ++v)
        if (!fwd[v] || !bwd[v]) out.strongly_connected = false;

    if (n > 16)
        throw UnsupportedError("predecessor-closed enumeration limited to 16 symbols");
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        bool closed = true;
        for (int b = 0; b < n && closed; ++b) {
            if (mask & (1u << b)) continue;
            for (int v = 0; v < n && closed; ++v)
                if ((mask & (1u << v)) && A.edge(b, v)) closed = false;
        }
        if (!closed) continue;
        std::vector<Symbol> set;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) set.push_back(v);
        bool valid = true;
        for (Symbol b : set) {
            int rs = 0, cs = 0;
            for (Symbol c : set) {
                if (A.edge(b, c)) ++rs;
                if (A.edge(c, b)) ++cs;
            }
            if (rs == 0 || cs == 0) valid = false;
        }
        out.predecessor_closed.push_back(std::move(set));
        out.predecessor_closed_valid.push_back(valid);
    }

    // a cycle without exit lies in the out-degree-1 subgraph, where the walk
    // is a partial function; follow it from every start
    out.every_cycle_has_exit = true;
    std::vector<int> next(n, -1);
    for (int v = 0; v < n; ++v)
        if (A.row_sum(v) == 1)
            for (int u = 0; u < n; ++u)
                if (A.edge(v, u)) next[v] = u;
    for (int start = 0; start < n && out.every_cycle_has_exit; ++start) {
        std::vector<int> stamp(n, -1);
        int v = start, step = 0;
        while (v != -1 && next[v] != -1 && stamp[v] == -1) {
            stamp[v] = step++;
            v = next[v];
        }
        if (v != -1 && next[v] != -1 && stamp[v] != -1) {
            out.every_cycle_has_exit = false;
            Word cyc;
            int u = v;
            do {
                cyc.push_back(u);
                u = next[u];
            } while (u != v);
            auto least = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), least, cyc.end());
            out.no_exit_cycle = std::move(cyc);
        }
    }
    return out;
}

bool cylinder_forces_coincidence(const TransitionMatrix& A, const Word& w, int n,
                                 int m) {
    if (n == m) throw InputError("coincidence check needs n != m");
    if (n < 0 || m < 0) throw InputError("negative shift exponents");
    if (n < m) std::swap(n, m);
    if (!is_admissible(A, w) || w.empty()) return false;
    const int q = n - m;
    const int len = std::max<int>(static_cast<int>(w.size()), n);

    std::function<bool(Word&)> all_completions = [&](Word& ext) -> bool {
        if (static_cast<int>(ext.size()) == len) {
            for (int j = 0; m + j < len && n + j < len; ++j)
                if (ext[m + j] != ext[n + j]) return false;
            // from here every position is forced q-periodic; all admissible
            // continuations comply iff the walk has out-degree 1 throughout
            Word forced = ext;
            for (int t = len; t <= len + q; ++t) {
                Symbol f = forced[t - q];
                Symbol v = forced[t - 1];
                if (A.row_sum(v) != 1 || !A.edge(v, f)) return false;
                forced.push_back(f);
            }
            return true;
        }
        for (Symbol c = 0; c < A.symbol_count(); ++c) {
            if (!A.edge(ext.back(), c)) continue;
            ext.push_back(c);
            bool ok = all_completions(ext);
            ext.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    Word ext = w;
    return all_completions(ext);
}

std::optional<Word> topfree_bruteforce(const TransitionMatrix& A, int n, int m,
                                       int max_depth) {
    if (n == m) throw InputError("topological freeness check needs n != m");
    for (int depth = 1; depth <= max_depth; ++depth)
        for (const Word& w : admissible_words(A, depth))
            if (cylinder_forces_coincidence(A, w, n, m)) return w;
    return std::nullopt;
}

namespace {

// Is there an admissible word of length max(|base|, offset+|other|) matching
// base at position 0 and other at position offset?
bool compatible_extension_exists(const TransitionMatrix& A, const Word& base,
                                 const Word& other, int offset) {
    const int len = std::max<int>(static_cast<int>(base.size()),
                                  offset + static_cast<int>(other.size()));
    std::function<bool(Word&)> rec = [&](Word& cur) -> bool {
        int t = static_cast<int>(cur.size());
        if (t == len) return true;
        for (Symbol c = 0; c < A.symbol_count(); ++c) {
            if (t < static_cast<int>(base.size()) && base[t] != c) continue;
            if (t >= offset && t - offset < static_cast<int>(other.size()) &&
                other[t - offset] != c)
                continue;
            if (t > 0 && !A.edge(cur.back(), c)) continue;
            cur.push_back(c);
            if (rec(cur)) return true;
            cur.pop_back();
        }
        return false;
    };
    Word cur;
    return rec(cur);
}

}  // namespace

bool shift_overlap_nonempty(const TransitionMatrix& A, const Word& w, int n, int m) {
    if (w.empty()) return true;
    if (!is_admissible(A, w))
        throw InputError("inadmissible word " + word_str(w));
    if (m < static_cast<int>(w.size())) {
        Word suffix(w.begin() + m, w.end());
        return compatible_extension_exists(A, w, suffix, n);
    }
    // sigma^m[w] is the union of [b] over symbols b reachable from the last
    // letter of w in exactly m - |w| + 1 steps
    std::vector<bool> reach(A.symbol_count(), false);
    reach[w.back()] = true;
    for (int step = 0; step < m - static_cast<int>(w.size()) + 1; ++step) {
        std::vector<bool> nxt(A.symbol_count(), false);
        for (Symbol b = 0; b < A.symbol_count(); ++b)
            if (reach[b])
                for (Symbol c = 0; c < A.symbol_count(); ++c)
                    if (A.edge(b, c)) nxt[c] = true;
        reach = nxt;
    }
    for (Symbol b = 0; b < A.symbol_count(); ++b)
        if (reach[b] && compatible_extension_exists(A, w, {b}, n)) return true;
    return false;
}

}  // namespace sftcross
