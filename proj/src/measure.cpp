#include "sftcross/measure.hpp"

#include <algorithm>
#include <sstream>

#include "sftcross/random.hpp"

namespace sftcross {

TransferWeights::TransferWeights(TransitionMatrix A,
                                 std::map<std::pair<Symbol, Symbol>, Rational> w)
    : A_(std::move(A)), w_(std::move(w)) {
    const int n = A_.symbol_count();
    for (const auto& [edge, value] : w_) {
        auto [b, c] = edge;
        if (b < 0 || b >= n || c < 0 || c >= n || !A_.edge(b, c))
            throw InputError("weight on non-edge (" + std::to_string(b) + "," +
                             std::to_string(c) + ")");
        if (value <= 0)
            throw InputError("weight on edge (" + std::to_string(b) + "," +
                             std::to_string(c) + ") is not positive");
    }
    for (Symbol c = 0; c < n; ++c) {
        Rational col(0);
        for (Symbol b = 0; b < n; ++b) {
            if (!A_.edge(b, c)) continue;
            auto it = w_.find({b, c});
            if (it == w_.end())
                throw InputError("missing weight on edge (" + std::to_string(b) +
                                 "," + std::to_string(c) + ")");
            col += it->second;
        }
        if (col != 1)
            throw InputError("weights into symbol " + std::to_string(c) +
                             " sum to " + col.get_str() + ", expected 1");
    }
}

const Rational& TransferWeights::at(Symbol b, Symbol c) const {
    auto it = w_.find({b, c});
    if (it == w_.end())
        throw InputError("no weight on edge (" + std::to_string(b) + "," +
                         std::to_string(c) + ")");
    return it->second;
}

bool TransferWeights::is_uniform() const {
    return *this == uniform_weights(A_);
}

TransferWeights uniform_weights(const TransitionMatrix& A) {
    std::map<std::pair<Symbol, Symbol>, Rational> w;
    for (Symbol b = 0; b < A.symbol_count(); ++b)
        for (Symbol c = 0; c < A.symbol_count(); ++c)
            if (A.edge(b, c)) {
                Rational q(1, A.column_sum(c));
                q.canonicalize();
                w[{b, c}] = q;
            }
    return TransferWeights(A, std::move(w));
}

CylFun transfer(const CylFun& f, const TransferWeights& w) {
    const TransitionMatrix& A = f.matrix();
    if (A != w.matrix())
        throw InputError("weights and function over different transition matrices");
    int dout = std::max(1, f.depth() - 1);
    std::map<Word, RadScalar> vals;
    for (const Word& y : admissible_words(A, dout)) {
        RadScalar sum;
        for (Symbol b = 0; b < A.symbol_count(); ++b) {
            if (!A.edge(b, y.front())) continue;
            Word by;
            by.reserve(y.size() + 1);
            by.push_back(b);
            by.insert(by.end(), y.begin(), y.end());
            sum += RadScalar(w.at(b, y.front())) * f.value(by);
        }
        vals[y] = sum;
    }
    return CylFun(A, dout, vals);
}

CylFun transfer_pow(const CylFun& f, int n, const TransferWeights& w) {
    if (n < 0) throw InputError("negative power of the transfer operator");
    CylFun out = f;
    for (int j = 0; j < n; ++j) out = transfer(out, w);
    return out;
}

CylFun expectation_En(const CylFun& f, int n, const TransferWeights& w) {
    return alpha_pow(transfer_pow(f, n, w), n);
}

InvariantMeasure::InvariantMeasure(TransferWeights w, std::vector<Rational> m)
    : w_(std::move(w)), m_(std::move(m)) {
    const TransitionMatrix& A = w_.matrix();
    const int n = A.symbol_count();
    if (static_cast<int>(m_.size()) != n)
        throw InputError("symbol mass vector has wrong length");
    Rational total(0);
    for (Symbol c = 0; c < n; ++c) {
        if (m_[c] < 0)
            throw InputError("negative mass on symbol " + std::to_string(c));
        total += m_[c];
    }
    if (total != 1) throw InputError("symbol masses sum to " + total.get_str());
    for (Symbol c = 0; c < n; ++c) {
        Rational rhs(0);
        for (Symbol b = 0; b < n; ++b)
            if (A.edge(c, b)) rhs += w_.at(c, b) * m_[b];
        if (rhs != m_[c])
            throw InputError("mass vector not stationary at symbol " +
                             std::to_string(c) + ": " + m_[c].get_str() + " vs " +
                             rhs.get_str());
    }
}

bool InvariantMeasure::fully_supported() const {
    for (const Rational& q : m_)
        if (q == 0) return false;
    return true;
}

Rational InvariantMeasure::cylinder_mass(const Word& w) const {
    if (w.empty()) return Rational(1);
    if (!is_admissible(matrix(), w)) return Rational(0);
    Rational mass = m_[w.back()];
    for (size_t j = 0; j + 1 < w.size(); ++j) mass *= w_.at(w[j], w[j + 1]);
    return mass;
}

namespace {

// Exact solve of a square rational system by Gaussian elimination, first
// usable pivot in column order.
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> M,
                                   std::vector<Rational> rhs) {
    const size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) throw Error("singular system in stationary solve");
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            Rational factor = M[r][col] / M[col][col];
            for (size_t k = col; k < n; ++k) M[r][k] -= factor * M[col][k];
            rhs[r] -= factor * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (size_t r = 0; r < n; ++r) x[r] = rhs[r] / M[r][r];
    return x;
}

}  // namespace

InvariantMeasure solve_invariant(const TransferWeights& w) {
    const TransitionMatrix& A = w.matrix();
    const int n = A.symbol_count();

    // mass flows backwards along edges: b feeds c whenever A(c,b) = 1
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int b = 0; b < n; ++b) {
        reach[b][b] = true;
        for (int c = 0; c < n; ++c)
            if (A.edge(c, b)) reach[b][c] = true;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;

    std::vector<Symbol> cls;  // terminal class with the smallest member
    for (int v = 0; v < n && cls.empty(); ++v) {
        std::vector<Symbol> candidate;
        for (int u = 0; u < n; ++u)
            if (reach[v][u] && reach[u][v]) candidate.push_back(u);
        bool terminal = true;
        for (Symbol u : candidate)
            for (int t = 0; t < n; ++t)
                if (reach[u][t] && !(reach[v][t] && reach[t][v])) terminal = false;
        if (terminal) cls = std::move(candidate);
    }
    if (cls.empty()) throw Error("no terminal class found");  // unreachable

    const size_t k = cls.size();
    std::vector<int> pos(n, -1);
    for (size_t j = 0; j < k; ++j) pos[cls[j]] = static_cast<int>(j);

    // stationarity rows (one is redundant and dropped) plus normalization
    std::vector<std::vector<Rational>> M(k, std::vector<Rational>(k, Rational(0)));
    std::vector<Rational> rhs(k, Rational(0));
    for (size_t r = 0; r + 1 < k; ++r) {
        Symbol c = cls[r];
        M[r][r] = 1;
        for (Symbol b : cls)
            if (A.edge(c, b)) M[r][pos[b]] -= w.at(c, b);
    }
    for (size_t j = 0; j < k; ++j) M[k - 1][j] = 1;
    rhs[k - 1] = 1;

    std::vector<Rational> sol = solve_square(std::move(M), std::move(rhs));
    std::vector<Rational> m(n, Rational(0));
    for (size_t j = 0; j < k; ++j) m[cls[j]] = sol[j];
    return InvariantMeasure(w, std::move(m));
}

RadScalar state_phi(const InvariantMeasure& mu, const CylFun& f) {
    if (mu.matrix() != f.matrix())
        throw InputError("measure and function over different transition matrices");
    RadScalar sum;
    for (const auto& [w, v] : f.values())
        sum += RadScalar(mu.cylinder_mass(w)) * v;
    return sum;
}

RadScalar inner(const InvariantMeasure& mu, const CylFun& f, const CylFun& g) {
    return state_phi(mu, g.conj() * f);
}

Report invariance_checks(const TransferWeights& w, const std::vector<Rational>& m,
                         uint64_t seed, int depth) {
    const TransitionMatrix& A = w.matrix();
    Rng rng(seed);
    Report report;

    auto mass = [&](const Word& word) {
        if (word.empty()) return Rational(1);
        Rational out = m[word.back()];
        for (size_t j = 0; j + 1 < word.size(); ++j) out *= w.at(word[j], word[j + 1]);
        return out;
    };
    // integrates at one fixed refinement level: the shallow per-depth sums
    // satisfy every identity formally, so only a common deeper level can
    // expose a mass vector that is not stationary
    auto phi_at = [&](const CylFun& f, int level) {
        RadScalar sum;
        for (const Word& z : admissible_words(A, level))
            sum += RadScalar(mass(z)) * f.value(z);
        return sum;
    };

    const int rounds = 6;
    const int common = depth + 1;
    bool alpha_ok = true, transfer_ok = true, fiber_ok = true;
    std::string alpha_detail, transfer_detail, fiber_detail;
    for (int round = 0; round < rounds; ++round) {
        int d = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(depth)));
        CylFun f = rng.cylfun(A, d);

        if (alpha_ok && phi_at(alpha(f), common) != phi_at(f, common)) {
            alpha_ok = false;
            alpha_detail = "fails on " + f.str();
        }
        if (transfer_ok && phi_at(transfer(f, w), common) != phi_at(f, common)) {
            transfer_ok = false;
            transfer_detail = "fails on " + f.str();
        }
        // one-step disintegration: each cylinder mass must split across its
        // admissible one-symbol extensions
        RadScalar shallow, refined;
        for (const auto& [word, v] : f.values()) {
            shallow += RadScalar(mass(word)) * v;
            RadScalar split;
            for (Symbol c = 0; c < A.symbol_count(); ++c) {
                if (!A.edge(word.back(), c)) continue;
                Word wc = word;
                wc.push_back(c);
                split += RadScalar(mass(wc));
            }
            refined += split * v;
        }
        if (fiber_ok && shallow != refined) {
            fiber_ok = false;
            fiber_detail = "fails on " + f.str();
        }
    }
    report.push_back({"phi.alpha = phi", alpha_ok, alpha_detail});
    report.push_back({"phi.transfer = phi", transfer_ok, transfer_detail});
    report.push_back({"fiber disintegration of phi", fiber_ok, fiber_detail});
    return report;
}

}  // namespace sftcross
