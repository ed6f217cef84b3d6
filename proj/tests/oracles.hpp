#pragma once

// Brute-force reference implementations used only by the test suites. They
// represent modules as explicit vector sets and never touch the canonical
// matrix machinery, so agreement with the library is a genuine cross-check.

#include <map>
#include <set>
#include <vector>

#include "submodcodes/submodule.hpp"

namespace oracle {

using submod::ChainRing;
using submod::Elem;
using submod::Mat;
using submod::Row;
using submod::Submodule;

using VecSet = std::set<Row>;

inline std::vector<Row> all_vectors(const ChainRing& R, int d, std::size_t guard = 100000) {
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) {
        total *= static_cast<std::size_t>(R.size());
        if (total > guard) throw std::runtime_error("oracle: ambient module too large");
    }
    std::vector<Row> out;
    Row v(d, 0);
    while (true) {
        out.push_back(v);
        int i = d - 1;
        while (i >= 0 && ++v[i] == R.size()) v[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

/// Row span as an explicit vector set: all coefficient tuples, no echelon tricks.
inline VecSet span_set(const ChainRing& R, int d, const Mat& gens, std::size_t guard = 2000000) {
    std::size_t combos = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        combos *= static_cast<std::size_t>(R.size());
        if (combos > guard) throw std::runtime_error("oracle: span too large");
    }
    VecSet out;
    std::vector<Elem> coeff(gens.size(), 0);
    while (true) {
        Row v(d, 0);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (int c = 0; c < d; ++c) v[c] = R.add(v[c], R.mul(coeff[i], gens[i][c]));
        out.insert(std::move(v));
        std::size_t i = 0;
        while (i < coeff.size() && ++coeff[i] == R.size()) coeff[i++] = 0;
        if (i == coeff.size()) break;
        if (coeff.empty()) break;
    }
    if (gens.empty()) out.insert(Row(d, 0));
    return out;
}

inline VecSet module_set(const Submodule& u) {
    return span_set(u.ring(), u.ambient_rank(), u.rows());
}

inline VecSet scale_set(const ChainRing& R, const VecSet& s, std::uint32_t k) {
    VecSet out;
    Elem f = R.pi_pow(k);
    for (const Row& v : s) {
        Row w(v.size(), 0);
        for (std::size_t c = 0; c < v.size(); ++c) w[c] = R.mul(f, v[c]);
        out.insert(std::move(w));
    }
    return out;
}

inline bool subset_of(const VecSet& a, const VecSet& b) {
    for (const Row& v : a)
        if (!b.count(v)) return false;
    return true;
}

/// Every distinct span of at most d generators: hits every submodule.
inline std::set<VecSet> all_submodules_brute(const ChainRing& R, int d,
                                             std::size_t guard = 100000) {
    std::vector<Row> vecs = all_vectors(R, d, guard);
    std::set<VecSet> out;
    out.insert(span_set(R, d, {}));
    // Grow spans one generator at a time; fixed point after <= d rounds.
    std::set<VecSet> frontier = out;
    for (int round = 0; round < d; ++round) {
        std::set<VecSet> next;
        for (const VecSet& s : frontier)
            for (const Row& v : vecs) {
                if (s.count(v)) continue;
                VecSet grown;
                // s is already a module, so s + Rv is the span with v added
                for (const Row& base : s)
                    for (Elem c = 0; c < R.size(); ++c) {
                        Row w = base;
                        for (int j = 0; j < d; ++j) w[j] = R.add(w[j], R.mul(c, v[j]));
                        grown.insert(std::move(w));
                    }
                if (!out.count(grown)) {
                    out.insert(grown);
                    next.insert(grown);
                }
            }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return out;
}

/// Saturation as a set: all x with π^m·x in the set, m the least entry valuation.
inline VecSet saturation_set(const ChainRing& R, int d, const VecSet& s) {
    std::uint32_t m = R.r();
    for (const Row& v : s)
        for (Elem e : v)
            if (e != 0) m = std::min(m, R.valuation(e));
    VecSet out;
    Elem f = R.pi_pow(m);
    for (const Row& x : all_vectors(R, d)) {
        Row fx(d, 0);
        for (int c = 0; c < d; ++c) fx[c] = R.mul(f, x[c]);
        if (s.count(fx)) out.insert(x);
    }
    return out;
}

/// Least m with π^m·(saturation of a) inside (saturation of b).
inline int half_distance_set(const ChainRing& R, int d, const VecSet& a, const VecSet& b) {
    VecSet sa = saturation_set(R, d, a), sb = saturation_set(R, d, b);
    for (std::uint32_t m = 0;; ++m)
        if (subset_of(scale_set(R, sa, m), sb)) return static_cast<int>(m);
}

inline int distance_set(const ChainRing& R, int d, const VecSet& a, const VecSet& b) {
    return half_distance_set(R, d, a, b) + half_distance_set(R, d, b, a);
}

/// Divisor exponents recovered from the filtration sizes |π^k·U| alone.
inline std::vector<int> divisor_type_set(const ChainRing& R, int d, const VecSet& s) {
    const int r = static_cast<int>(R.r());
    auto log_q = [&](std::size_t n) {
        int e = 0;
        std::size_t acc = 1;
        while (acc < n) {
            acc *= static_cast<std::size_t>(R.q());
            ++e;
        }
        if (acc != n) throw std::runtime_error("oracle: module size is not a power of q");
        return e;
    };
    std::vector<int> sizes;
    for (int k = 0; k <= r; ++k) sizes.push_back(log_q(scale_set(R, s, k).size()));
    // count_lt[t] = number of exponents strictly below t
    std::vector<int> count_lt(r + 2, 0);
    for (int k = 0; k < r; ++k) count_lt[r - k] = sizes[k] - sizes[k + 1];
    std::vector<int> eps;
    for (int t = 0; t <= r; ++t) {
        int n_eq = (t < r ? count_lt[t + 1] : d) - count_lt[t];
        for (int i = 0; i < n_eq; ++i) eps.push_back(t);
    }
    std::sort(eps.begin(), eps.end(), std::greater<int>());
    return eps;
}

}  // namespace oracle
