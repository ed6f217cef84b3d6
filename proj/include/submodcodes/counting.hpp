#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "submodcodes/bigint.hpp"
#include "submodcodes/errors.hpp"

namespace submod {

/// Integer Laurent polynomial. Negative exponents appear only in intermediate
/// substitutions; every public counting result is a genuine polynomial and is
/// asserted as such before it is returned.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(BigInt constant) {
        if (!constant.is_zero()) coeffs_[0] = std::move(constant);
    }

    static IntPolynomial monomial(BigInt c, int degree) {
        IntPolynomial out;
        if (!c.is_zero()) out.coeffs_[degree] = std::move(c);
        return out;
    }

    static IntPolynomial one() { return IntPolynomial(BigInt{1}); }

    const std::map<int, BigInt>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    BigInt coefficient(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? BigInt{} : it->second;
    }

    int degree() const {
        if (coeffs_.empty()) throw ValidationError("degree of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    int low_degree() const {
        if (coeffs_.empty()) throw ValidationError("low degree of zero polynomial");
        return coeffs_.begin()->first;
    }

    bool is_polynomial() const { return coeffs_.empty() || low_degree() >= 0; }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.rbegin()->second == BigInt{1}; }

    BigInt leading_coefficient() const {
        if (coeffs_.empty()) return BigInt{};
        return coeffs_.rbegin()->second;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial out = a;
        for (const auto& [d, c] : b.coeffs_) out.add_term(d, c);
        return out;
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial out = a;
        for (const auto& [d, c] : b.coeffs_) out.add_term(d, -c);
        return out;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial out;
        for (const auto& [da, ca] : a.coeffs_)
            for (const auto& [db, cb] : b.coeffs_) out.add_term(da + db, ca * cb);
        return out;
    }

    IntPolynomial& operator+=(const IntPolynomial& b) { return *this = *this + b; }
    IntPolynomial& operator*=(const IntPolynomial& b) { return *this = *this * b; }

    /// Multiply by X^k (k may be negative).
    IntPolynomial shifted(int k) const {
        IntPolynomial out;
        for (const auto& [d, c] : coeffs_) out.coeffs_[d + k] = c;
        return out;
    }

    /// Substitute X -> X^{-1}.
    IntPolynomial inverse_substituted() const {
        IntPolynomial out;
        for (const auto& [d, c] : coeffs_) out.coeffs_[-d] = c;
        return out;
    }

    /// Exact division; throws if the divisor's leading coefficient is not a
    /// unit or a nonzero remainder is left.
    IntPolynomial divided_exactly_by(const IntPolynomial& div) const {
        if (div.is_zero()) throw ValidationError("polynomial division by zero");
        BigInt lead = div.leading_coefficient();
        bool lead_one = lead == BigInt{1};
        if (!lead_one && lead != BigInt{-1})
            throw ValidationError("divided_exactly_by: leading coefficient must be a unit");
        IntPolynomial rem = *this, quot;
        int dd = div.degree();
        while (!rem.is_zero() && rem.degree() >= dd) {
            BigInt c = rem.coeffs_.rbegin()->second;
            if (!lead_one) c = -c;
            int shift = rem.degree() - dd;
            quot.add_term(shift, c);
            rem = rem - div * monomial(c, shift);
        }
        if (!rem.is_zero()) throw ValidationError("division is not exact");
        return quot;
    }

    bool is_palindromic() const {
        if (coeffs_.empty()) return true;
        int lo = low_degree(), hi = degree();
        for (const auto& [d, c] : coeffs_)
            if (coefficient(lo + hi - d) != c) return false;
        return true;
    }

    bool has_nonnegative_coefficients() const {
        for (const auto& [d, c] : coeffs_)
            if (c.is_negative()) return false;
        return true;
    }

    BigInt evaluate(const BigInt& x) const {
        if (!is_polynomial()) throw ValidationError("evaluate: Laurent part present");
        BigInt out;
        int prev = -1;
        BigInt xp = 1;
        for (const auto& [d, c] : coeffs_) {
            xp = prev < 0 ? BigInt::pow(x, static_cast<std::uint64_t>(d))
                          : xp * BigInt::pow(x, static_cast<std::uint64_t>(d - prev));
            prev = d;
            out += c * xp;
        }
        return out;
    }

    /// Canonical descending-degree rendering, e.g. "3X^4+4X^3+6X^2+3X+3".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [d, c] = *it;
            std::string cs = c.to_string();
            bool neg = !cs.empty() && cs[0] == '-';
            if (!out.empty()) out += neg ? "-" : "+";
            else if (neg) out += "-";
            if (neg) cs = cs.substr(1);
            bool unit_coeff = cs == "1";
            if (d == 0) {
                out += cs;
            } else {
                if (!unit_coeff) out += cs;
                out += "X";
                if (d != 1) out += "^" + std::to_string(d);
            }
        }
        return out;
    }

  private:
    void add_term(int degree, BigInt c) {
        if (c.is_zero()) return;
        auto it = coeffs_.find(degree);
        if (it == coeffs_.end()) {
            coeffs_.emplace(degree, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    std::map<int, BigInt> coeffs_;
};

/// Gaussian binomial [a choose b]_X as a polynomial: the numerator product
/// prod_{i<b} (1 - X^{a-i}) divided exactly by prod_{i<b} (1 - X^{b-i}).
inline IntPolynomial gaussian_binomial(int a, int b) {
    if (b < 0 || a < b) throw ValidationError("gaussian_binomial requires a >= b >= 0");
    IntPolynomial num = IntPolynomial::one();
    for (int i = 0; i < b; ++i)
        num *= IntPolynomial::one() - IntPolynomial::monomial(BigInt{1}, a - i);
    for (int i = 0; i < b; ++i)
        num = num.divided_exactly_by(IntPolynomial::one() -
                                     IntPolynomial::monomial(BigInt{1}, b - i));
    if (!num.has_nonnegative_coefficients() || !num.is_palindromic() ||
        (!num.is_zero() && num.degree() != b * (a - b)))
        throw ValidationError("gaussian_binomial: malformed result");
    return num;
}

/// Elementary divisor type: a weakly decreasing exponent vector with last
/// entry 0, as used to index counting polynomials. Derives the distinct
/// values, their multiplicities, the jump positions and the gaps.
struct EDType {
    std::vector<int> eps;

    explicit EDType(std::vector<int> e) : eps(std::move(e)) {
        if (eps.empty()) throw ValidationError("empty divisor type");
        for (std::size_t i = 1; i < eps.size(); ++i)
            if (eps[i - 1] < eps[i]) throw ValidationError("divisor type must be weakly decreasing");
        if (eps.back() != 0) throw ValidationError("divisor type must end in 0");
        if (eps.front() < 0) throw ValidationError("divisor type entries must be >= 0");
    }

    int d() const { return static_cast<int>(eps.size()); }

    std::vector<int> distinct_values() const {
        std::vector<int> vals;
        for (int e : eps)
            if (vals.empty() || vals.back() != e) vals.push_back(e);
        return vals;
    }

    /// Number of distinct values minus one.
    int levels() const { return static_cast<int>(distinct_values().size()) - 1; }

    std::vector<int> multiplicities() const {
        std::vector<int> mult;
        for (std::size_t i = 0; i < eps.size(); ++i) {
            if (i == 0 || eps[i] != eps[i - 1]) mult.push_back(0);
            ++mult.back();
        }
        return mult;
    }

    /// jumps()[t] counts the entries >= the (t+1)-st distinct value; these are
    /// the column indices where the staircase drops.
    std::vector<int> jumps() const {
        std::vector<int> vals = distinct_values(), out;
        int running = 0;
        auto mult = multiplicities();
        for (std::size_t t = 0; t + 1 < vals.size(); ++t) {
            running += mult[t];
            out.push_back(running);
        }
        return out;
    }

    /// gaps()[t] = difference between consecutive distinct values.
    std::vector<int> gaps() const {
        std::vector<int> vals = distinct_values(), out;
        for (std::size_t t = 0; t + 1 < vals.size(); ++t) out.push_back(vals[t] - vals[t + 1]);
        return out;
    }

    int min_gap() const {
        auto g = gaps();
        if (g.empty()) throw ValidationError("min_gap of constant type");
        return *std::min_element(g.begin(), g.end());
    }

    bool is_boundary(int r) const { return eps.front() == r; }

    bool operator==(const EDType& o) const { return eps == o.eps; }
};

/// Counts homothety classes with a fixed staircase: the product of the flag
/// Gaussian binomials over the jump chain, evaluated at X^{-1}, times
/// X^{sum of gap * jump * (d - jump)}. The Laurent part always cancels.
inline IntPolynomial type_count_from_jumps(int d, const std::vector<int>& jumps,
                                           const std::vector<int>& gaps) {
    if (jumps.size() != gaps.size()) throw ValidationError("jumps/gaps size mismatch");
    int power = 0;
    IntPolynomial flag = IntPolynomial::one();
    for (std::size_t t = 0; t < jumps.size(); ++t) {
        int i = jumps[t];
        int next = (t + 1 < jumps.size()) ? jumps[t + 1] : d;
        if (i < 1 || i >= d || next <= i) throw ValidationError("invalid jump chain");
        if (gaps[t] < 1) throw ValidationError("gaps must be >= 1");
        flag *= gaussian_binomial(next, i);
        power += gaps[t] * i * (d - i);
    }
    IntPolynomial out = flag.inverse_substituted().shifted(power);
    if (!out.is_polynomial()) throw ValidationError("type count has a Laurent tail");
    if (!out.is_monic() || out.degree() != power)
        throw ValidationError("type count is not monic of the expected degree");
    return out;
}

/// Counting polynomial of one elementary divisor type.
inline IntPolynomial type_count_polynomial(const EDType& type) {
    int d = type.d();
    IntPolynomial out = type_count_from_jumps(d, type.jumps(), type.gaps());
    // Cross-check the degree against the pairwise-difference formula.
    long long pair_sum = 0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) pair_sum += type.eps[i] - type.eps[j];
    if (out.degree() != pair_sum)
        throw ValidationError("type count degree mismatch");
    return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

/// All elementary divisor types for ambient rank d and exponent cap r,
/// in ascending lexicographic order.
inline std::vector<EDType> enumerate_types(int d, int r) {
    if (d < 1 || r < 0) throw ValidationError("enumerate_types: bad parameters");
    std::vector<EDType> out;
    std::vector<int> eps(d, 0);
    // Weakly decreasing prefixes with the last entry pinned to 0; iterating
    // the front coordinate outermost yields ascending lexicographic order.
    auto rec = [&](auto&& self, int pos, int cap) -> void {
        if (pos == d - 1) {
            out.emplace_back(eps);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            eps[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, r);
    std::uint64_t expected = binomial(static_cast<std::uint64_t>(r + d - 1),
                                      static_cast<std::uint64_t>(d - 1));
    if (out.size() != expected) throw ValidationError("type enumeration count mismatch");
    return out;
}

inline std::vector<EDType> enumerate_boundary_types(int d, int r) {
    std::vector<EDType> out;
    for (auto& t : enumerate_types(d, r))
        if (t.is_boundary(r)) out.push_back(t);
    return out;
}

/// Polynomial whose value at a prime power q counts the homothety classes of
/// submodules of R^d, R the chain ring with residue size q and nilpotency r.
inline IntPolynomial ball_polynomial(int d, int r,
                                     std::uint64_t budget = 1'000'000) {
    if (d < 2 || r < 1) throw ValidationError("ball_polynomial requires d >= 2, r >= 1");
    std::uint64_t n_types = binomial(static_cast<std::uint64_t>(r + d - 1),
                                     static_cast<std::uint64_t>(d - 1));
    if (n_types > budget)
        throw BudgetError("ball_polynomial: too many divisor types", std::to_string(n_types));
    IntPolynomial out;
    for (const auto& t : enumerate_types(d, r)) out += type_count_polynomial(t);
    return out;
}

/// Polynomial counting only the boundary classes (types with top entry r).
inline IntPolynomial boundary_polynomial(int d, int r) {
    if (d < 2 || r < 1) throw ValidationError("boundary_polynomial requires d >= 2, r >= 1");
    IntPolynomial out;
    for (const auto& t : enumerate_boundary_types(d, r)) out += type_count_polynomial(t);
    return out;
}

/// Number of homothety classes |L^0(R^d)| at residue size q.
inline BigInt class_count(int d, int r, std::uint64_t q) {
    return ball_polynomial(d, r).evaluate(BigInt{static_cast<long long>(q)});
}

inline BigInt boundary_class_count(int d, int r, std::uint64_t q) {
    return boundary_polynomial(d, r).evaluate(BigInt{static_cast<long long>(q)});
}

/// Total number of submodules of R^d: each class with top exponent e1 has
/// r - e1 + 1 members.
inline BigInt total_submodule_count(int d, int r, std::uint64_t q) {
    BigInt out;
    for (const auto& t : enumerate_types(d, r)) {
        BigInt classes = type_count_polynomial(t).evaluate(BigInt{static_cast<long long>(q)});
        out += classes * BigInt{static_cast<long long>(r - t.eps.front() + 1)};
    }
    return out;
}

/// |Gr(n, V_r)|: the number of free rank-n submodules of R^d, computed as the
/// Gaussian binomial at q^{-1} times q^{r n (d-n)} (an exact integer).
inline BigInt grassmannian_count(int d, int n, std::uint64_t q, int r) {
    if (n < 1 || n > d - 1) throw ValidationError("grassmannian_count requires 1 <= n <= d-1");
    if (r < 1) throw ValidationError("grassmannian_count requires r >= 1");
    IntPolynomial g = gaussian_binomial(d, n);
    int power = r * n * (d - n);
    IntPolynomial shifted = g.inverse_substituted().shifted(power);
    if (!shifted.is_polynomial()) throw ValidationError("grassmannian_count: not integral");
    return shifted.evaluate(BigInt{static_cast<long long>(q)});
}

/// Leading term of ball_polynomial(d, r): coefficient 1 with degree d^2 r/4
/// for even d, coefficient r+1 with degree (d^2-1) r/4 for odd d. Verified
/// against the actual polynomial when that fits the budget.
inline std::pair<BigInt, int> ball_leading_term(int d, int r,
                                                std::uint64_t verify_budget = 100'000) {
    if (d < 2 || r < 1) throw ValidationError("ball_leading_term requires d >= 2, r >= 1");
    BigInt coeff;
    int degree;
    if (d % 2 == 0) {
        coeff = 1;
        degree = d * d * r / 4;
    } else {
        coeff = r + 1;
        degree = (d * d - 1) * r / 4;
    }
    std::uint64_t n_types = binomial(static_cast<std::uint64_t>(r + d - 1),
                                     static_cast<std::uint64_t>(d - 1));
    if (n_types <= verify_budget) {
        IntPolynomial b = ball_polynomial(d, r);
        if (b.degree() != degree || b.leading_coefficient() != coeff)
            throw ValidationError("ball leading term mismatch");
    }
    return {coeff, degree};
}

inline std::vector<int> reversed(const std::vector<int>& v) {
    return std::vector<int>(v.rbegin(), v.rend());
}

/// Degree identity for a reversed-complement pair: eps + rev(eps') = lambda*1
/// forces equal degrees of the two counting polynomials.
inline bool degree_matches_reversed_pair(const EDType& a, const EDType& b, int lambda) {
    if (a.d() != b.d()) throw ValidationError("dimension mismatch");
    auto rb = reversed(b.eps);
    for (int i = 0; i < a.d(); ++i)
        if (a.eps[i] + rb[i] != lambda)
            throw ValidationError("hypothesis violated: eps + rev(eps') != lambda*1");
    return type_count_polynomial(a).degree() == type_count_polynomial(b).degree();
}

/// Degree identity for a single-coordinate shift: eps - eps' = lambda*e_k
/// (k is 1-based) shifts the degree by (d + 1 - 2k) * lambda.
inline bool degree_matches_shifted_pair(const EDType& a, const EDType& b, int lambda, int k) {
    if (a.d() != b.d()) throw ValidationError("dimension mismatch");
    if (k < 1 || k > a.d()) throw ValidationError("bad coordinate index");
    for (int i = 0; i < a.d(); ++i) {
        int want = (i == k - 1) ? lambda : 0;
        if (a.eps[i] - b.eps[i] != want)
            throw ValidationError("hypothesis violated: eps - eps' != lambda*e_k");
    }
    int lhs = type_count_polynomial(a).degree();
    int rhs = type_count_polynomial(b).degree() + (a.d() + 1 - 2 * k) * lambda;
    return lhs == rhs;
}

}  // namespace submod
