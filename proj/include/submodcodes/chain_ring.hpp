#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "submodcodes/errors.hpp"

namespace submod {

enum class RingKind { IntegerModular, TruncatedPolynomial };

inline std::string to_string(RingKind k) {
    return k == RingKind::IntegerModular ? "integer-modular" : "truncated-polynomial";
}

inline RingKind ring_kind_from_string(const std::string& s) {
    if (s == "integer-modular" || s == "z") return RingKind::IntegerModular;
    if (s == "truncated-polynomial" || s == "poly") return RingKind::TruncatedPolynomial;
    throw ValidationError("unknown ring kind: " + s);
}

/// Packed canonical representative of a ring element, always < ChainRing::size().
using Elem = std::uint64_t;

/// Finite commutative chain ring with residue field F_q (q = p^s) and
/// nilpotency index r: the ideals form the chain R ⊃ πR ⊃ ... ⊃ π^r R = 0,
/// where π generates the maximal ideal.
///
/// Two realizations share one interface:
///   IntegerModular       Z/p^r Z         π = p  (forces s = 1)
///   TruncatedPolynomial  F_q[t]/(t^r)    π = t
///
/// Every element is a packed base-q digit string: u_0 + u_1·π + ... +
/// u_{r-1}·π^{r-1} with digits u_i in F_q is stored as Σ u_i q^i, so the
/// canonical codes are exactly the integers in [0, q^r). For the integer
/// kind this coincides with the usual representative in [0, p^r).
///
/// Instances are immutable after construction and safe to share across
/// threads. Obtain them only through ChainRing::make.
class ChainRing {
  public:
    static constexpr std::uint64_t kElementBudget = 1'000'000;

    static std::shared_ptr<const ChainRing> make(RingKind kind, std::uint32_t p,
                                                 std::uint32_t s, std::uint32_t r) {
        return std::shared_ptr<const ChainRing>(new ChainRing(kind, p, s, r));
    }

    RingKind kind() const { return kind_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t s() const { return s_; }
    std::uint32_t r() const { return r_; }
    std::uint64_t q() const { return q_; }
    /// |R| = q^r.
    std::uint64_t size() const { return size_; }
    /// Number of units, q^r - q^{r-1}.
    std::uint64_t unit_count() const { return size_ - size_ / q_; }

    bool same_spec(const ChainRing& other) const {
        return kind_ == other.kind_ && p_ == other.p_ && s_ == other.s_ && r_ == other.r_;
    }

    /// Monic irreducible defining F_q over F_p, as coefficients c_0..c_s
    /// (c_s = 1). Empty when s = 1.
    const std::vector<std::uint32_t>& modulus_poly() const { return fq_modulus_; }

    std::string description() const {
        if (kind_ == RingKind::IntegerModular)
            return "Z/" + std::to_string(size_) + "Z";
        return "F" + std::to_string(q_) + "[t]/(t^" + std::to_string(r_) + ")";
    }

    // ---- element arithmetic -------------------------------------------------

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem uniformizer() const { return pi_pow(1); }

    Elem add(Elem a, Elem b) const {
        if (kind_ == RingKind::IntegerModular) {
            Elem t = a + b;
            return t >= size_ ? t - size_ : t;
        }
        Elem out = 0;
        for (std::uint32_t i = 0; i < r_; ++i)
            out += static_cast<Elem>(fq_add(digit(a, i), digit(b, i))) * q_pow_[i];
        return out;
    }

    Elem neg(Elem a) const {
        if (kind_ == RingKind::IntegerModular) return a == 0 ? 0 : size_ - a;
        Elem out = 0;
        for (std::uint32_t i = 0; i < r_; ++i)
            out += static_cast<Elem>(fq_neg(digit(a, i))) * q_pow_[i];
        return out;
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (kind_ == RingKind::IntegerModular) return (a * b) % size_;
        Elem out = 0;
        for (std::uint32_t i = 0; i < r_; ++i) {
            std::uint32_t ai = digit(a, i);
            if (ai == 0) continue;
            for (std::uint32_t j = 0; i + j < r_; ++j) {
                std::uint32_t bj = digit(b, j);
                if (bj == 0) continue;
                std::uint32_t k = i + j;
                std::uint32_t ck = fq_add(digit(out, k), fq_mul(ai, bj));
                out = out - static_cast<Elem>(digit(out, k)) * q_pow_[k] +
                      static_cast<Elem>(ck) * q_pow_[k];
            }
        }
        return out;
    }

    bool is_unit(Elem a) const { return digit(a, 0) != 0; }

    /// π-adic valuation: index of the first nonzero digit, with valuation(0) = r.
    std::uint32_t valuation(Elem a) const {
        for (std::uint32_t v = 0; v < r_; ++v)
            if (digit(a, v) != 0) return v;
        return r_;
    }

    /// Multiplicative inverse of a unit.
    Elem inv(Elem a) const {
        if (!is_unit(a)) throw ValidationError("inv: element is not a unit");
        if (kind_ == RingKind::IntegerModular) return inv_mod(a, size_);
        // Solve x·a = 1 digit by digit: the convolution has no carries.
        std::uint32_t u0 = fq_inv(digit(a, 0));
        Elem x = u0;
        for (std::uint32_t k = 1; k < r_; ++k) {
            std::uint32_t acc = 0;
            for (std::uint32_t i = 1; i <= k; ++i)
                acc = fq_add(acc, fq_mul(digit(a, i), digit(x, k - i)));
            std::uint32_t xk = fq_mul(u0, fq_neg(acc));
            x += static_cast<Elem>(xk) * q_pow_[k];
        }
        return x;
    }

    /// π^k, equal to zero once k >= r.
    Elem pi_pow(std::uint32_t k) const { return k >= r_ ? 0 : q_pow_[k]; }

    /// Canonical y with π^k·y = a; requires valuation(a) >= k.
    /// (Drops the k lowest digits; the result lies in [0, q^{r-k}).)
    Elem shift_down(Elem a, std::uint32_t k) const {
        if (valuation(a) < k) throw ValidationError("shift_down: valuation too small");
        return a / q_pow_[k];
    }

    /// Canonical representative of a + π^m R: zeroes the digits at index >= m.
    Elem reduce_mod_pi_pow(Elem a, std::uint32_t m) const {
        return m >= r_ ? a : a % q_pow_[m];
    }

    /// Unit u with u·π^{valuation(a)} = a (a != 0).
    Elem unit_part(Elem a) const { return shift_down(a, valuation(a)); }

    /// Image in the residue field F_q, as a code < q.
    std::uint32_t residue(Elem a) const { return digit(a, 0); }

    /// The canonical section F_q -> R (digit-0 embedding).
    Elem canonical_lift(std::uint32_t fq_code) const {
        if (fq_code >= q_) throw ValidationError("canonical_lift: code out of range");
        return fq_code;
    }

    /// Canonical lift R/π^m -> R along the quotient map, zero-padding the
    /// higher digits. `quotient` must be the same kind of ring with
    /// nilpotency m <= r; codes transfer unchanged.
    Elem lift_from_quotient(const ChainRing& quotient, Elem a) const {
        if (quotient.kind_ != kind_ || quotient.p_ != p_ || quotient.s_ != s_ ||
            quotient.r_ > r_)
            throw ValidationError("lift_from_quotient: incompatible quotient ring");
        return a;
    }

    /// Reduction R -> R/π^m (codes transfer unchanged after truncation).
    Elem project_to_quotient(const ChainRing& quotient, Elem a) const {
        if (quotient.kind_ != kind_ || quotient.p_ != p_ || quotient.s_ != s_ ||
            quotient.r_ > r_)
            throw ValidationError("project_to_quotient: incompatible quotient ring");
        return reduce_mod_pi_pow(a, quotient.r_);
    }

    /// All q^r elements in canonical order (their codes are 0..q^r-1).
    std::vector<Elem> all_elements(std::uint64_t budget = kElementBudget) const {
        if (size_ > budget)
            throw BudgetError("all_elements: ring too large", std::to_string(size_));
        std::vector<Elem> out(size_);
        std::iota(out.begin(), out.end(), Elem{0});
        return out;
    }

    std::uint32_t digit(Elem a, std::uint32_t i) const {
        return static_cast<std::uint32_t>((a / q_pow_[i]) % q_);
    }

    Elem from_digits(const std::vector<std::uint32_t>& digits) const {
        Elem out = 0;
        for (std::uint32_t i = 0; i < r_ && i < digits.size(); ++i) {
            if (digits[i] >= q_) throw ValidationError("from_digits: digit out of range");
            out += static_cast<Elem>(digits[i]) * q_pow_[i];
        }
        return out;
    }

    // ---- residue field F_q --------------------------------------------------

    std::uint32_t fq_add(std::uint32_t a, std::uint32_t b) const {
        if (s_ == 1) {
            std::uint32_t t = a + b;
            return t >= p_ ? t - p_ : t;
        }
        std::uint32_t out = 0, pw = 1;
        for (std::uint32_t i = 0; i < s_; ++i, pw *= p_)
            out += ((a / pw + b / pw) % p_) * pw;
        return out;
    }

    std::uint32_t fq_neg(std::uint32_t a) const {
        if (s_ == 1) return a == 0 ? 0 : p_ - a;
        std::uint32_t out = 0, pw = 1;
        for (std::uint32_t i = 0; i < s_; ++i, pw *= p_) {
            std::uint32_t c = (a / pw) % p_;
            out += (c == 0 ? 0 : p_ - c) * pw;
        }
        return out;
    }

    std::uint32_t fq_mul(std::uint32_t a, std::uint32_t b) const {
        if (s_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
        // Schoolbook product of coefficient vectors, then reduce y^{s+k}
        // against the precomputed rows of fq_red_.
        std::vector<std::uint32_t> prod(2 * s_ - 1, 0);
        for (std::uint32_t i = 0; i < s_; ++i) {
            std::uint32_t ai = fp_digit(a, i);
            if (ai == 0) continue;
            for (std::uint32_t j = 0; j < s_; ++j)
                prod[i + j] = static_cast<std::uint32_t>(
                    (prod[i + j] + std::uint64_t(ai) * fp_digit(b, j)) % p_);
        }
        for (std::uint32_t k = 2 * s_ - 2; k >= s_; --k) {
            std::uint32_t c = prod[k];
            if (c != 0)
                for (std::uint32_t i = 0; i < s_; ++i)
                    prod[i] = static_cast<std::uint32_t>(
                        (prod[i] + std::uint64_t(c) * fq_red_[k - s_][i]) % p_);
            prod[k] = 0;
            if (k == s_) break;
        }
        std::uint32_t out = 0, pw = 1;
        for (std::uint32_t i = 0; i < s_; ++i, pw *= p_) out += prod[i] * pw;
        return out;
    }

    std::uint32_t fq_inv(std::uint32_t a) const {
        if (a == 0) throw ValidationError("fq_inv: zero");
        if (s_ == 1) return static_cast<std::uint32_t>(inv_mod(a, p_));
        // a^{q-2} in the multiplicative group of order q-1.
        std::uint64_t e = q_ - 2;
        std::uint32_t base = a, acc = 1;
        while (e > 0) {
            if (e & 1) acc = fq_mul(acc, base);
            base = fq_mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    // ---- printing / parsing --------------------------------------------------

    /// Integer kind prints the representative; polynomial kind prints terms
    /// like "1+t+2t^2" with F_q coefficient codes as integers.
    std::string element_to_string(Elem a) const {
        if (kind_ == RingKind::IntegerModular) return std::to_string(a);
        if (a == 0) return "0";
        std::string out;
        for (std::uint32_t i = 0; i < r_; ++i) {
            std::uint32_t c = digit(a, i);
            if (c == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += std::to_string(c);
            } else {
                if (c != 1) out += std::to_string(c);
                out += "t";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    Elem parse_element(const std::string& text) const {
        if (kind_ == RingKind::IntegerModular) {
            Elem v = std::stoull(text);
            if (v >= size_) throw ValidationError("element out of range: " + text);
            return v;
        }
        Elem out = 0;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t next = text.find('+', pos);
            if (next == std::string::npos) next = text.size();
            std::string term = text.substr(pos, next - pos);
            pos = next + 1;
            if (term.empty()) throw ValidationError("bad element string: " + text);
            std::uint64_t coeff = 1;
            std::uint32_t exp = 0;
            std::size_t tp = term.find('t');
            if (tp == std::string::npos) {
                coeff = std::stoull(term);
            } else {
                std::string head = term.substr(0, tp);
                if (!head.empty() && head.back() == '*') head.pop_back();
                if (!head.empty()) coeff = std::stoull(head);
                exp = 1;
                if (tp + 1 < term.size()) {
                    if (term[tp + 1] != '^') throw ValidationError("bad term: " + term);
                    exp = static_cast<std::uint32_t>(std::stoul(term.substr(tp + 2)));
                }
            }
            if (exp >= r_ || coeff >= q_)
                throw ValidationError("element out of range: " + text);
            std::uint32_t cur = digit(out, exp);
            std::uint32_t nd = fq_add(cur, static_cast<std::uint32_t>(coeff));
            out = out - static_cast<Elem>(cur) * q_pow_[exp] +
                  static_cast<Elem>(nd) * q_pow_[exp];
        }
        return out;
    }

  private:
    ChainRing(RingKind kind, std::uint32_t p, std::uint32_t s, std::uint32_t r)
        : kind_(kind), p_(p), s_(s), r_(r) {
        if (r < 1) throw ValidationError("nilpotency index r must be >= 1");
        if (s < 1) throw ValidationError("extension degree s must be >= 1");
        if (!is_prime(p)) throw ValidationError("p must be prime");
        if (kind == RingKind::IntegerModular && s != 1)
            throw ValidationError("Z/p^rZ has residue field F_p; s must be 1");
        q_ = 1;
        for (std::uint32_t i = 0; i < s; ++i) {
            q_ *= p;
            if (q_ > (std::uint64_t{1} << 31)) throw ValidationError("q too large");
        }
        size_ = 1;
        q_pow_.assign(r + 1, 1);
        for (std::uint32_t i = 0; i < r; ++i) {
            size_ *= q_;
            if (size_ > (std::uint64_t{1} << 31)) throw ValidationError("q^r too large");
            q_pow_[i + 1] = size_;
        }
        if (s > 1) init_fq();
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    static std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
        std::int64_t t = 0, nt = 1;
        std::int64_t rr = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
        while (nr != 0) {
            std::int64_t qt = rr / nr;
            std::int64_t tmp = t - qt * nt;
            t = nt;
            nt = tmp;
            tmp = rr - qt * nr;
            rr = nr;
            nr = tmp;
        }
        if (rr != 1) throw ValidationError("inv: element is not a unit");
        if (t < 0) t += static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(t);
    }

    std::uint32_t fp_digit(std::uint32_t code, std::uint32_t i) const {
        std::uint32_t pw = 1;
        for (std::uint32_t k = 0; k < i; ++k) pw *= p_;
        return (code / pw) % p_;
    }

    // Lowest-code monic irreducible of degree s over F_p defines F_q; the
    // choice is deterministic so equal specs give identical arithmetic.
    void init_fq() {
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < s_; ++i) total *= p_;
        std::vector<std::uint32_t> f(s_ + 1, 0);
        f[s_] = 1;
        bool found = false;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (std::uint32_t i = 0; i < s_; ++i) {
                f[i] = static_cast<std::uint32_t>(c % p_);
                c /= p_;
            }
            if (poly_irreducible(f)) {
                found = true;
                break;
            }
        }
        if (!found) throw ValidationError("no irreducible polynomial found");
        fq_modulus_ = f;
        // fq_red_[k] = coefficients of y^{s+k} mod f.
        fq_red_.assign(s_ - 1, std::vector<std::uint32_t>(s_, 0));
        std::vector<std::uint32_t> cur(s_, 0);
        for (std::uint32_t i = 0; i < s_; ++i) cur[i] = (p_ - f[i] % p_) % p_;  // y^s mod f
        fq_red_[0] = cur;
        for (std::uint32_t k = 1; k + 1 < s_; ++k) {
            std::vector<std::uint32_t> nxt(s_, 0);
            std::uint32_t top = cur[s_ - 1];
            for (std::uint32_t i = s_ - 1; i >= 1; --i) nxt[i] = cur[i - 1];
            nxt[0] = 0;
            if (top != 0)
                for (std::uint32_t i = 0; i < s_; ++i)
                    nxt[i] = static_cast<std::uint32_t>(
                        (nxt[i] + std::uint64_t(top) * fq_red_[0][i]) % p_);
            fq_red_[k] = nxt;
            cur = nxt;
        }
    }

    // Trial division by every monic polynomial of degree 1..deg/2.
    bool poly_irreducible(const std::vector<std::uint32_t>& f) const {
        std::uint32_t deg = static_cast<std::uint32_t>(f.size()) - 1;
        for (std::uint32_t gdeg = 1; 2 * gdeg <= deg; ++gdeg) {
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < gdeg; ++i) count *= p_;
            for (std::uint64_t code = 0; code < count; ++code) {
                std::vector<std::uint32_t> g(gdeg + 1, 0);
                g[gdeg] = 1;
                std::uint64_t c = code;
                for (std::uint32_t i = 0; i < gdeg; ++i) {
                    g[i] = static_cast<std::uint32_t>(c % p_);
                    c /= p_;
                }
                if (poly_divides(g, f)) return false;
            }
        }
        return true;
    }

    bool poly_divides(const std::vector<std::uint32_t>& g,
                      const std::vector<std::uint32_t>& f) const {
        std::vector<std::uint32_t> rem(f);
        std::uint32_t gdeg = static_cast<std::uint32_t>(g.size()) - 1;
        for (std::uint32_t k = static_cast<std::uint32_t>(rem.size()) - 1; k >= gdeg; --k) {
            std::uint32_t c = rem[k];
            if (c != 0)
                for (std::uint32_t i = 0; i <= gdeg; ++i)
                    rem[k - gdeg + i] = static_cast<std::uint32_t>(
                        (rem[k - gdeg + i] + std::uint64_t(c) * (p_ - g[i]) % p_) % p_);
            if (k == gdeg) break;
        }
        for (std::uint32_t i = 0; i < gdeg; ++i)
            if (rem[i] != 0) return false;
        return true;
    }

    RingKind kind_;
    std::uint32_t p_, s_, r_;
    std::uint64_t q_ = 0, size_ = 0;
    std::vector<std::uint64_t> q_pow_;
    std::vector<std::uint32_t> fq_modulus_;           // monic irreducible, s > 1 only
    std::vector<std::vector<std::uint32_t>> fq_red_;  // y^{s+k} mod f
};

using RingPtr = std::shared_ptr<const ChainRing>;

inline RingPtr make_ring(RingKind kind, std::uint32_t p, std::uint32_t s, std::uint32_t r) {
    return ChainRing::make(kind, p, s, r);
}

}  // namespace submod
