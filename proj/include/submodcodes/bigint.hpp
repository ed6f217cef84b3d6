#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "submodcodes/errors.hpp"

namespace submod {

/// Signed arbitrary-precision integer, little-endian base-2^32 magnitude.
/// Supports exactly the operations polynomial counting needs; nothing more.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v) {  // NOLINT: implicit by design
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m =
            v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL : static_cast<unsigned long long>(v);
        while (m) {
            mag_.push_back(static_cast<std::uint32_t>(m));
            m >>= 32;
        }
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    BigInt operator-() const {
        BigInt out = *this;
        out.sign_ = -out.sign_;
        return out;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt out;
        if (a.sign_ == b.sign_) {
            out.mag_ = add_mag(a.mag_, b.mag_);
            out.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt{};
            if (c > 0) {
                out.mag_ = sub_mag(a.mag_, b.mag_);
                out.sign_ = a.sign_;
            } else {
                out.mag_ = sub_mag(b.mag_, a.mag_);
                out.sign_ = b.sign_;
            }
        }
        return out;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
        BigInt out;
        out.sign_ = a.sign_ * b.sign_;
        out.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t t = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                  out.mag_[i + j] + carry;
                out.mag_[i + j] = static_cast<std::uint32_t>(t);
                carry = t >> 32;
            }
            std::size_t k = i + b.mag_.size();
            while (carry) {
                std::uint64_t t = out.mag_[k] + carry;
                out.mag_[k] = static_cast<std::uint32_t>(t);
                carry = t >> 32;
                ++k;
            }
        }
        out.trim();
        return out;
    }

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    static BigInt pow(const BigInt& base, std::uint64_t e) {
        BigInt acc = 1, b = base;
        while (e) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long m = magnitude_u64();
        if (sign_ >= 0) return m <= static_cast<unsigned long long>(std::numeric_limits<long long>::max());
        return m <= static_cast<unsigned long long>(std::numeric_limits<long long>::max()) + 1ULL;
    }

    long long to_int64() const {
        if (!fits_int64()) throw ValidationError("BigInt does not fit in 64 bits: " + to_string());
        unsigned long long m = magnitude_u64();
        return sign_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string out;
        while (!m.empty()) {
            // divide magnitude by 10^9, collect remainder
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            std::string chunk = std::to_string(rem);
            if (!m.empty())
                chunk = std::string(9 - chunk.size(), '0') + chunk;
            out = chunk + out;
        }
        return (sign_ < 0 ? "-" : "") + out;
    }

  private:
    unsigned long long magnitude_u64() const {
        unsigned long long m = 0;
        if (!mag_.empty()) m = mag_[0];
        if (mag_.size() > 1) m |= static_cast<unsigned long long>(mag_[1]) << 32;
        return m;
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> out(big.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t t = static_cast<std::uint64_t>(big[i]) +
                              (i < small.size() ? small[i] : 0) + carry;
            out[i] = static_cast<std::uint32_t>(t);
            carry = t >> 32;
        }
        out[big.size()] = static_cast<std::uint32_t>(carry);
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t t = static_cast<std::int64_t>(a[i]) -
                             (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0) - borrow;
            if (t < 0) {
                t += (std::int64_t{1} << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            out[i] = static_cast<std::uint32_t>(t);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }

    int sign_ = 0;
    std::vector<std::uint32_t> mag_;
};

}  // namespace submod
