#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtheta {

// Arbitrary-precision signed integer. Values that fit in 63 bits live in an
// inline word with __int128 intermediates; anything larger is promoted to a
// sign + base-10^9 magnitude vector. Coefficients in this library are almost
// always tiny, so the inline path carries nearly all of the arithmetic.
class BigInt {
public:
    BigInt() : small_(0), is_small_(true) {}
    BigInt(long long v) : small_(v), is_small_(true) {
        if (v > kSmallMax || v < -kSmallMax) make_big();
    }

    static BigInt from_string(const std::string& s) {
        size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) { if (s[i] == '-') sign = -1; ++i; }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        BigInt r(0);
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r = r * BigInt(10) + BigInt(s[i] - '0');
        }
        return sign < 0 ? -r : r;
    }

    bool is_zero() const { return is_small_ ? small_ == 0 : sign_ == 0; }
    bool is_one() const { return is_small_ && small_ == 1; }
    int sign() const {
        if (is_small_) return small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
        return sign_;
    }

    friend BigInt operator-(const BigInt& a) {
        if (a.is_small_) return BigInt(-a.small_); // |small_| < 2^62, negation safe
        BigInt r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.is_small_ && b.is_small_) {
            __int128 s = static_cast<__int128>(a.small_) + b.small_;
            if (fits(s)) return BigInt(static_cast<long long>(s));
        }
        return add_big(a, b);
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_small_ && b.is_small_) {
            __int128 p = static_cast<__int128>(a.small_) * b.small_;
            if (fits(p)) return BigInt(static_cast<long long>(p));
        }
        return mul_big(a, b);
    }

    // Truncated quotient (rounds toward zero), matching C++ integer division.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        if (a.is_small_ && b.is_small_) {
            q = BigInt(a.small_ / b.small_);
            r = BigInt(a.small_ % b.small_);
            return;
        }
        divmod_big(a, b, q, r);
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) { BigInt q, r; divmod(a, b, q, r); return q; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { BigInt q, r; divmod(a, b, q, r); return r; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        if (a.is_small_ && b.is_small_) return a.small_ == b.small_;
        return cmp(a, b) == 0;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.is_small_ && b.is_small_) return a.small_ < b.small_;
        return cmp(a, b) < 0;
    }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt abs() const { return sign() < 0 ? -*this : *this; }

    static BigInt gcd(BigInt a, BigInt b) {
        if (a.is_small_ && b.is_small_) {
            unsigned long long x = a.small_ < 0 ? -static_cast<unsigned long long>(a.small_)
                                                : static_cast<unsigned long long>(a.small_);
            unsigned long long y = b.small_ < 0 ? -static_cast<unsigned long long>(b.small_)
                                                : static_cast<unsigned long long>(b.small_);
            while (y) { unsigned long long t = x % y; x = y; y = t; }
            return BigInt(static_cast<long long>(x));
        }
        a = a.abs(); b = b.abs();
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    static BigInt pow(BigInt base, unsigned e) {
        BigInt r(1);
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (is_small_) return std::to_string(small_);
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(mag_.back());
        for (size_t i = mag_.size() - 1; i-- > 0;) {
            std::string d = std::to_string(mag_[i]);
            s += std::string(9 - d.size(), '0') + d;
        }
        return s;
    }

    long long to_ll() const {
        if (is_small_) return small_;
        long long v = 0;
        for (size_t i = mag_.size(); i-- > 0;) {
            if (v > (9223372036854775807LL - mag_[i]) / static_cast<long long>(kBase))
                throw std::overflow_error("BigInt: to_ll overflow");
            v = v * kBase + mag_[i];
        }
        return sign_ < 0 ? -v : v;
    }

private:
    static constexpr uint32_t kBase = 1000000000u;
    static constexpr long long kSmallMax = (1LL << 62) - 1;

    long long small_ = 0;
    bool is_small_ = true;
    int sign_ = 0;                // used only when !is_small_
    std::vector<uint32_t> mag_;   // little-endian base 10^9, only when !is_small_

    static bool fits(__int128 v) { return v <= kSmallMax && v >= -static_cast<__int128>(kSmallMax); }

    void make_big() {
        if (!is_small_) return;
        long long v = small_;
        is_small_ = false;
        sign_ = v < 0 ? -1 : (v > 0 ? 1 : 0);
        unsigned long long a = v < 0 ? -static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        mag_.clear();
        while (a) { mag_.push_back(static_cast<uint32_t>(a % kBase)); a /= kBase; }
    }
    BigInt widened() const {
        BigInt r = *this;
        r.make_big();
        return r;
    }
    void shrink() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
        // demote when the value fits inline again
        if (mag_.size() <= 3) {
            unsigned long long v = 0;
            bool ok = true;
            for (size_t i = mag_.size(); i-- > 0;) {
                if (v > (static_cast<unsigned long long>(kSmallMax) - mag_[i]) / kBase) { ok = false; break; }
                v = v * kBase + mag_[i];
            }
            if (ok) {
                long long sv = static_cast<long long>(v);
                small_ = sign_ < 0 ? -sv : sv;
                is_small_ = true;
                mag_.clear();
            }
        }
    }

    static int cmp(const BigInt& a0, const BigInt& b0) {
        BigInt a = a0.widened(), b = b0.widened();
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }

    static BigInt add_big(const BigInt& a0, const BigInt& b0) {
        BigInt a = a0.widened(), b = b0.widened(), r;
        r.is_small_ = false;
        if (a.sign_ == 0) return b0.is_small_ ? b0 : b;
        if (b.sign_ == 0) return a0.is_small_ ? a0 : a;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt(0);
            if (c > 0) { r.mag_ = sub_mag(a.mag_, b.mag_); r.sign_ = a.sign_; }
            else       { r.mag_ = sub_mag(b.mag_, a.mag_); r.sign_ = b.sign_; }
        }
        r.shrink();
        return r;
    }

    static BigInt mul_big(const BigInt& a0, const BigInt& b0) {
        BigInt a = a0.widened(), b = b0.widened(), r;
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt(0);
        r.is_small_ = false;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            size_t k = i + b.mag_.size();
            while (carry) {
                uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        r.sign_ = a.sign_ * b.sign_;
        r.shrink();
        return r;
    }

    static void divmod_big(const BigInt& a0, const BigInt& b0, BigInt& q, BigInt& r) {
        BigInt a = a0.widened(), b = b0.widened();
        if (cmp_mag(a.mag_, b.mag_) < 0) { q = BigInt(0); r = a0; return; }
        std::vector<uint32_t> qd(a.mag_.size(), 0);
        BigInt rem;
        rem.is_small_ = false;
        BigInt babs = b;
        babs.sign_ = 1;
        for (size_t i = a.mag_.size(); i-- > 0;) {
            rem.mag_.insert(rem.mag_.begin(), a.mag_[i]);
            while (!rem.mag_.empty() && rem.mag_.back() == 0) rem.mag_.pop_back();
            rem.sign_ = rem.mag_.empty() ? 0 : 1;
            uint32_t lo = 0, hi = kBase - 1, d = 0;
            while (lo <= hi) {
                uint32_t mid = lo + (hi - lo) / 2;
                if (cmp_mag(mul_small(babs.mag_, mid), rem.mag_) <= 0) { d = mid; lo = mid + 1; }
                else { if (mid == 0) break; hi = mid - 1; }
            }
            qd[i] = d;
            if (d) rem.mag_ = sub_mag(rem.mag_, mul_small(babs.mag_, d));
        }
        q = BigInt();
        q.is_small_ = false;
        q.mag_ = qd;
        q.sign_ = a.sign_ * b.sign_;
        q.shrink();
        if (q.is_zero()) q = BigInt(0);
        r = rem;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
        r.shrink();
    }

    static std::vector<uint32_t> mul_small(const std::vector<uint32_t>& a, uint32_t m) {
        std::vector<uint32_t> r;
        if (m == 0) return r;
        uint64_t carry = 0;
        for (uint32_t limb : a) {
            uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
            r.push_back(static_cast<uint32_t>(cur % kBase));
            carry = cur / kBase;
        }
        while (carry) { r.push_back(static_cast<uint32_t>(carry % kBase)); carry /= kBase; }
        return r;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r;
        uint64_t carry = 0;
        for (size_t i = 0; i < a.size() || i < b.size() || carry; ++i) {
            uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r.push_back(static_cast<uint32_t>(cur % kBase));
            carry = cur / kBase;
        }
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) { cur += kBase; borrow = 1; } else borrow = 0;
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

} // namespace qtheta
