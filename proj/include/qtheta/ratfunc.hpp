#pragma once

#include <stdexcept>
#include <string>

#include "qtheta/laurent.hpp"

namespace qtheta {

// Rational function in q, stored as a reduced fraction of Laurent
// polynomials. Canonical form: numerator and denominator coprime in Q[q]
// (after clearing powers of q), denominator with lowest exponent 0 and
// lowest coefficient exactly 1. Structural equality is then mathematical
// equality, which every verification below relies on.
class RatFuncQ {
public:
    RatFuncQ() : num_(), den_(1) {}
    RatFuncQ(long long c) : num_(c), den_(1) {}
    RatFuncQ(const Rational& c) : num_(c), den_(1) {}
    RatFuncQ(const LaurentQ& n) : num_(n), den_(1) {}
    RatFuncQ(const LaurentQ& n, const LaurentQ& d) : num_(n), den_(d) { canonicalize(); }

    static RatFuncQ q_power(int e) { return RatFuncQ(LaurentQ::q_power(e)); }

    const LaurentQ& num() const { return num_; }
    const LaurentQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
        return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) {
        return RatFuncQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
        if (a.is_zero() || b.is_zero()) return RatFuncQ();
        // cross-cancel first; keeps the final gcd near trivial
        LaurentQ g1 = LaurentQ::gcd(a.num_, b.den_);
        LaurentQ g2 = LaurentQ::gcd(b.num_, a.den_);
        LaurentQ n1 = g1.is_one() ? a.num_ : LaurentQ::divide_exact(a.num_, g1);
        LaurentQ d2 = g1.is_one() ? b.den_ : LaurentQ::divide_exact(b.den_, g1);
        LaurentQ n2 = g2.is_one() ? b.num_ : LaurentQ::divide_exact(b.num_, g2);
        LaurentQ d1 = g2.is_one() ? a.den_ : LaurentQ::divide_exact(a.den_, g2);
        return RatFuncQ(n1 * n2, d1 * d2);
    }
    friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
        if (b.is_zero()) throw std::domain_error("RatFuncQ: division by zero");
        return a * b.inverse();
    }
    friend RatFuncQ operator-(const RatFuncQ& a) { RatFuncQ r = a; r.num_ = -r.num_; return r; }

    RatFuncQ& operator+=(const RatFuncQ& o) { *this = *this + o; return *this; }
    RatFuncQ& operator-=(const RatFuncQ& o) { *this = *this - o; return *this; }
    RatFuncQ& operator*=(const RatFuncQ& o) { *this = *this * o; return *this; }
    RatFuncQ& operator/=(const RatFuncQ& o) { *this = *this / o; return *this; }

    RatFuncQ inverse() const {
        if (is_zero()) throw std::domain_error("RatFuncQ: inverse of zero");
        return RatFuncQ(den_, num_);
    }

    friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFuncQ& a, const RatFuncQ& b) { return !(a == b); }
    friend bool operator<(const RatFuncQ& a, const RatFuncQ& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    // q -> q^s on both numerator and denominator.
    RatFuncQ substitute_power(int s) const {
        return RatFuncQ(num_.substitute_power(s), den_.substitute_power(s));
    }
    RatFuncQ bar() const { return substitute_power(-1); }

    static RatFuncQ pow(const RatFuncQ& a, int e) {
        if (e == 0) return RatFuncQ(1);
        RatFuncQ base = e > 0 ? a : a.inverse();
        unsigned n = static_cast<unsigned>(e > 0 ? e : -e);
        RatFuncQ r(1);
        while (n) {
            if (n & 1u) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    LaurentQ num_, den_;

    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("RatFuncQ: zero denominator");
        if (num_.is_zero()) { den_ = LaurentQ(1); return; }
        LaurentQ g = LaurentQ::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = LaurentQ::divide_exact(num_, g);
            den_ = LaurentQ::divide_exact(den_, g);
        }
        // Clear powers of q: shift so the denominator starts at q^0, then
        // scale its lowest coefficient to 1.
        int shift = den_.min_exp();
        den_ = den_.shifted(-shift);
        num_ = num_.shifted(-shift);
        Rational lead = den_.terms().begin()->second;
        if (!lead.is_one()) {
            LaurentQ inv_lead(lead.inverse());
            den_ = den_ * inv_lead;
            num_ = num_ * inv_lead;
        }
    }
};

// Rebuild the canonical form from raw numerator/denominator data; the
// constructor canonicalizes, so this is idempotent by construction.
inline RatFuncQ rational_normalize(const RatFuncQ& x) { return RatFuncQ(x.num(), x.den()); }

} // namespace qtheta
