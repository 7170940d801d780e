#pragma once

#include <stdexcept>
#include <string>

#include "qtheta/bigint.hpp"

namespace qtheta {

// Exact rational number. Always reduced, denominator always positive,
// zero stored as 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { canonicalize(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    static Rational pow(const Rational& a, int e) {
        if (e == 0) return Rational(1);
        if (e > 0) return Rational(BigInt::pow(a.num_, static_cast<unsigned>(e)),
                                   BigInt::pow(a.den_, static_cast<unsigned>(e)));
        return pow(a.inverse(), -e);
    }

    static Rational factorial(unsigned n) {
        BigInt r(1);
        for (unsigned k = 2; k <= n; ++k) r = r * BigInt(static_cast<long long>(k));
        return Rational(r);
    }

    // binom(x, k) for integer (possibly negative) x and k >= 0; exact.
    static Rational binomial(long long x, unsigned k) {
        Rational r(1);
        for (unsigned j = 0; j < k; ++j)
            r *= Rational(x - static_cast<long long>(j), static_cast<long long>(j) + 1);
        return r;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;

    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.sign() < 0) { num_ = -num_; den_ = -den_; }
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) { num_ = num_ / g; den_ = den_ / g; }
    }
};

} // namespace qtheta
