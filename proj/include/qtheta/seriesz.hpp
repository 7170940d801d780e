#pragma once

#include <functional>
#include <map>
#include <stdexcept>

#include "qtheta/commpoly.hpp"
#include "qtheta/rational.hpp"

namespace qtheta {

// Scaling of series coefficients by an exact rational.
inline Rational rational_scaled(const Rational& x, const Rational& r) { return x * r; }
inline RatFuncQ rational_scaled(const RatFuncQ& x, const Rational& r) {
    return x * RatFuncQ(LaurentQ(r));
}
inline CommPoly<Rational> rational_scaled(const CommPoly<Rational>& x, const Rational& r) {
    return CommPoly<Rational>(r) * x;
}
inline CommPoly<RatFuncQ> rational_scaled(const CommPoly<RatFuncQ>& x, const Rational& r) {
    return CommPoly<RatFuncQ>(RatFuncQ(LaurentQ(r))) * x;
}

// Truncated power series with coefficients C in one central variable:
// InvZ stores sum_d c_d z^{-d}, PlainZ stores sum_d c_d z^{d}, with
// d = 0..order in both cases. Products silently drop degrees beyond the
// truncation order.
enum class SeriesVar { InvZ, PlainZ };

template <class C>
class SeriesZ {
public:
    SeriesZ() : var_(SeriesVar::InvZ), order_(0) {}
    SeriesZ(SeriesVar v, int order) : var_(v), order_(order) {
        if (order < 0) throw std::invalid_argument("SeriesZ: negative order");
    }

    static SeriesZ constant(SeriesVar v, int order, const C& c) {
        SeriesZ s(v, order);
        s.set(0, c);
        return s;
    }
    static SeriesZ one(SeriesVar v, int order) { return constant(v, order, C(1)); }

    SeriesVar var() const { return var_; }
    int order() const { return order_; }
    const std::map<int, C>& coeffs() const { return coeffs_; }

    C coeff(int d) const {
        auto it = coeffs_.find(d);
        return it == coeffs_.end() ? C(0) : it->second;
    }
    void set(int d, const C& c) {
        if (d < 0 || d > order_) throw std::out_of_range("SeriesZ: degree out of range");
        if (c.is_zero()) coeffs_.erase(d);
        else coeffs_[d] = c;
    }
    void add(int d, const C& c) {
        if (d < 0) throw std::out_of_range("SeriesZ: negative degree");
        if (d > order_) return; // truncated away
        auto it = coeffs_.find(d);
        if (it == coeffs_.end()) {
            if (!c.is_zero()) coeffs_[d] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    bool is_zero() const { return coeffs_.empty(); }

    friend SeriesZ operator+(const SeriesZ& a, const SeriesZ& b) {
        SeriesZ r = a.check(b);
        for (const auto& [d, c] : b.coeffs_) r.add(d, c);
        return r;
    }
    friend SeriesZ operator-(const SeriesZ& a, const SeriesZ& b) {
        SeriesZ r = a.check(b);
        for (const auto& [d, c] : b.coeffs_) r.add(d, C(0) - c);
        return r;
    }
    friend SeriesZ operator-(const SeriesZ& a) {
        SeriesZ r(a.var_, a.order_);
        for (const auto& [d, c] : a.coeffs_) r.coeffs_[d] = C(0) - c;
        return r;
    }
    friend SeriesZ operator*(const SeriesZ& a, const SeriesZ& b) {
        SeriesZ r = a.check(b);
        r.coeffs_.clear();
        for (const auto& [da, ca] : a.coeffs_)
            for (const auto& [db, cb] : b.coeffs_) {
                if (da + db > a.order_) continue;
                r.add(da + db, ca * cb);
            }
        return r;
    }
    friend SeriesZ operator*(const C& s, const SeriesZ& a) {
        SeriesZ r(a.var_, a.order_);
        for (const auto& [d, c] : a.coeffs_) {
            C p = s * c;
            if (!p.is_zero()) r.coeffs_[d] = p;
        }
        return r;
    }
    SeriesZ& operator+=(const SeriesZ& o) { *this = *this + o; return *this; }
    SeriesZ& operator-=(const SeriesZ& o) { *this = *this - o; return *this; }
    SeriesZ& operator*=(const SeriesZ& o) { *this = *this * o; return *this; }

    friend bool operator==(const SeriesZ& a, const SeriesZ& b) {
        return a.var_ == b.var_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SeriesZ& a, const SeriesZ& b) { return !(a == b); }

    // log of a series with constant term 1.
    SeriesZ log() const {
        if (coeff(0) != C(1)) throw std::domain_error("SeriesZ: log needs constant term 1");
        SeriesZ u = *this;
        u.add(0, C(0) - C(1)); // valuation >= 1
        SeriesZ acc(var_, order_);
        SeriesZ pw = one(var_, order_);
        Rational sign(1);
        for (int k = 1; k <= order_; ++k) {
            pw = pw * u;
            if (pw.is_zero()) break;
            SeriesZ scaled(var_, order_);
            for (const auto& [d, c] : pw.coeffs_) scaled.add(d, rational_scaled(c, sign / Rational(k)));
            acc += scaled;
            sign = -sign;
        }
        return acc;
    }

    // exp of a series with zero constant term.
    SeriesZ exp() const {
        if (!coeff(0).is_zero()) throw std::domain_error("SeriesZ: exp needs zero constant term");
        SeriesZ acc = one(var_, order_);
        SeriesZ pw = one(var_, order_);
        Rational fact(1);
        for (int k = 1; k <= order_; ++k) {
            pw = pw * (*this);
            if (pw.is_zero()) break;
            fact *= Rational(k);
            SeriesZ scaled(var_, order_);
            for (const auto& [d, c] : pw.coeffs_) scaled.add(d, rational_scaled(c, fact.inverse()));
            acc += scaled;
        }
        return acc;
    }

    // multiplicative inverse of a series with constant term 1:
    // (1+u)^{-1} = sum (-u)^k.
    SeriesZ inverse() const {
        if (coeff(0) != C(1)) throw std::domain_error("SeriesZ: inverse needs constant term 1");
        SeriesZ u = *this;
        u.add(0, C(0) - C(1));
        SeriesZ acc = one(var_, order_);
        SeriesZ pw = one(var_, order_);
        for (int k = 1; k <= order_; ++k) {
            pw = pw * u;
            if (pw.is_zero()) break;
            acc += (k % 2 ? C(0) - C(1) : C(1)) * pw;
        }
        return acc;
    }

    std::string to_string(const std::function<std::string(const C&)>& coefstr) const {
        std::string zsym = var_ == SeriesVar::InvZ ? "z^-" : "z^";
        std::string s;
        bool first = true;
        for (const auto& [d, c] : coeffs_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + coefstr(c) + ")";
            if (d != 0) s += "*" + zsym + std::to_string(d);
        }
        return s.empty() ? "0" : s;
    }

private:
    SeriesVar var_;
    int order_;
    std::map<int, C> coeffs_;

    SeriesZ check(const SeriesZ& b) const {
        if (var_ != b.var_ || order_ != b.order_)
            throw std::invalid_argument("SeriesZ: variable/order mismatch");
        return *this;
    }
};

// Re-expansion z -> z + c for series in z^{-1}:
// (z+c)^{-k} = sum_j binom(-k, j) c^j z^{-k-j}, truncated at the order;
// the binomial coefficients are exact rationals.
template <class C>
SeriesZ<C> shift_series(const SeriesZ<C>& s, const Rational& c) {
    if (s.var() != SeriesVar::InvZ)
        throw std::invalid_argument("shift_series: defined for series in z^{-1}");
    SeriesZ<C> r(s.var(), s.order());
    for (const auto& [k, coef] : s.coeffs()) {
        if (k == 0) {
            r.add(0, coef);
            continue;
        }
        Rational cpow(1);
        for (int j = 0; k + j <= s.order(); ++j) {
            Rational b = Rational::binomial(-k, static_cast<unsigned>(j)) * cpow;
            if (!b.is_zero()) r.add(k + j, rational_scaled(coef, b));
            cpow *= c;
        }
    }
    return r;
}

} // namespace qtheta
