#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "qtheta/rational.hpp"

namespace qtheta {

// Laurent polynomial in q with exact rational coefficients.
// Zero coefficients are never stored, so the term map is canonical.
class LaurentQ {
public:
    LaurentQ() = default;
    LaurentQ(long long c) { if (c != 0) terms_[0] = Rational(c); }
    LaurentQ(const Rational& c) { if (!c.is_zero()) terms_[0] = c; }

    static LaurentQ monomial(const Rational& c, int exp) {
        LaurentQ r;
        if (!c.is_zero()) r.terms_[exp] = c;
        return r;
    }
    static LaurentQ q_power(int exp) { return monomial(Rational(1), exp); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one(); }
    const std::map<int, Rational>& terms() const { return terms_; }

    int min_exp() const {
        if (is_zero()) throw std::domain_error("LaurentQ: min_exp of zero");
        return terms_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw std::domain_error("LaurentQ: max_exp of zero");
        return terms_.rbegin()->first;
    }

    Rational coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend LaurentQ operator+(const LaurentQ& a, const LaurentQ& b) {
        LaurentQ r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend LaurentQ operator-(const LaurentQ& a, const LaurentQ& b) {
        LaurentQ r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend LaurentQ operator-(const LaurentQ& a) {
        LaurentQ r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
        LaurentQ r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentQ& operator+=(const LaurentQ& o) { *this = *this + o; return *this; }
    LaurentQ& operator-=(const LaurentQ& o) { *this = *this - o; return *this; }
    LaurentQ& operator*=(const LaurentQ& o) { *this = *this * o; return *this; }

    friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentQ& a, const LaurentQ& b) { return !(a == b); }
    friend bool operator<(const LaurentQ& a, const LaurentQ& b) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return ib != b.terms_.end();
    }

    // q -> q^s (s may be negative; s = -1 is the bar involution on q-powers).
    LaurentQ substitute_power(int s) const {
        if (s == 0) throw std::invalid_argument("LaurentQ: q -> q^0 is not a substitution");
        LaurentQ r;
        for (const auto& [e, c] : terms_) r.add_term(e * s, c);
        return r;
    }
    LaurentQ bar() const { return substitute_power(-1); }

    // Formal substitution q = 1 (sum of coefficients).
    Rational eval_at_one() const {
        Rational s(0);
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    // Exact division; throws if the remainder is nonzero.
    static LaurentQ divide_exact(const LaurentQ& a, const LaurentQ& b) {
        LaurentQ q, r;
        divmod(a, b, q, r);
        if (!r.is_zero()) throw std::domain_error("LaurentQ: inexact division");
        return q;
    }

    // Division with remainder, with exponents treated as a polynomial in q
    // after factoring out the smallest power of q from each operand.
    static void divmod(const LaurentQ& a, const LaurentQ& b, LaurentQ& quot, LaurentQ& rem) {
        if (b.is_zero()) throw std::domain_error("LaurentQ: division by zero");
        if (a.is_zero()) { quot = LaurentQ(); rem = LaurentQ(); return; }
        int sa = a.min_exp(), sb = b.min_exp();
        LaurentQ A = a.shifted(-sa), B = b.shifted(-sb);
        LaurentQ Q;
        while (!A.is_zero() && A.max_exp() >= B.max_exp()) {
            int e = A.max_exp() - B.max_exp();
            Rational c = A.terms_.rbegin()->second / B.terms_.rbegin()->second;
            LaurentQ t = monomial(c, e);
            Q += t;
            A -= t * B;
        }
        quot = Q.shifted(sa - sb);
        rem = A.shifted(sa);
    }

    // gcd as polynomials in q, up to the usual unit ambiguity; the result is
    // normalized to have lowest exponent 0 and leading (lowest) coefficient 1.
    // Computed with integer primitive-part pseudo-remainders, which keeps the
    // coefficient growth polynomial instead of the exponential blowup of
    // monic Euclid over Q.
    static LaurentQ gcd(const LaurentQ& a, const LaurentQ& b) {
        if (a.is_zero()) return b.is_zero() ? LaurentQ() : b.unit_normalized();
        if (b.is_zero()) return a.unit_normalized();
        std::vector<BigInt> A = dense_int(a), B = dense_int(b);
        if (A.size() < B.size()) std::swap(A, B);
        while (!B.empty()) {
            std::vector<BigInt> R = pseudo_rem(A, B);
            strip_content(R);
            A = std::move(B);
            B = std::move(R);
        }
        LaurentQ g;
        for (size_t i = 0; i < A.size(); ++i)
            if (!A[i].is_zero()) g.terms_[static_cast<int>(i)] = Rational(A[i]);
        return g.unit_normalized();
    }

    // Shift all exponents by k (multiply by q^k).
    LaurentQ shifted(int k) const {
        LaurentQ r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    // Multiply by q^{-min_exp} and scale so the lowest coefficient is 1.
    LaurentQ unit_normalized() const {
        if (is_zero()) return LaurentQ();
        LaurentQ r = shifted(-min_exp());
        Rational lead = r.terms_.begin()->second;
        LaurentQ s;
        for (const auto& [e, c] : r.terms_) s.terms_[e] = c / lead;
        return s;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string piece;
            Rational ac = c.sign() < 0 ? -c : c;
            if (e == 0) piece = ac.to_string();
            else {
                std::string qs = (e == 1) ? "q" : "q^" + std::to_string(e);
                piece = ac.is_one() ? qs : ac.to_string() + "*" + qs;
            }
            if (first) { s += (c.sign() < 0 ? "-" : "") + piece; first = false; }
            else s += (c.sign() < 0 ? " - " : " + ") + piece;
        }
        return s;
    }

private:
    std::map<int, Rational> terms_;

    void add_term(int e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // dense primitive integer coefficients after shifting the lowest
    // exponent to zero (units of the Laurent ring do not affect the gcd)
    static std::vector<BigInt> dense_int(const LaurentQ& p) {
        int lo = p.min_exp(), hi = p.max_exp();
        BigInt lcm(1);
        for (const auto& [e, c] : p.terms_) {
            BigInt g = BigInt::gcd(lcm, c.den());
            lcm = lcm / g * c.den();
        }
        std::vector<BigInt> v(hi - lo + 1, BigInt(0));
        for (const auto& [e, c] : p.terms_) v[e - lo] = c.num() * (lcm / c.den());
        std::vector<BigInt> w = v;
        strip_content(w);
        return w;
    }

    static void strip_content(std::vector<BigInt>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
        if (v.empty()) return;
        BigInt g(0);
        for (const auto& c : v) g = BigInt::gcd(g, c);
        if (!g.is_one())
            for (auto& c : v) c = c / g;
        if (v.back().sign() < 0)
            for (auto& c : v) c = -c;
    }

    // lc(B)^(degA-degB+1) * A mod B over the integers
    static std::vector<BigInt> pseudo_rem(std::vector<BigInt> A, const std::vector<BigInt>& B) {
        int da = static_cast<int>(A.size()) - 1, db = static_cast<int>(B.size()) - 1;
        const BigInt& lb = B.back();
        for (int k = da; k >= db; --k) {
            BigInt top = A[k];
            for (int i = 0; i <= k; ++i) A[i] = A[i] * lb;
            if (!top.is_zero())
                for (int i = 0; i <= db; ++i) A[k - db + i] = A[k - db + i] - top * B[i];
            A.pop_back();
        }
        while (!A.empty() && A.back().is_zero()) A.pop_back();
        return A;
    }
};

} // namespace qtheta
