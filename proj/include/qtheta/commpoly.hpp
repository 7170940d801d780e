#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtheta/ncelem.hpp"

namespace qtheta {

// Monomial in commuting symbols: sorted (symbol, exponent) pairs.
using CMono = std::vector<std::pair<int, int>>;

// Polynomial in commuting symbols over the scalar field K. Symbols are
// integer keys; a SymbolTable provides names for printing.
template <class K>
class CommPoly {
public:
    CommPoly() = default;
    CommPoly(long long c) { if (c != 0) terms_[CMono{}] = K(c); }
    CommPoly(const K& c) { if (!c.is_zero()) terms_[CMono{}] = c; }

    static CommPoly symbol(int s) {
        CommPoly r;
        r.terms_[CMono{{s, 1}}] = K(1);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    const std::map<CMono, K>& terms() const { return terms_; }

    void add_term(const CMono& m, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) terms_[m] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend CommPoly operator+(const CommPoly& a, const CommPoly& b) {
        CommPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend CommPoly operator-(const CommPoly& a, const CommPoly& b) {
        CommPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, K(0) - c);
        return r;
    }
    friend CommPoly operator-(const CommPoly& a) {
        CommPoly r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = K(0) - c;
        return r;
    }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
        CommPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    friend CommPoly operator*(const K& s, const CommPoly& a) {
        CommPoly r;
        for (const auto& [m, c] : a.terms_) {
            K p = s * c;
            if (!p.is_zero()) r.terms_[m] = p;
        }
        return r;
    }
    CommPoly& operator+=(const CommPoly& o) { *this = *this + o; return *this; }
    CommPoly& operator-=(const CommPoly& o) { *this = *this - o; return *this; }
    CommPoly& operator*=(const CommPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }

    std::string to_string(const std::function<std::string(int)>& symname) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + scalar_str(c) + ")";
            for (const auto& [sym, exp] : m) {
                s += "*" + symname(sym);
                if (exp != 1) s += "^" + std::to_string(exp);
            }
        }
        return s;
    }

private:
    std::map<CMono, K> terms_;

    static CMono mono_mul(const CMono& a, const CMono& b) {
        CMono r;
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i].first < b[j].first) r.push_back(a[i++]);
            else if (a[i].first > b[j].first) r.push_back(b[j++]);
            else {
                r.emplace_back(a[i].first, a[i].second + b[j].second);
                ++i;
                ++j;
            }
        }
        while (i < a.size()) r.push_back(a[i++]);
        while (j < b.size()) r.push_back(b[j++]);
        return r;
    }
};

} // namespace qtheta
