#pragma once

#include <map>
#include <stdexcept>
#include <tuple>

#include "qtheta/qnum.hpp"
#include "qtheta/rewrite.hpp"

namespace qtheta {

// Key of one tensor term: pair of words with an integer z-degree attached.
// The z-degree is plain bookkeeping for the central variable z; it never
// takes part in rewriting.
struct TensKey {
    Word left;
    Word right;
    int zdeg = 0;
    friend bool operator<(const TensKey& a, const TensKey& b) {
        if (a.left != b.left) return a.left < b.left;
        if (a.right != b.right) return a.right < b.right;
        return a.zdeg < b.zdeg;
    }
    friend bool operator==(const TensKey& a, const TensKey& b) {
        return a.left == b.left && a.right == b.right && a.zdeg == b.zdeg;
    }
};

// Graded linear combination of word (x) word terms, truncated by the height
// of the right-hand weight. This realizes the completed tensor products in
// which the Theta series live: any term whose right weight exceeds the
// height cap is silently dropped by the algebra operations.
template <class K>
class TensorElem {
public:
    TensorElem() : alph_(nullptr), height_cap_(0) {}
    TensorElem(const Alphabet* a, int height_cap) : alph_(a), height_cap_(height_cap) {}

    static TensorElem one(const Alphabet* a, int cap) {
        TensorElem r(a, cap);
        r.terms_[TensKey{}] = K(1);
        return r;
    }
    static TensorElem simple(const NcElem<K>& l, const NcElem<K>& r, int cap, int zdeg = 0) {
        TensorElem t(l.alphabet() ? l.alphabet() : r.alphabet(), cap);
        for (const auto& [wl, cl] : l.terms())
            for (const auto& [wr, cr] : r.terms())
                t.add_term(TensKey{wl, wr, zdeg}, cl * cr);
        return t;
    }

    const Alphabet* alphabet() const { return alph_; }
    int height_cap() const { return height_cap_; }
    const std::map<TensKey, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const TensKey& k, const K& c) {
        if (c.is_zero()) return;
        if (weight_height(alph_->word_weight(k.right)) > height_cap_) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) terms_[k] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend TensorElem operator+(const TensorElem& a, const TensorElem& b) {
        TensorElem r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }
    friend TensorElem operator-(const TensorElem& a, const TensorElem& b) {
        TensorElem r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, K(0) - c);
        return r;
    }
    friend TensorElem operator-(const TensorElem& a) {
        TensorElem r(a.alph_, a.height_cap_);
        for (const auto& [k, c] : a.terms_) r.terms_[k] = K(0) - c;
        return r;
    }
    friend TensorElem operator*(const K& s, const TensorElem& a) {
        TensorElem r(a.alph_, a.height_cap_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : a.terms_) {
            K p = s * c;
            if (!p.is_zero()) r.terms_[k] = p;
        }
        return r;
    }
    friend TensorElem operator*(const TensorElem& a, const TensorElem& b) {
        TensorElem r(a.alph_, a.height_cap_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                TensKey k;
                k.left = ka.left;
                k.left.insert(k.left.end(), kb.left.begin(), kb.left.end());
                k.right = ka.right;
                k.right.insert(k.right.end(), kb.right.begin(), kb.right.end());
                k.zdeg = ka.zdeg + kb.zdeg;
                r.add_term(k, ca * cb);
            }
        return r;
    }
    TensorElem& operator+=(const TensorElem& o) { *this = *this + o; return *this; }
    TensorElem& operator-=(const TensorElem& o) { *this = *this - o; return *this; }
    TensorElem& operator*=(const TensorElem& o) { *this = *this * o; return *this; }

    friend bool operator==(const TensorElem& a, const TensorElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TensorElem& a, const TensorElem& b) { return !(a == b); }

    // Reduce every word on both sides to rewriting normal form.
    TensorElem reduced(const RelationSet<K>& rules) const {
        TensorElem r(alph_, height_cap_);
        for (const auto& [k, c] : terms_) {
            NcElem<K> l = reduce_pbw(NcElem<K>::word(alph_, k.left), rules);
            NcElem<K> rt = reduce_pbw(NcElem<K>::word(alph_, k.right), rules);
            for (const auto& [wl, cl] : l.terms())
                for (const auto& [wr, cr] : rt.terms())
                    r.add_term(TensKey{wl, wr, k.zdeg}, c * cl * cr);
        }
        return r;
    }

    // Commutator with an element presented as a tensor, reduced afterwards.
    TensorElem commutator_with(const TensorElem& a, const RelationSet<K>& rules) const {
        return (a * (*this) - (*this) * a).reduced(rules);
    }

    // Component of fixed (right weight, z-degree), for residual reporting.
    std::map<std::pair<WeightVec, int>, TensorElem> components_by_right_weight() const {
        std::map<std::pair<WeightVec, int>, TensorElem> out;
        for (const auto& [k, c] : terms_) {
            auto key = std::make_pair(alph_->word_weight(k.right), k.zdeg);
            auto it = out.find(key);
            if (it == out.end()) {
                TensorElem t(alph_, height_cap_);
                t.terms_[k] = c;
                out.emplace(key, std::move(t));
            } else it->second.terms_[k] = c;
        }
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + scalar_str(c) + ")*" + alph_->word_name(k.left) + " (x) " + alph_->word_name(k.right);
            if (k.zdeg != 0) s += " z^" + std::to_string(k.zdeg);
        }
        return s;
    }

private:
    const Alphabet* alph_;
    int height_cap_;
    std::map<TensKey, K> terms_;
};

enum class ExpFlavor { Classical, QDeformed };

namespace detail {
inline Rational exp_factorial_inv(ExpFlavor f, int k, const Rational&) {
    if (f == ExpFlavor::QDeformed)
        throw std::invalid_argument("exponential: q-exponential needs q-valued scalars");
    return Rational::factorial(static_cast<unsigned>(k)).inverse();
}
inline RatFuncQ exp_factorial_inv(ExpFlavor f, int k, const RatFuncQ&) {
    if (f == ExpFlavor::QDeformed) return RatFuncQ(q_paren_factorial(k)).inverse();
    return RatFuncQ(Rational::factorial(static_cast<unsigned>(k)).inverse());
}
} // namespace detail

// exp(x) resp. exp_q(x) = sum_k x^k / k! resp. x^k / (k)_q!, truncated by the
// height cap of x. Every term of x must raise the right-hand height, so the
// series is exact in each graded component; a power cap may be supplied
// instead for arguments with height-zero terms.
template <class K>
TensorElem<K> exponential(const TensorElem<K>& x, ExpFlavor flavor, int power_cap = -1) {
    if (power_cap < 0) {
        for (const auto& [k, c] : x.terms())
            if (weight_height(x.alphabet()->word_weight(k.right)) <= 0)
                throw std::domain_error(
                    "exponential: term of non-positive height needs an explicit power cap");
        power_cap = x.height_cap();
    }
    TensorElem<K> sum = TensorElem<K>::one(x.alphabet(), x.height_cap());
    TensorElem<K> pw = sum;
    for (int k = 1; k <= power_cap; ++k) {
        pw = pw * x;
        if (pw.is_zero()) break;
        K inv_fact = detail::exp_factorial_inv(flavor, k, K(0));
        sum += inv_fact * pw;
    }
    return sum;
}

// exp for plain algebra elements with an explicit power cap.
template <class K>
NcElem<K> exponential(const NcElem<K>& x, ExpFlavor flavor, int power_cap) {
    NcElem<K> sum = NcElem<K>::one(x.alphabet());
    NcElem<K> pw = sum;
    for (int k = 1; k <= power_cap; ++k) {
        pw = pw * x;
        if (pw.is_zero()) break;
        K inv_fact = detail::exp_factorial_inv(flavor, k, K(0));
        sum += inv_fact * pw;
    }
    return sum;
}

} // namespace qtheta
