#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "qtheta/alphabet.hpp"
#include "qtheta/rational.hpp"
#include "qtheta/ratfunc.hpp"

namespace qtheta {

// Scalar customization point: what "invert q" means for each coefficient
// field. Rationals are q-free, so the bar involution is the identity.
inline Rational scalar_qbar(const Rational& c) { return c; }
inline RatFuncQ scalar_qbar(const RatFuncQ& c) { return c.bar(); }

inline std::string scalar_str(const Rational& c) { return c.to_string(); }
inline std::string scalar_str(const RatFuncQ& c) { return c.to_string(); }

// Element of the free algebra over an alphabet: finite linear combination
// of words with field coefficients. Zero coefficients are never stored.
template <class K>
class NcElem {
public:
    NcElem() : alph_(nullptr) {}
    explicit NcElem(const Alphabet* a) : alph_(a) {}

    static NcElem one(const Alphabet* a) {
        NcElem r(a);
        r.terms_[Word{}] = K(1);
        return r;
    }
    static NcElem generator(const Alphabet* a, Gid g) {
        NcElem r(a);
        r.terms_[Word{g}] = K(1);
        return r;
    }
    static NcElem word(const Alphabet* a, const Word& w, const K& c = K(1)) {
        NcElem r(a);
        if (!c.is_zero()) r.terms_[w] = c;
        return r;
    }

    const Alphabet* alphabet() const { return alph_; }
    const std::map<Word, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Word& w, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) terms_[w] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend NcElem operator+(const NcElem& a, const NcElem& b) {
        NcElem r = a.check_same(b);
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend NcElem operator-(const NcElem& a, const NcElem& b) {
        NcElem r = a.check_same(b);
        for (const auto& [w, c] : b.terms_) r.add_term(w, K(0) - c);
        return r;
    }
    friend NcElem operator-(const NcElem& a) {
        NcElem r(a.alph_);
        for (const auto& [w, c] : a.terms_) r.terms_[w] = K(0) - c;
        return r;
    }
    friend NcElem operator*(const K& s, const NcElem& a) {
        NcElem r(a.alph_);
        if (s.is_zero()) return r;
        for (const auto& [w, c] : a.terms_) {
            K p = s * c;
            if (!p.is_zero()) r.terms_[w] = p;
        }
        return r;
    }
    // Concatenation product of the free algebra.
    friend NcElem operator*(const NcElem& a, const NcElem& b) {
        NcElem r = a.check_same(b);
        r.terms_.clear();
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(w, ca * cb);
            }
        return r;
    }
    NcElem& operator+=(const NcElem& o) { *this = *this + o; return *this; }
    NcElem& operator-=(const NcElem& o) { *this = *this - o; return *this; }
    NcElem& operator*=(const NcElem& o) { *this = *this * o; return *this; }

    friend bool operator==(const NcElem& a, const NcElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NcElem& a, const NcElem& b) { return !(a == b); }

    // Weight of a homogeneous element; throws on mixed weights.
    WeightVec weight() const {
        if (terms_.empty() || !alph_) throw std::domain_error("NcElem: weight of zero");
        WeightVec w = alph_->word_weight(terms_.begin()->first);
        for (const auto& [word, c] : terms_)
            if (alph_->word_weight(word) != w)
                throw std::domain_error("NcElem: element is not weight homogeneous");
        return w;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        WeightVec w = alph_->word_weight(terms_.begin()->first);
        for (const auto& [word, c] : terms_)
            if (alph_->word_weight(word) != w) return false;
        return true;
    }

    // The part of the element with the given weight.
    NcElem component(const WeightVec& w) const {
        NcElem r(alph_);
        for (const auto& [word, c] : terms_)
            if (alph_->word_weight(word) == w) r.terms_[word] = c;
        return r;
    }

    std::map<WeightVec, NcElem> components() const {
        std::map<WeightVec, NcElem> r;
        for (const auto& [word, c] : terms_) {
            WeightVec w = alph_->word_weight(word);
            auto it = r.find(w);
            if (it == r.end()) {
                NcElem e(alph_);
                e.terms_[word] = c;
                r.emplace(w, std::move(e));
            } else it->second.terms_[word] = c;
        }
        return r;
    }

    // Canonical text form: terms in word order, canonical scalars.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + scalar_str(c) + ")";
            if (!w.empty()) s += "*" + alph_->word_name(w);
        }
        return s;
    }

private:
    const Alphabet* alph_;
    std::map<Word, K> terms_;

    NcElem check_same(const NcElem& b) const {
        if (alph_ && b.alph_ && alph_ != b.alph_)
            throw std::invalid_argument("NcElem: alphabet mismatch");
        NcElem r = *this;
        if (!r.alph_) r.alph_ = b.alph_;
        return r;
    }
};

// nc_multiply is the plain concatenation product; named entry point kept
// alongside operator* for call sites that read better with a verb.
template <class K>
NcElem<K> nc_multiply(const NcElem<K>& a, const NcElem<K>& b) { return a * b; }

// q-commutator [a,b]_p = ab - p ba.
template <class K>
NcElem<K> q_commutator(const NcElem<K>& a, const NcElem<K>& b, const K& p) {
    return a * b - p * (b * a);
}
template <class K>
NcElem<K> commutator(const NcElem<K>& a, const NcElem<K>& b) {
    return q_commutator(a, b, K(1));
}

// Generator-wise algebra (or anti-algebra) morphism, optionally inverting q
// on scalars. Source and target alphabets may differ.
template <class K>
struct GeneratorMap {
    const Alphabet* source = nullptr;
    const Alphabet* target = nullptr;
    std::map<Gid, NcElem<K>> images;
    bool anti = false;      // false: multiplicative, true: anti-multiplicative
    bool invert_q = false;  // apply the bar involution to scalars

    NcElem<K> apply(const NcElem<K>& x) const {
        NcElem<K> r(target);
        for (const auto& [w, c] : x.terms()) {
            NcElem<K> prod = NcElem<K>::one(target);
            if (!anti) {
                for (Gid g : w) prod *= image_of(g);
            } else {
                for (size_t i = w.size(); i-- > 0;) prod *= image_of(w[i]);
            }
            K s = invert_q ? scalar_qbar(c) : c;
            r += s * prod;
        }
        return r;
    }

private:
    const NcElem<K>& image_of(Gid g) const {
        auto it = images.find(g);
        if (it == images.end())
            throw std::out_of_range("GeneratorMap: no image for generator " + source->name(g));
        return it->second;
    }
};

template <class K>
NcElem<K> apply_morphism(const NcElem<K>& x, const GeneratorMap<K>& f) { return f.apply(x); }

} // namespace qtheta
