#pragma once

#include <array>
#include <memory>
#include <sstream>

#include "qtheta/ideal.hpp"
#include "qtheta/qnum.hpp"
#include "qtheta/report.hpp"
#include "qtheta/tensorelem.hpp"

namespace qtheta {
namespace qaff {

using El = NcElem<RatFuncQ>;

// Real affine roots of the rank-2 affine algebra, written over
// (alpha_0, alpha_1, alpha_2); delta = alpha_0 + alpha_1 + alpha_2.
using AffRoot = std::array<int, 3>;

inline int affine_cartan(int i, int j) { return i == j ? 2 : -1; }

inline AffRoot affine_reflect(int i, const AffRoot& v) {
    int pair = 0;
    for (int j = 0; j < 3; ++j) pair += affine_cartan(i, j) * v[j];
    AffRoot r = v;
    r[i] -= pair;
    return r;
}

inline AffRoot simple_root(int i) {
    AffRoot r{0, 0, 0};
    r[i] = 1;
    return r;
}

// The Drinfeld-Jimbo presentation of U_q(sl_3^) on the alphabet
//   F0 < F1 < F2 < K1 < K1^-1 < K2 < K2^-1 < E0 < E1 < E2,
// with K0 eliminated through K0 K1 K2 = 1. The oriented rules (K-moves,
// K-cancellation, E-F crossings) are exactly the triangular-decomposition
// rewriting: every element has a normal form F...F K...K E...E, and an
// element is zero in the algebra iff its normal form lies blockwise in the
// two quantum Serre ideals. That last test is exact linear algebra on
// length- and weight-graded blocks, because the Serre ideals are generated
// in degree three of the free block algebras.
class QAffine {
public:
    QAffine() : alph_(2) {
        for (int i = 0; i < 3; ++i) F_[i] = alph_.add("F" + std::to_string(i), fweight(i));
        K_[0] = alph_.add("K1", weight_zero(2));
        Ki_[0] = alph_.add("K1^-1", weight_zero(2));
        K_[1] = alph_.add("K2", weight_zero(2));
        Ki_[1] = alph_.add("K2^-1", weight_zero(2));
        for (int i = 0; i < 3; ++i) E_[i] = alph_.add("E" + std::to_string(i), eweight(i));
        build_rules();
        build_morphisms();
    }
    QAffine(const QAffine&) = delete;
    QAffine& operator=(const QAffine&) = delete;

    const Alphabet* alphabet() const { return &alph_; }
    const RelationSet<RatFuncQ>& triangular_rules() const { return tri_; }
    const std::vector<El>& serre_generators() const { return serre_; }

    Gid Eg(int i) const { return E_.at(i); }
    Gid Fg(int i) const { return F_.at(i); }
    Gid Kg(int i) const { return K_.at(i - 1); }   // i in {1,2}
    Gid Kig(int i) const { return Ki_.at(i - 1); } // i in {1,2}

    El E(int i) const { return El::generator(&alph_, E_.at(i)); }
    El F(int i) const { return El::generator(&alph_, F_.at(i)); }
    El K(int i) const { return El::generator(&alph_, K_.at(i - 1)); }
    El Kinv(int i) const { return El::generator(&alph_, Ki_.at(i - 1)); }
    // K0 = (K1 K2)^{-1} and its inverse, as words.
    El K0() const { return Kinv(1) * Kinv(2); }
    El K0inv() const { return K(1) * K(2); }
    El one() const { return El::one(&alph_); }

    // --- equality modulo the defining ideal --------------------------------

    El triangularize(const El& x) const { return reduce_pbw(x, tri_); }

    // Faithful coordinates of x on the triangular decomposition
    // U^- (x) U^0 (x) U^+: the triangular normal form, with each pure block
    // reduced modulo the quantum Serre ideal of the free block algebra. Two
    // elements are equal in U_q(sl_3^) iff their coordinates agree, because
    // the Serre ideals are generated in degree three of the length-graded
    // free algebras, making every block reduction a closed-form span.
    using Coord = std::tuple<Word, Word, Word>; // (F residue word, K word, E residue word)
    std::map<Coord, RatFuncQ> coords(const El& x) const {
        El t = triangularize(x);
        std::map<Coord, RatFuncQ> acc;
        for (const auto& [w, c] : t.terms()) {
            Word fw, kw, ew;
            split_word(w, fw, kw, ew);
            const auto& rf = block_residue(fw, /*f_side=*/true);
            const auto& re = block_residue(ew, /*f_side=*/false);
            for (const auto& [wf, cf] : rf)
                for (const auto& [we, ce] : re) {
                    Coord key{wf, kw, we};
                    auto it = acc.find(key);
                    RatFuncQ v = c * cf * ce;
                    if (it == acc.end()) {
                        if (!v.is_zero()) acc.emplace(std::move(key), v);
                    } else {
                        it->second += v;
                        if (it->second.is_zero()) acc.erase(it);
                    }
                }
        }
        return acc;
    }

    // Exact zero test in U_q(sl_3^): decides, not semi-decides.
    bool is_zero(const El& x) const { return coords(x).empty(); }
    bool equal(const El& a, const El& b) const { return is_zero(a - b); }

    // --- automorphisms ------------------------------------------------------

    const GeneratorMap<RatFuncQ>& Phi() const { return phi_; }
    const GeneratorMap<RatFuncQ>& Omega() const { return omega_; }
    const GeneratorMap<RatFuncQ>& Psi() const { return psi_; }

    // Braid operators T_i and their inverses T_i^{-1} = Phi T_i Phi.
    El braid(int i, const El& x) const { return braid_[i].apply(x); }
    El braid_inv(int i, const El& x) const { return phi_.apply(braid_[i].apply(phi_.apply(x))); }

    // --- Damiani root sequence ----------------------------------------------

    // iota is the period-8 sequence (0,1,2,1,0,1,2,1) on all of Z, read so
    // that iota(1..8) = 0,1,2,1,0,1,2,1.
    static int iota(long k) {
        static const int by_pos[8] = {0, 1, 2, 1, 0, 1, 2, 1};
        return by_pos[((k - 1) % 8 + 8) % 8];
    }

    static AffRoot damiani_root(long k) {
        AffRoot v = simple_root(iota(k));
        if (k >= 1)
            for (long j = k - 1; j >= 1; --j) v = affine_reflect(iota(j), v);
        else
            for (long j = k + 1; j <= 0; ++j) v = affine_reflect(iota(j), v);
        return v;
    }

    // E_{beta_k} through the braid words; F_{beta_k} = Omega(E_{beta_k}).
    El root_vector(long k) const {
        if (k >= 1) {
            El x = E(iota(k));
            for (long j = k - 1; j >= 1; --j) x = braid(iota(j), x);
            return x;
        }
        El x = E(iota(k));
        for (long j = k + 1; j <= 0; ++j) x = braid_inv(iota(j), x);
        return x;
    }
    El root_vector_F(long k) const { return omega_.apply(root_vector(k)); }

    // --- Beck dictionary window ---------------------------------------------
    // Images of the Drinfeld-current generators with |mode| <= 1 as
    // Drinfeld-Jimbo words; the node-2 entries at mode +-1 carry the sign
    // (-1)^s of the diagram swap psi.

    El xplus(int i, int m) const {
        RatFuncQ q = RatFuncQ::q_power(1);
        if (m == 0) return E(i);
        if (i == 1 && m == -1) return q_commutator(F(2), F(0), q) * Kinv(1);
        if (i == 2 && m == -1) return RatFuncQ(-1) * (q_commutator(F(1), F(0), q) * Kinv(2));
        throw std::out_of_range("xplus: outside the dictionary window");
    }
    El xminus(int i, int m) const {
        RatFuncQ qi = RatFuncQ::q_power(-1);
        if (m == 0) return F(i);
        if (i == 1 && m == 1) return K(1) * q_commutator(E(0), E(2), qi);
        if (i == 2 && m == 1) return RatFuncQ(-1) * (K(2) * q_commutator(E(0), E(1), qi));
        throw std::out_of_range("xminus: outside the dictionary window");
    }
    El phi_plus(int i, int m) const {
        if (m == 0) return K(i);
        if (m == 1) {
            RatFuncQ qmq = RatFuncQ::q_power(1) - RatFuncQ::q_power(-1);
            return qmq * commutator(xplus(i, 0), xminus(i, 1));
        }
        throw std::out_of_range("phi_plus: outside the dictionary window");
    }
    El phi_minus(int i, int m) const {
        if (m == 0) return Kinv(i);
        if (m == -1) {
            RatFuncQ qimq = RatFuncQ::q_power(-1) - RatFuncQ::q_power(1);
            return qimq * commutator(xplus(i, -1), xminus(i, 0));
        }
        throw std::out_of_range("phi_minus: outside the dictionary window");
    }

private:
    Alphabet alph_;
    std::array<Gid, 3> F_{}, E_{};
    std::array<Gid, 2> K_{}, Ki_{};
    RelationSet<RatFuncQ> tri_;
    std::vector<El> serre_;
    GeneratorMap<RatFuncQ> phi_, omega_, psi_;
    std::array<GeneratorMap<RatFuncQ>, 3> braid_;

    // residue-coordinate caches, keyed by (length, weight)
    mutable std::map<std::pair<int, WeightVec>, std::map<Word, std::map<Word, RatFuncQ>>> fcache_,
        ecache_;

    WeightVec eweight(int i) const {
        if (i == 1) return {1, 0};
        if (i == 2) return {0, 1};
        return {-1, -1}; // E0 lowers by the highest root
    }
    WeightVec fweight(int i) const { return -eweight(i); }

    bool is_f(Gid g) const { return g == F_[0] || g == F_[1] || g == F_[2]; }
    bool is_e(Gid g) const { return g == E_[0] || g == E_[1] || g == E_[2]; }

    void split_word(const Word& w, Word& fw, Word& kw, Word& ew) const {
        for (Gid g : w) {
            if (is_f(g)) fw.push_back(g);
            else if (is_e(g)) ew.push_back(g);
            else kw.push_back(g);
        }
    }

    // K-move exponent: K_i x = q^{pair} x K_i for a letter x of weight wt.
    int pairing(int i, const WeightVec& wt) const { // i in {1,2}
        return cartan_entry_A(2, i - 1, 0) * wt[0] + cartan_entry_A(2, i - 1, 1) * wt[1];
    }

    void build_rules() {
        tri_.alph = &alph_;
        tri_.partial = true;
        RatFuncQ q = RatFuncQ::q_power(1);
        RatFuncQ qmqi = RatFuncQ::q_power(1) - RatFuncQ::q_power(-1);

        // K cancellation (fires regardless of order)
        for (int i = 1; i <= 2; ++i) {
            tri_.add_forced(Kg(i), Kig(i), one());
            tri_.add_forced(Kig(i), Kg(i), one());
        }
        // K sorting among themselves (all commute)
        std::array<Gid, 4> ks = {K_[0], Ki_[0], K_[1], Ki_[1]};
        for (Gid a : ks)
            for (Gid b : ks)
                if (a > b) tri_.add_swap(a, b, El::word(&alph_, Word{b, a}));
        // K past F (K-letters > F-letters): K_i^{e} F_j -> q^{-e c_{ij}} F_j K_i^{e}
        for (int i = 1; i <= 2; ++i)
            for (int j = 0; j < 3; ++j) {
                int p = pairing(i, fweight(j));
                tri_.add_swap(Kg(i), Fg(j),
                              RatFuncQ::q_power(p) * El::word(&alph_, Word{Fg(j), Kg(i)}));
                tri_.add_swap(Kig(i), Fg(j),
                              RatFuncQ::q_power(-p) * El::word(&alph_, Word{Fg(j), Kig(i)}));
            }
        // E past K: E_j K_i^{e} -> q^{-e pairing} K_i^{e} E_j
        for (int i = 1; i <= 2; ++i)
            for (int j = 0; j < 3; ++j) {
                int p = pairing(i, eweight(j));
                tri_.add_swap(Eg(j), Kg(i),
                              RatFuncQ::q_power(-p) * El::word(&alph_, Word{Kg(i), Eg(j)}));
                tri_.add_swap(Eg(j), Kig(i),
                              RatFuncQ::q_power(p) * El::word(&alph_, Word{Kig(i), Eg(j)}));
            }
        // E-F crossing: E_i F_j = F_j E_i + delta_ij (K_i - K_i^{-1})/(q-q^{-1})
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                El target = El::word(&alph_, Word{Fg(j), Eg(i)});
                if (i == j) {
                    El kdiff = (i == 0) ? K0() - K0inv() : K(i) - Kinv(i);
                    target += RatFuncQ(1) / qmqi * kdiff;
                }
                tri_.add_swap(Eg(i), Fg(j), target);
            }
        // quantum Serre ideal generators (all c_{ij} = -1 in the affine
        // rank-2 diagram): X_i^2 X_j - [2] X_i X_j X_i + X_j X_i^2
        RatFuncQ two(q_bracket(2));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                serre_.push_back(E(i) * E(i) * E(j) - two * (E(i) * E(j) * E(i)) + E(j) * E(i) * E(i));
                serre_.push_back(F(i) * F(i) * F(j) - two * (F(i) * F(j) * F(i)) + F(j) * F(i) * F(i));
            }
        tri_.ideal_generators = serre_;
    }

    void build_morphisms() {
        auto setup = [&](GeneratorMap<RatFuncQ>& m) {
            m.source = m.target = &alph_;
        };
        setup(phi_);
        phi_.invert_q = true;
        setup(omega_);
        omega_.anti = true;
        omega_.invert_q = true;
        setup(psi_);
        for (int i = 0; i < 3; ++i) {
            phi_.images[Eg(i)] = F(i);
            phi_.images[Fg(i)] = E(i);
            omega_.images[Eg(i)] = F(i);
            omega_.images[Fg(i)] = E(i);
            int pi = (i == 0) ? 0 : 3 - i; // psi swaps nodes 1 and 2
            psi_.images[Eg(i)] = E(pi);
            psi_.images[Fg(i)] = F(pi);
        }
        for (int i = 1; i <= 2; ++i) {
            phi_.images[Kg(i)] = K(i);
            phi_.images[Kig(i)] = Kinv(i);
            omega_.images[Kg(i)] = Kinv(i);
            omega_.images[Kig(i)] = K(i);
            psi_.images[Kg(i)] = K(3 - i);
            psi_.images[Kig(i)] = Kinv(3 - i);
        }

        RatFuncQ q = RatFuncQ::q_power(1), qi = RatFuncQ::q_power(-1);
        for (int i = 0; i < 3; ++i) {
            auto& t = braid_[i];
            setup(t);
            for (int j = 0; j < 3; ++j) {
                if (i == j) {
                    t.images[Eg(i)] = RatFuncQ(-1) * (F(i) * braid_K(i));
                    t.images[Fg(i)] = RatFuncQ(-1) * (braid_Kinv(i) * E(i));
                } else {
                    t.images[Eg(j)] = qi * (E(j) * E(i)) - E(i) * E(j);
                    t.images[Fg(j)] = q * (F(i) * F(j)) - F(j) * F(i);
                }
            }
            // K images by the reflection on the K-exponent lattice
            for (int l = 1; l <= 2; ++l) {
                t.images[Kg(l)] = k_word(affine_reflect(i, k_root(l)));
                t.images[Kig(l)] = k_word(affine_reflect(i, neg(k_root(l))));
            }
        }
    }

    static AffRoot neg(const AffRoot& v) { return {-v[0], -v[1], -v[2]}; }
    static AffRoot k_root(int l) { return simple_root(l); } // alpha_l for l=1,2

    // K_i (i = 0,1,2) as words in K1,K2 with K0 eliminated
    El k_letter(int i, int e) const {
        if (i == 0) return e > 0 ? K0() : K0inv();
        return e > 0 ? K(i) : Kinv(i);
    }
    El braid_K(int i) const { return k_letter(i, +1); }
    El braid_Kinv(int i) const { return k_letter(i, -1); }

    // K_{beta} for beta over (alpha_0, alpha_1, alpha_2): eliminate K0.
    El k_word(const AffRoot& v) const {
        // exponents of K1, K2 after K0 = K1^{-1} K2^{-1}
        int e1 = v[1] - v[0];
        int e2 = v[2] - v[0];
        El r = one();
        for (int t = 0; t < std::abs(e1); ++t) r = r * (e1 > 0 ? K(1) : Kinv(1));
        for (int t = 0; t < std::abs(e2); ++t) r = r * (e2 > 0 ? K(2) : Kinv(2));
        return r;
    }

    // residue coordinates of a pure-block word modulo the block Serre ideal
    const std::map<Word, RatFuncQ>& block_residue(const Word& w, bool f_side) const {
        auto& cache = f_side ? fcache_ : ecache_;
        auto key = std::make_pair(static_cast<int>(w.size()), alph_.word_weight(w));
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, build_block(key, f_side)).first;
        auto found = it->second.find(w);
        if (found == it->second.end())
            throw std::logic_error("QAffine: block table is missing a word");
        return found->second;
    }

    std::map<Word, std::map<Word, RatFuncQ>> build_block(const std::pair<int, WeightVec>& key,
                                                         bool f_side) const {
        const auto& [len, wt] = key;
        std::vector<Gid> letters;
        for (int i = 0; i < 3; ++i) letters.push_back(f_side ? Fg(i) : Eg(i));
        // all block words of this length and weight
        std::vector<Word> words;
        Word acc;
        std::function<void(int, WeightVec)> rec = [&](int rest, WeightVec need) {
            if (rest == 0) {
                if (need == weight_zero(2)) words.push_back(acc);
                return;
            }
            for (Gid g : letters) {
                acc.push_back(g);
                rec(rest - 1, need - alph_.weight(g));
                acc.pop_back();
            }
        };
        rec(len, wt);

        // echelon of the degree-graded Serre span: u S v with |u|+3+|v| = len
        WordRowSpace<RatFuncQ> span;
        if (len >= 3) {
            std::function<void(int, Word&, std::vector<Word>&)> gen = [&](int rest, Word& a,
                                                                          std::vector<Word>& out) {
                if (rest == 0) {
                    out.push_back(a);
                    return;
                }
                for (Gid g : letters) {
                    a.push_back(g);
                    gen(rest - 1, a, out);
                    a.pop_back();
                }
            };
            for (const auto& s : serre_) {
                // restrict to generators of the right block
                bool block_ok = true;
                for (const auto& [w, c] : s.terms())
                    for (Gid g : w)
                        if (f_side ? !is_f(g) : !is_e(g)) block_ok = false;
                if (!block_ok) continue;
                for (int lu = 0; lu + 3 <= len; ++lu) {
                    int lv = len - 3 - lu;
                    std::vector<Word> us, vs;
                    Word tmp;
                    gen(lu, tmp, us);
                    gen(lv, tmp, vs);
                    for (const auto& u : us)
                        for (const auto& v : vs) {
                            El g = El::word(&alph_, u) * s * El::word(&alph_, v);
                            if (!g.is_homogeneous() || g.is_zero()) continue;
                            if (g.weight() != wt) continue;
                            typename WordRowSpace<RatFuncQ>::Row row(g.terms().begin(),
                                                                     g.terms().end());
                            span.insert(std::move(row));
                        }
                }
            }
        }
        std::map<Word, std::map<Word, RatFuncQ>> table;
        for (const auto& w : words) {
            typename WordRowSpace<RatFuncQ>::Row unit;
            unit[w] = RatFuncQ(1);
            table[w] = span.reduce(std::move(unit));
        }
        return table;
    }
};

inline std::unique_ptr<QAffine> dj_relations() { return std::make_unique<QAffine>(); }

// The Damiani data over a window of indices: the cyclic sequence iota, the
// roots beta_k, and the total order beta_1 < beta_2 < ... < beta_-1 < beta_0
// realized as the listing order.
struct DamianiData {
    long k_min = 0, k_max = 0;
    std::map<long, int> iota_of;
    std::map<long, AffRoot> roots;
    std::vector<long> order; // increasing in the root ordering
};

inline DamianiData damiani_roots(long k_min, long k_max) {
    if (!(k_min <= 0 && 0 < k_max)) throw std::invalid_argument("damiani_roots: need k_min <= 0 < k_max");
    DamianiData d;
    d.k_min = k_min;
    d.k_max = k_max;
    for (long k = k_min; k <= k_max; ++k) {
        d.iota_of[k] = QAffine::iota(k);
        d.roots[k] = QAffine::damiani_root(k);
    }
    for (long k = 1; k <= k_max; ++k) d.order.push_back(k);
    for (long k = k_min; k <= 0; ++k) d.order.push_back(k);
    return d;
}

} // namespace qaff
} // namespace qtheta
