#pragma once

#include "qtheta/prefund.hpp"
#include "qtheta/qaffine.hpp"

namespace qtheta {
namespace rmat {

using El = NcElem<RatFuncQ>;
using Tens = TensorElem<RatFuncQ>;

// Window alphabet for the Theta factors of the rank-2 quantum affine
// algebra: the lower-Borel letters that actually appear in the monodromy
// entries, with the K letters ordered last so that K-normal form means
// "K's pushed rightmost".
struct ThetaWindow {
    Alphabet alph{2};
    Gid f1, f2;             // x-_{1,0}, x-_{2,0}
    Gid e1, e1m, e2, e2m;   // x+_{1,0}, x+_{1,-1}, x+_{2,0}, x+_{2,-1}
    Gid K1, K1i, K2, K2i;
    RelationSet<RatFuncQ> krules; // partial: K moves, K sorting/cancellation

    ThetaWindow() {
        f1 = alph.add("x-1[0]", {-1, 0});
        f2 = alph.add("x-2[0]", {0, -1});
        e1 = alph.add("x+1[0]", {1, 0});
        e1m = alph.add("x+1[-1]", {1, 0});
        e2 = alph.add("x+2[0]", {0, 1});
        e2m = alph.add("x+2[-1]", {0, 1});
        K1 = alph.add("K1", {0, 0});
        K1i = alph.add("K1^-1", {0, 0});
        K2 = alph.add("K2", {0, 0});
        K2i = alph.add("K2^-1", {0, 0});
        krules.alph = &alph;
        krules.partial = true;
        krules.add_forced(K1, K1i, El::one(&alph));
        krules.add_forced(K1i, K1, El::one(&alph));
        krules.add_forced(K2, K2i, El::one(&alph));
        krules.add_forced(K2i, K2, El::one(&alph));
        std::array<Gid, 4> ks{K1, K1i, K2, K2i};
        for (Gid a : ks)
            for (Gid b : ks)
                if (a > b) krules.add_swap(a, b, El::word(&alph, Word{b, a}));
        // K_i x = q^{<row_i, wt(x)>} x K_i
        for (Gid x : {f1, f2, e1, e1m, e2, e2m}) {
            const WeightVec& w = alph.weight(x);
            for (int i = 1; i <= 2; ++i) {
                int p = cartan_entry_A(2, i - 1, 0) * w[0] + cartan_entry_A(2, i - 1, 1) * w[1];
                Gid k = (i == 1) ? K1 : K2, ki = (i == 1) ? K1i : K2i;
                krules.add_swap(k, x, RatFuncQ::q_power(p) * El::word(&alph, Word{x, k}));
                krules.add_swap(ki, x, RatFuncQ::q_power(-p) * El::word(&alph, Word{x, ki}));
            }
        }
    }
    ThetaWindow(const ThetaWindow&) = delete;

    El gen(Gid g) const { return El::generator(&alph, g); }
    El one() const { return El::one(&alph); }
    El knormal(const El& x) const { return reduce_pbw(x, krules); }

    // the four block elements of the closed Theta formulas
    El L1() const { return gen(f1); }
    El L2() const { return q_commutator(gen(f1), gen(f2), RatFuncQ::q_power(1)); }
    El R1() const { return gen(e1m); }
    El R2() const { return q_commutator(gen(e2), gen(e1m), RatFuncQ::q_power(-1)); }
    // the node-swapped blocks of Theta_2
    El L1p() const { return gen(f2); }
    El L2p() const { return q_commutator(gen(f2), gen(f1), RatFuncQ::q_power(1)); }
    El R1p() const { return gen(e2m); }
    El R2p() const { return q_commutator(gen(e1), gen(e2m), RatFuncQ::q_power(-1)); }

    // psi on the window letters: nodes swap, negative modes pick up (-1)^s.
    El psi(const El& x) const {
        El r(&alph);
        for (const auto& [w, c] : x.terms()) {
            RatFuncQ coef = c;
            Word nw;
            for (Gid g : w) {
                if (g == f1) nw.push_back(f2);
                else if (g == f2) nw.push_back(f1);
                else if (g == e1) nw.push_back(e2);
                else if (g == e2) nw.push_back(e1);
                else if (g == e1m) { nw.push_back(e2m); coef = RatFuncQ(0) - coef; }
                else if (g == e2m) { nw.push_back(e1m); coef = RatFuncQ(0) - coef; }
                else if (g == K1) nw.push_back(K2);
                else if (g == K2) nw.push_back(K1);
                else if (g == K1i) nw.push_back(K2i);
                else nw.push_back(K1i);
            }
            r.add_term(nw, coef);
        }
        return r;
    }

    // expansion into the Drinfeld-Jimbo presentation
    GeneratorMap<RatFuncQ> dj_map(const qaff::QAffine& U) const {
        GeneratorMap<RatFuncQ> m;
        m.source = &alph;
        m.target = U.alphabet();
        m.images[f1] = U.xminus(1, 0);
        m.images[f2] = U.xminus(2, 0);
        m.images[e1] = U.xplus(1, 0);
        m.images[e2] = U.xplus(2, 0);
        m.images[e1m] = U.xplus(1, -1);
        m.images[e2m] = U.xplus(2, -1);
        m.images[K1] = U.K(1);
        m.images[K1i] = U.Kinv(1);
        m.images[K2] = U.K(2);
        m.images[K2i] = U.Kinv(2);
        return m;
    }
};

// Monodromy entries of the triangular R-matrix parts against L_1. Only the
// lowest-weight column of R^+ and row of R^- are ever materialized.
struct MonodromyTable {
    int depth = 0;
    // (a,b) -> entry; t^+ entries are z-free, t^- entries carry z^{a+b}
    std::map<prefund::Idx, El> plus, minus;
};

// R^+(z) (v_{0,0} (x) 1): the surviving factors are the three height-zero
// q-exponentials over E_1, E_{alpha_1+alpha_2}, E_2, in decreasing root
// order; the module scalars come from the L_1 actions and the right tensor
// legs are words in x-_{1,0}, x-_{2,0}.
inline MonodromyTable rplus_monodromy(const ThetaWindow& W, const prefund::L1Model& model,
                                      int depth) {
    if (model.depth < depth + 1)
        throw std::invalid_argument("rplus_monodromy: model depth too small");
    MonodromyTable out;
    out.depth = depth;
    RatFuncQ qimq = RatFuncQ::q_power(-1) - RatFuncQ::q_power(1);
    El Fa12 = RatFuncQ(-1) * W.L2(); // F_{alpha_1+alpha_2} = -[x-_{1,0}, x-_{2,0}]_q

    // c >= 1 terms die on the vacuum: E_2^c v_{0,0} = 0.
    if (!model.apply("x+2,0", model.basis({0, 0})).empty())
        throw std::logic_error("rplus_monodromy: E_2 does not annihilate the vacuum");

    for (int b = 0; b <= depth; ++b) {
        // module scalar of E_{a1+a2}^b then E_1^a on v_{0,0}
        prefund::Vec v = model.basis({0, 0});
        for (int t = 0; t < b; ++t) v = model.apply("Ea12", v);
        for (int a = 0; a + b <= depth; ++a) {
            if (v.size() != 1)
                throw std::logic_error("rplus_monodromy: module leg is not a single vector");
            auto [idx, scal] = *v.begin();
            if (idx != prefund::Idx{a, b})
                throw std::logic_error("rplus_monodromy: unexpected target index");
            RatFuncQ pref = RatFuncQ::pow(qimq, a + b) /
                            RatFuncQ(q_paren_factorial(a) * q_paren_factorial(b));
            El right = W.one();
            for (int t = 0; t < a; ++t) right = W.gen(W.f1) * right; // f1^a on the left of Fa12^b
            for (int t = 0; t < b; ++t) right = right * Fa12;
            out.plus[{a, b}] = (pref * scal) * right;
            v = model.apply("x+1,0", v);
        }
    }
    return out;
}

// R^-(z) (v_{a,b} (x) 1): the surviving factors are the q-exponentials over
// E_{delta-alpha_1} and E_0 (decreasing order), and only the powers k = a,
// l = b reach the vacuum; the module scalars are taken from the L_1 actions
// and compared against their closed forms by the verifier.
inline MonodromyTable rminus_monodromy(const ThetaWindow& W, const prefund::L1Model& model,
                                       int depth) {
    if (model.depth < depth + 1)
        throw std::invalid_argument("rminus_monodromy: model depth too small");
    MonodromyTable out;
    out.depth = depth;
    RatFuncQ qimq = RatFuncQ::q_power(-1) - RatFuncQ::q_power(1);
    El Fd1 = RatFuncQ(-1) * (W.gen(W.e1m) * W.gen(W.K1)); // F_{delta-alpha_1} = -x+_{1,-1} K_1
    El F0 = W.R2() * (W.gen(W.K1) * W.gen(W.K2));         // F_0 = [x+_{2,0},x+_{1,-1}]_{q^-1} K_0^{-1}

    for (int a = 0; a <= depth; ++a)
        for (int b = 0; a + b <= depth; ++b) {
            prefund::Vec v = model.basis({a, b});
            for (int t = 0; t < b; ++t) v = model.apply("E0", v);
            for (int t = 0; t < a; ++t) v = model.apply("Edelta-a1", v);
            if (v.size() != 1 || v.begin()->first != prefund::Idx{0, 0})
                throw std::logic_error("rminus_monodromy: module leg missed the vacuum");
            RatFuncQ scal = v.begin()->second;
            RatFuncQ pref = RatFuncQ::pow(qimq, a + b) /
                            RatFuncQ(q_paren_factorial(a) * q_paren_factorial(b));
            El right = W.one();
            for (int t = 0; t < a; ++t) right = right * Fd1;
            for (int t = 0; t < b; ++t) right = right * F0;
            out.minus[{a, b}] = W.knormal((pref * scal) * right);
        }
    return out;
}

// The proof-level closed forms of the monodromy entries, symbolic in (a,b).
inline El tplus_closed(const ThetaWindow& W, int a, int b) {
    RatFuncQ qimq = RatFuncQ::q_power(-1) - RatFuncQ::q_power(1);
    RatFuncQ qmqi = RatFuncQ::q_power(1) - RatFuncQ::q_power(-1);
    El r = RatFuncQ::pow(qimq, a) / RatFuncQ(q_paren_factorial(a)) *
           (RatFuncQ::pow(qmqi, b) / RatFuncQ(q_paren_factorial(b)) * W.one());
    for (int t = 0; t < a; ++t) r = r * W.gen(W.f1);
    for (int t = 0; t < b; ++t) r = r * W.L2();
    return r;
}
inline El tminus_closed(const ThetaWindow& W, int a, int b) {
    El r = (a % 2 ? RatFuncQ(-1) : RatFuncQ(1)) * W.one();
    for (int t = 0; t < a; ++t) r = r * W.gen(W.e1m);
    for (int t = 0; t < b; ++t) r = r * W.R2();
    for (int t = 0; t < a; ++t) r = r * W.gen(W.K1);
    for (int t = 0; t < b; ++t) r = r * (W.gen(W.K1) * W.gen(W.K2)); // K_0^{-b} with K_0 = (K1 K2)^{-1}
    return W.knormal(r);
}

// Theta_1 assembled from the monodromy entries:
//   Theta_{1,beta} = sum over wt(v_{a,b}) = beta of t+ (x) t- K_beta^{-1}.
inline Tens assemble_theta1(const ThetaWindow& W, const MonodromyTable& plus,
                            const MonodromyTable& minus, int depth) {
    Tens theta(&W.alph, 3 * depth + 1);
    for (int a = 0; a <= depth; ++a)
        for (int b = 0; a + b <= depth; ++b) {
            // K_beta^{-1} = K_1^{-(a+b)} K_2^{-b}
            El kinv = W.one();
            for (int t = 0; t < a + b; ++t) kinv = kinv * W.gen(W.K1i);
            for (int t = 0; t < b; ++t) kinv = kinv * W.gen(W.K2i);
            El right = W.knormal(minus.minus.at({a, b}) * kinv);
            // all K letters must cancel against K_beta^{-1}
            for (const auto& [w, c] : right.terms())
                for (Gid g : w)
                    if (g == W.K1 || g == W.K1i || g == W.K2 || g == W.K2i)
                        throw std::logic_error("assemble_theta1: K letters fail to cancel");
            theta += Tens::simple(plus.plus.at({a, b}), right, 3 * depth + 1, /*zdeg=*/a + b);
        }
    return theta;
}

// The closed product form of Theta_1 (and of Theta_2 with the nodes
// swapped), truncated at total exponential degree `depth`.
inline Tens theta_closed(const ThetaWindow& W, int depth, bool node2 = false) {
    RatFuncQ qmqi = RatFuncQ::q_power(1) - RatFuncQ::q_power(-1);
    int cap = 3 * depth + 1;
    Tens X = qmqi * Tens::simple(node2 ? W.L1p() : W.L1(), node2 ? W.R1p() : W.R1(), cap, 1);
    Tens Y = qmqi * Tens::simple(node2 ? W.L2p() : W.L2(), node2 ? W.R2p() : W.R2(), cap, 1);
    Tens out(&W.alph, cap);
    Tens xp = Tens::one(&W.alph, cap);
    for (int a = 0; a <= depth; ++a) {
        Tens yp = xp;
        for (int b = 0; a + b <= depth; ++b) {
            out += (RatFuncQ(q_paren_factorial(a)) * RatFuncQ(q_paren_factorial(b))).inverse() * yp;
            yp = yp * Y;
        }
        xp = xp * X;
    }
    return out;
}

// psi (x) psi followed by z -> -z on a window tensor.
inline Tens psi_transport(const ThetaWindow& W, const Tens& t) {
    Tens r(&W.alph, t.height_cap());
    for (const auto& [k, c] : t.terms()) {
        El l = W.psi(El::word(&W.alph, k.left));
        El rr = W.psi(El::word(&W.alph, k.right));
        RatFuncQ sign = (k.zdeg % 2) ? RatFuncQ(-1) : RatFuncQ(1); // z -> -z
        for (const auto& [wl, cl] : l.terms())
            for (const auto& [wr, cr] : rr.terms())
                r.add_term(TensKey{wl, wr, k.zdeg}, sign * c * cl * cr);
    }
    return r;
}

// Tensor-level zero certificate in U_q (x) U_q: both legs are expanded into
// the Drinfeld-Jimbo presentation and read off in triangular coordinates.
inline bool tensor_is_zero_dj(const qaff::QAffine& U, const ThetaWindow& W, const Tens& t) {
    auto dj = W.dj_map(U);
    using C = qaff::QAffine::Coord;
    std::map<std::tuple<int, C, C>, RatFuncQ> acc; // keyed by (z-degree, left, right)
    std::map<Word, std::map<C, RatFuncQ>> cache;
    auto coords_of = [&](const Word& w) -> const std::map<C, RatFuncQ>& {
        auto it = cache.find(w);
        if (it == cache.end())
            it = cache.emplace(w, U.coords(dj.apply(El::word(&W.alph, w)))).first;
        return it->second;
    };
    for (const auto& [k, c] : t.terms()) {
        const auto& lc = coords_of(k.left);
        const auto& rc = coords_of(k.right);
        for (const auto& [cl, vl] : lc)
            for (const auto& [cr, vr] : rc) {
                auto key = std::make_tuple(k.zdeg, cl, cr);
                auto it = acc.find(key);
                RatFuncQ v = c * vl * vr;
                if (it == acc.end()) {
                    if (!v.is_zero()) acc.emplace(std::move(key), v);
                } else {
                    it->second += v;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
    }
    return acc.empty();
}

} // namespace rmat
} // namespace qtheta
