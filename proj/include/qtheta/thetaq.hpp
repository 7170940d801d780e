#pragma once

#include <sstream>

#include "qtheta/qverify.hpp"
#include "qtheta/rmatrix.hpp"

namespace qtheta {
namespace rmat {

struct ThetaBundle;

// Verification of the monodromy entries against their closed forms,
// symbolically in (a,b) across the truncation window.
inline CheckList verify_monodromy(const ThetaWindow& W, const prefund::L1Model& model,
                                  const MonodromyTable& plus, const MonodromyTable& minus,
                                  int depth) {
    CheckList out;
    RatFuncQ qmqi = RatFuncQ::q_power(1) - RatFuncQ::q_power(-1);

    bool tplus_ok = true, tminus_ok = true, weights_ok = true, scalars_ok = true;
    for (int a = 0; a <= depth; ++a)
        for (int b = 0; a + b <= depth; ++b) {
            if (plus.plus.at({a, b}) != tplus_closed(W, a, b)) tplus_ok = false;
            if (minus.minus.at({a, b}) != tminus_closed(W, a, b)) tminus_ok = false;
            // weight bookkeeping: wt(t+) + wt(t-) = 0
            if (!plus.plus.at({a, b}).is_zero() && !minus.minus.at({a, b}).is_zero()) {
                WeightVec wp = plus.plus.at({a, b}).weight();
                WeightVec wm = minus.minus.at({a, b}).weight();
                if (wp + wm != weight_zero(2)) weights_ok = false;
            }
            // the module scalars of the lowering legs match the closed forms
            // E_0^b v_{a,b} and E_{delta-a1}^a v_{a,0}
            prefund::Vec v = model.basis({a, b});
            for (int t = 0; t < b; ++t) v = model.apply("E0", v);
            RatFuncQ e0scal = v.empty() ? RatFuncQ(0) : v.begin()->second;
            RatFuncQ e0_expected = (b % 2 ? RatFuncQ(-1) : RatFuncQ(1)) *
                                   RatFuncQ(q_paren_factorial(b)) / RatFuncQ::pow(qmqi, b) *
                                   RatFuncQ::q_power(-a * b - b * (b - 1));
            if (e0scal != e0_expected) scalars_ok = false;
            for (int t = 0; t < a; ++t) v = model.apply("Edelta-a1", v);
            RatFuncQ full = v.empty() ? RatFuncQ(0) : v.begin()->second;
            RatFuncQ ed_expected = (a % 2 ? RatFuncQ(-1) : RatFuncQ(1)) *
                                   RatFuncQ(q_paren_factorial(a)) / RatFuncQ::pow(qmqi, a) *
                                   RatFuncQ::q_power(-a * (a - 1));
            if (full != e0_expected * ed_expected) scalars_ok = false;
        }
    out.add("theta-q: t+ entries match (q^{-1}-q)^a/(a)! (x-_{1,0})^a (q-q^{-1})^b/(b)! [x-,x-]_q^b",
            tplus_ok);
    out.add("theta-q: t- entries match (-1)^a (x+_{1,-1})^a [x+,x+]_{q^-1}^b K_1^a K_0^{-b} z^{a+b}",
            tminus_ok);
    out.add("theta-q: monodromy weight bookkeeping wt(t+) + wt(t-) = 0", weights_ok);
    out.add("theta-q: lowering-leg module scalars match their closed forms", scalars_ok);
    return out;
}

// Monodromy tables and the assembled series, computed once and shared by
// the comparison suites.
struct ThetaBundle {
    int depth = 0;
    MonodromyTable plus, minus;
    Tens theta1;
};

inline ThetaBundle build_theta_bundle(const ThetaWindow& W, const prefund::L1Model& model,
                                      int depth) {
    ThetaBundle b;
    b.depth = depth;
    b.plus = rplus_monodromy(W, model, depth);
    b.minus = rminus_monodromy(W, model, depth);
    b.theta1 = assemble_theta1(W, b.plus, b.minus, depth);
    return b;
}

// Assembled Theta_1 versus the closed two-exponential product, plus the
// q-commutations behind it. The second block commutation holds with the
// scalar q^{-1}, not the q reading that sometimes accompanies it; both
// readings are certified here and reported explicitly, and with both block
// commutations carrying q^{-1} the two q-exponential factors do not commute
// (X Y = q^{-2} Y X), which the as-stated commutation check records
// honestly.
inline CheckList compare_theta_closed(const qaff::QAffine& U, const ThetaWindow& W,
                                      const ThetaBundle& bundle, int depth, int degree_bound) {
    CheckList out;
    (void)degree_bound;
    const Tens& assembled = bundle.theta1;
    Tens closed = theta_closed(W, depth);

    Tens diff = assembled - closed;
    out.add("theta-q: assembled Theta_1 equals the closed form, depth " + std::to_string(depth),
            diff.is_zero(),
            diff.is_zero() ? "componentwise equal" : std::to_string(diff.term_count()) + " terms differ",
            static_cast<long>(diff.term_count()));

    // no component with a pure-alpha_2 excess: right weights are
    // (a+b) alpha_1 + b alpha_2
    bool pattern_ok = true;
    for (const auto& [k, c] : assembled.terms()) {
        WeightVec w = W.alph.word_weight(k.right);
        if (w[0] < w[1]) pattern_ok = false;
    }
    out.add("theta-q: components with alpha_2 excess vanish", pattern_ok);

    RatFuncQ q = RatFuncQ::q_power(1), qi = RatFuncQ::q_power(-1);
    auto dj = W.dj_map(U);
    auto certify = [&](const El& x) { return U.is_zero(dj.apply(x)); };

    // block q-commutations
    El c1 = W.gen(W.f1) * W.L2() - qi * (W.L2() * W.gen(W.f1));
    out.add("theta-q: x-_{1,0} [x-_{1,0},x-_{2,0}]_q = q^{-1} [x-_{1,0},x-_{2,0}]_q x-_{1,0}",
            certify(c1));
    El c2_stated = W.gen(W.e1m) * W.R2() - q * (W.R2() * W.gen(W.e1m));
    El c2_corrected = W.gen(W.e1m) * W.R2() - qi * (W.R2() * W.gen(W.e1m));
    bool stated = certify(c2_stated);
    bool corrected = certify(c2_corrected);
    out.add("theta-q: x+_{1,-1} [x+_{2,0},x+_{1,-1}]_{q^-1} = q [..] x+_{1,-1} (as printed)", stated,
            stated ? "" : "fails; the scalar is q^{-1}, see the corrected form");
    out.add("theta-q: x+_{1,-1} [x+_{2,0},x+_{1,-1}]_{q^-1} = q^{-1} [..] x+_{1,-1} (corrected)",
            corrected);

    // commutation of the two q-exponential factors, as stated
    Tens closed_rev(&W.alph, closed.height_cap());
    {
        RatFuncQ qmqi = q - qi;
        int cap = closed.height_cap();
        Tens X = qmqi * Tens::simple(W.L1(), W.R1(), cap, 1);
        Tens Y = qmqi * Tens::simple(W.L2(), W.R2(), cap, 1);
        Tens yp = Tens::one(&W.alph, cap);
        for (int b = 0; b <= depth; ++b) {
            Tens xp = yp;
            for (int a = 0; a + b <= depth; ++a) {
                closed_rev +=
                    (RatFuncQ(q_paren_factorial(a)) * RatFuncQ(q_paren_factorial(b))).inverse() * xp;
                xp = xp * X;
            }
            yp = yp * Y;
        }
    }
    // componentwise by z-degree, smallest first: one nonzero component
    // already decides the failure
    bool exp_commute = true;
    std::string witness;
    {
        Tens diff2 = closed - closed_rev;
        std::map<int, Tens> by_z;
        for (const auto& [k, c] : diff2.terms()) {
            auto it = by_z.find(k.zdeg);
            if (it == by_z.end()) it = by_z.emplace(k.zdeg, Tens(&W.alph, diff2.height_cap())).first;
            it->second.add_term(k, c);
        }
        for (const auto& [zd, comp] : by_z) {
            if (!tensor_is_zero_dj(U, W, comp)) {
                exp_commute = false;
                witness = "first nonzero z-degree: " + std::to_string(zd);
                break;
            }
        }
    }
    out.add("theta-q: the two q-exponentials commute modulo relations (as stated)", exp_commute,
            exp_commute ? ""
                        : "exp_q(X)exp_q(Y) != exp_q(Y)exp_q(X): X Y = q^{-2} Y X since both block "
                          "commutations carry q^{-1}; " + witness);
    // scalar form of the same fact: X Y = q^{-2} Y X modulo relations
    {
        int cap = closed.height_cap();
        Tens X = Tens::simple(W.L1(), W.R1(), cap, 1);
        Tens Y = Tens::simple(W.L2(), W.R2(), cap, 1);
        Tens comm = X * Y - RatFuncQ::q_power(-2) * (Y * X);
        out.add("theta-q: X Y = q^{-2} Y X for the exponential arguments",
                tensor_is_zero_dj(U, W, comm));
    }

    // The K-commutation bookkeeping of the assembly (phi_{i,0}-moves past
    // the mode-window letters), certified against the windowed Drinfeld
    // relations by bounded ideal membership.
    {
        qaff::DrinfeldWindow D(1);
        bool kmoves = true;
        for (int i = 1; i <= 2; ++i)
            for (auto [j, m] : {std::pair{1, -1}, std::pair{2, 0}}) {
                int cmove = cartan_entry_A(2, i - 1, j - 1);
                auto rel = D.php(i, 0) * D.xp(j, m) -
                           RatFuncQ::q_power(cmove) * (D.xp(j, m) * D.php(i, 0));
                if (!ideal_member(rel, D.rules, 3)) kmoves = false;
            }
        out.add("theta-q: K-moves past the window letters certified over the Drinfeld relations",
                kmoves);
    }
    return out;
}

// Theta_2 through the diagram swap: psi (x) psi plus z -> -z on Theta_1
// reproduces the node-swapped closed form, componentwise.
inline CheckList theta2_via_psi(const ThetaWindow& W, const ThetaBundle& bundle, int depth) {
    CheckList out;
    const Tens& theta1 = bundle.theta1;
    Tens theta2 = psi_transport(W, theta1);
    Tens closed2 = theta_closed(W, depth, /*node2=*/true);
    Tens diff = theta2 - closed2;
    out.add("theta-q: psi-transport of Theta_1 equals the Theta_2 closed form", diff.is_zero(),
            diff.is_zero() ? "componentwise equal"
                           : std::to_string(diff.term_count()) + " terms differ",
            static_cast<long>(diff.term_count()));
    // per-component sign tracking: z^d components gain (-1)^d from z -> -z,
    // cancelled by (-1)^d from the psi images of the mode -1 letters
    bool signs_ok = true;
    for (const auto& [k, c] : theta1.terms()) {
        int m1_letters = 0;
        for (Gid g : k.right)
            if (g == W.e1m || g == W.e2m) ++m1_letters;
        if (m1_letters != k.zdeg) signs_ok = false;
    }
    out.add("theta-q: each z^d component carries exactly d mode=-1 letters", signs_ok);
    out.add("theta-q: Theta_{2,0} = 1 (x) 1",
            closed2.terms().count(TensKey{}) == 1 &&
                closed2.terms().at(TensKey{}) == RatFuncQ(1));
    return out;
}

// Compatibility with the coproducts of the Drinfeld-Cartan elements: the
// z-coefficients of the factorized coproducts of T_{1}(z), T_{2}(z),
// pushed through the [2]/[3] change of basis, reproduce the first-mode
// coproduct corrections, using
//   [x+_{1,0}, x+_{2,-1}]_{q^-1} = -[x+_{2,0}, x+_{1,-1}]_{q^-1}
// and the free identity [2][x,y]_q + [y,x]_q = -q^2 [y,x]_{q^-3}.
inline CheckList verify_ft_compatibility(const qaff::QAffine& U, const ThetaWindow& W,
                                         int degree_bound) {
    CheckList out;
    (void)degree_bound;
    RatFuncQ q = RatFuncQ::q_power(1), qi = RatFuncQ::q_power(-1);
    RatFuncQ qmqi = q - qi;
    RatFuncQ two(q_bracket(2));
    const int cap = 8;
    auto dj = W.dj_map(U);

    // z-linear corrections of Delta(T_{i,1}) from the Theta factorization
    Tens corr1 = qmqi * Tens::simple(W.L1(), W.R1(), cap) + qmqi * Tens::simple(W.L2(), W.R2(), cap);
    Tens corr2 = qmqi * Tens::simple(W.L1p(), W.R1p(), cap) + qmqi * Tens::simple(W.L2p(), W.R2p(), cap);

    // Delta(h_{1,-1}) correction: [2] corr1 - corr2 must equal
    // (q^2-q^-2) x-_1 (x) x+_{1,-1} - (q-q^-1) x-_2 (x) x+_{2,-1}
    //   - (q^3-q) [x-_2,x-_1]_{q^-3} (x) [x+_2,x+_{1,-1}]_{q^-1}
    Tens lhs1 = two * corr1 - corr2;
    Tens rhs1 = (RatFuncQ::q_power(2) - RatFuncQ::q_power(-2)) * Tens::simple(W.L1(), W.R1(), cap) -
                qmqi * Tens::simple(W.L1p(), W.R1p(), cap) -
                (RatFuncQ::q_power(3) - RatFuncQ::q_power(1)) *
                    Tens::simple(q_commutator(W.gen(W.f2), W.gen(W.f1), RatFuncQ::q_power(-3)),
                                 W.R2(), cap);
    out.add("ft: Delta(h_{1,-1}) correction matches", tensor_is_zero_dj(U, W, lhs1 - rhs1));

    // Delta(h_{2,-1}) correction: [2] corr2 - corr1 equals
    // (q^2-q^-2) x-_2 (x) x+_{2,-1} - (q-q^-1) x-_1 (x) x+_{1,-1}
    //   + (q^3-q) [x-_1,x-_2]_{q^-3} (x) [x+_2,x+_{1,-1}]_{q^-1}
    Tens lhs2 = two * corr2 - corr1;
    Tens rhs2 = (RatFuncQ::q_power(2) - RatFuncQ::q_power(-2)) * Tens::simple(W.L1p(), W.R1p(), cap) -
                qmqi * Tens::simple(W.L1(), W.R1(), cap) +
                (RatFuncQ::q_power(3) - RatFuncQ::q_power(1)) *
                    Tens::simple(q_commutator(W.gen(W.f1), W.gen(W.f2), RatFuncQ::q_power(-3)),
                                 W.R2(), cap);
    out.add("ft: Delta(h_{2,-1}) correction matches", tensor_is_zero_dj(U, W, lhs2 - rhs2));

    // the two identities behind the rewriting
    El sub = q_commutator(W.gen(W.e1), W.gen(W.e2m), qi) + q_commutator(W.gen(W.e2), W.gen(W.e1m), qi);
    out.add("ft: [x+_{1,0},x+_{2,-1}]_{q^-1} = -[x+_{2,0},x+_{1,-1}]_{q^-1}",
            U.is_zero(dj.apply(sub)));
    El free_id = two * q_commutator(W.gen(W.f1), W.gen(W.f2), q) +
                 q_commutator(W.gen(W.f2), W.gen(W.f1), q) +
                 RatFuncQ::q_power(2) * q_commutator(W.gen(W.f2), W.gen(W.f1), RatFuncQ::q_power(-3));
    out.add("ft: [2][x,y]_q + [y,x]_q = -q^2 [y,x]_{q^-3} (free identity)", free_id.is_zero());

    // the box parts pass through the same exact change of basis as the
    // symbols h_{i,-1} themselves: [2]([2]h1+h2)/[3] - (h1+[2]h2)/[3] = h1
    RatFuncQ three(q_bracket(3));
    bool boxes = (two * two - RatFuncQ(1)) == three;
    out.add("ft: box terms pass through linearly ([2]^2 - 1 = [3])", boxes);
    return out;
}

} // namespace rmat
} // namespace qtheta
