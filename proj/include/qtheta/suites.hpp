#pragma once

#include <chrono>

#include "qtheta/gklo.hpp"
#include "qtheta/hseries.hpp"
#include "qtheta/qverify.hpp"
#include "qtheta/thetaq.hpp"
#include "qtheta/yangian.hpp"

namespace qtheta {
namespace suites {

struct SuiteResult {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    CheckList checks;
    long elapsed_ms = 0;
    bool all_pass() const { return checks.all_pass(); }
};

namespace detail {
struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long ms() const {
        return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count());
    }
};
} // namespace detail

// Yangian suite: closed-form intertwining, solver agreement, the commutator
// relations, and the zigzag identity, for the given rank (node = 0 runs
// every node).
inline SuiteResult run_yangian(int n, int node, int height) {
    detail::Timer t;
    SuiteResult r;
    r.suite = "yangian";
    r.params = {{"n", std::to_string(n)}, {"node", node ? std::to_string(node) : "all"},
                {"height", std::to_string(height)}};
    SlAlgebra g(n);
    for (int i = 1; i <= n; ++i) {
        if (node && i != node) continue;
        r.checks.merge(yang::verify_lemma_commutators(g, i, height));
        r.checks.merge(yang::verify_intertwining(g, i, height));
        auto sol = yang::solve_theta_recursive(g, i, height);
        std::string tag = "[n=" + std::to_string(n) + ",i=" + std::to_string(i) +
                          ",H=" + std::to_string(height) + "]";
        r.checks.add("solver" + tag + ": linear systems have full column rank", sol.unique,
                     sol.detail);
        r.checks.add("solver" + tag + ": systems consistent", sol.consistent, sol.detail);
        r.checks.add("solver" + tag + ": solution is z-independent", sol.z_independent, sol.detail);
        bool agree = sol.theta == yang::theta_closed_form(g, i, height);
        r.checks.add("solver" + tag + ": equals the closed form exp(sum E_kj (x) E_jk)", agree);
        r.checks.merge(yang::verify_shift_zigzag(g, i));
    }
    r.elapsed_ms = t.ms();
    return r;
}

inline SuiteResult run_prefund(int depth, int margin = 3) {
    detail::Timer t;
    SuiteResult r;
    r.suite = "prefund";
    r.params = {{"depth", std::to_string(depth)}, {"margin", std::to_string(margin)}};
    auto m = prefund::build_l1(depth);
    r.checks.merge(prefund::verify_l1_relations(m, margin));
    r.checks.merge(prefund::verify_lowest_weight(m));
    r.elapsed_ms = t.ms();
    return r;
}

inline SuiteResult run_qaffine_roots(int degree_bound) {
    detail::Timer t;
    SuiteResult r;
    r.suite = "qaffine-roots";
    r.params = {{"degree_bound", std::to_string(degree_bound)}};
    qaff::QAffine U;
    r.checks.merge(qaff::verify_root_vectors(U, degree_bound));
    r.checks.merge(qaff::verify_morphisms(U, std::min(degree_bound, 4)));
    qaff::DrinfeldWindow W(1);
    r.checks.merge(qaff::verify_drinfeld_window(W));
    r.elapsed_ms = t.ms();
    return r;
}

inline SuiteResult run_theta_qaffine(int depth, int degree_bound) {
    detail::Timer t;
    SuiteResult r;
    r.suite = "theta-qaffine";
    r.params = {{"depth", std::to_string(depth)}, {"degree_bound", std::to_string(degree_bound)}};
    qaff::QAffine U;
    rmat::ThetaWindow W;
    auto model = prefund::build_l1(depth + 2 > 3 ? depth + 2 : 3);
    auto bundle = rmat::build_theta_bundle(W, model, depth);
    r.checks.merge(rmat::verify_monodromy(W, model, bundle.plus, bundle.minus, depth));
    r.checks.merge(rmat::compare_theta_closed(U, W, bundle, depth, degree_bound));
    r.checks.merge(rmat::theta2_via_psi(W, bundle, depth));
    r.checks.merge(rmat::verify_ft_compatibility(U, W, degree_bound));
    r.elapsed_ms = t.ms();
    return r;
}

inline SuiteResult run_gklo(int n, int order) {
    detail::Timer t;
    SuiteResult r;
    r.suite = "gklo";
    r.params = {{"n", std::to_string(n)}, {"order", std::to_string(order)}};
    auto sol = cartan::solve_gklo(n, order);
    r.checks.merge(cartan::verify_gklo(sol));
    r.elapsed_ms = t.ms();
    return r;
}

inline SuiteResult run_s_series(int n, int order) {
    detail::Timer t;
    SuiteResult r;
    r.suite = "s-series";
    r.params = {{"n", std::to_string(n)}, {"order", std::to_string(order)}};
    auto gk = cartan::solve_gklo(n, order);
    auto ss = cartan::solve_s_series(gk);
    r.checks.merge(cartan::verify_s_series(gk, ss));
    r.elapsed_ms = t.ms();
    return r;
}

// Kernel health: exact-scalar identities, grading, confluence of the sl
// rules, reduction idempotence, and the q-series bookkeeping.
inline SuiteResult run_kernel() {
    detail::Timer t;
    SuiteResult r;
    r.suite = "kernel";

    bool brackets = true;
    for (int m = -20; m <= 20; ++m) {
        if (q_bracket(-m) != -q_bracket(m)) brackets = false;
        if (q_bracket(m).eval_at_one() != Rational(m)) brackets = false;
    }
    for (int m = 1; m <= 20; ++m)
        if (q_paren(m) != q_bracket(m) * LaurentQ::q_power(m - 1)) brackets = false;
    r.checks.add("kernel: [-m] = -[m], [m](1) = m, (m) = q^{m-1}[m] for |m| <= 20", brackets);

    bool binoms = true;
    try {
        for (int m = 0; m <= 10; ++m)
            for (int k = 0; k <= m; ++k) (void)q_binomial(m, k);
    } catch (...) {
        binoms = false;
    }
    r.checks.add("kernel: q-binomials are Laurent polynomials for 0 <= k <= m <= 10", binoms);

    // canonical form of rational functions is idempotent and structural
    bool canon = true;
    {
        LaurentQ d = LaurentQ::q_power(1) - LaurentQ::q_power(-1);
        RatFuncQ a(d * q_bracket(2), d);
        if (a != RatFuncQ(q_bracket(2))) canon = false;
        RatFuncQ b(LaurentQ::q_power(3) - LaurentQ::q_power(-3), d);
        if (b != RatFuncQ(q_bracket(3))) canon = false;
        RatFuncQ c(LaurentQ(2) * q_bracket(2), LaurentQ(2) * q_bracket(3));
        if (RatFuncQ(c.num(), c.den()) != c) canon = false;
        if (c.bar().bar() != c) canon = false;
    }
    r.checks.add("kernel: rational-function canonical form is idempotent", canon);

    bool cartan_ok = true;
    try {
        for (int n = 1; n <= 4; ++n)
            for (int s = 1; s <= 3; ++s) (void)quantum_cartan_inverse(n, s);
    } catch (...) {
        cartan_ok = false;
    }
    r.checks.add("kernel: C(q^s) C~(q^s) = 1 for n <= 4, s <= 3", cartan_ok);

    // grading additivity and reduction idempotence on the sl algebras
    bool grading = true, idem = true, confluent = true, member_ok = true;
    for (int n = 1; n <= 3; ++n) {
        SlAlgebra g(n);
        const auto& rules = g.rules();
        std::vector<Gid> lie = g.lowering_letters();
        for (int l = 1; l <= n; ++l) lie.push_back(g.xi(l));
        for (Gid a : g.raising_letters()) lie.push_back(a);
        for (Gid a : lie)
            for (Gid b : lie) {
                auto w = NcElem<Rational>::word(g.alphabet(), Word{a, b});
                if (g.alphabet()->word_weight(Word{a, b}) !=
                    g.alphabet()->weight(a) + g.alphabet()->weight(b))
                    grading = false;
                auto red = reduce_pbw(w, rules);
                if (reduce_pbw(red, rules) != red) idem = false;
                // x - reduce(x) lies in the two-sided ideal of the rules
                if (n <= 2) {
                    auto diff = w - red;
                    if (!diff.is_zero() && !ideal_member(diff, rules, 3)) member_ok = false;
                }
            }
        for (Gid a : lie)
            for (Gid b : lie)
                for (Gid c : lie) {
                    if (!(a < b && b < c)) continue;
                    auto left = reduce_pbw(NcElem<Rational>::word(g.alphabet(), Word{c, b}), rules);
                    auto r1 = reduce_pbw(left * NcElem<Rational>::generator(g.alphabet(), a), rules);
                    auto right = reduce_pbw(NcElem<Rational>::word(g.alphabet(), Word{b, a}), rules);
                    auto r2 = reduce_pbw(NcElem<Rational>::generator(g.alphabet(), c) * right, rules);
                    if (r1 != r2) confluent = false;
                }
    }
    r.checks.add("kernel: weight grading is additive on words", grading);
    r.checks.add("kernel: reduce_pbw is a projection (idempotent)", idem);
    r.checks.add("kernel: x - reduce(x) certifies as an ideal member", member_ok);
    r.checks.add("kernel: sl rules are locally confluent on 3-letter critical pairs", confluent);

    // morphism involutions on the quantum side
    {
        qaff::QAffine U;
        bool invol = true;
        std::vector<qaff::El> gens;
        for (int i = 0; i < 3; ++i) {
            gens.push_back(U.E(i));
            gens.push_back(U.F(i));
        }
        for (const auto& g : gens) {
            if (U.Phi().apply(U.Phi().apply(g)) != g) invol = false;
            if (U.Omega().apply(U.Omega().apply(g)) != g) invol = false;
        }
        r.checks.add("kernel: Phi and Omega are involutions on generators", invol);
    }

    // Drinfeld-Cartan bookkeeping on the quantum side
    r.checks.merge(cartan::verify_h_extraction(4));
    r.checks.merge(cartan::verify_t_series(3));

    r.elapsed_ms = t.ms();
    return r;
}

// Default bounds of every suite, matching what the acceptance criteria pin.
struct SuiteConfig {
    int n = 2;
    int node = 0; // 0 = all nodes
    int height = 4;
    int depth = 8;
    int order = 10;
    int degree_bound = 12;
};

inline std::vector<SuiteResult> run_all(const SuiteConfig& cfg) {
    std::vector<SuiteResult> out;
    out.push_back(run_kernel());
    for (int n = 1; n <= 3; ++n) out.push_back(run_yangian(n, 0, cfg.height));
    for (int n = 1; n <= 3; ++n) out.push_back(run_gklo(n, cfg.order));
    for (int n = 1; n <= 3; ++n) out.push_back(run_s_series(n, cfg.order));
    out.push_back(run_prefund(12, 3));
    out.push_back(run_qaffine_roots(std::max(cfg.degree_bound, 4)));
    out.push_back(run_theta_qaffine(4, cfg.degree_bound));
    return out;
}

} // namespace suites
} // namespace qtheta
