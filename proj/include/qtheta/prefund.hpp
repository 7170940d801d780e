#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "qtheta/qnum.hpp"
#include "qtheta/report.hpp"

namespace qtheta {
namespace prefund {

// Basis index of the prefundamental module L_1: v_{a,b} with a,b >= 0,
// truncated to a + b <= depth.
using Idx = std::pair<int, int>;

// Every generator sends a basis vector to a scalar multiple of a single
// basis vector (or to zero), so an action is one target and one exact
// coefficient per index.
struct OperatorAction {
    // returns nullopt when the vector is annihilated
    std::function<std::optional<std::pair<Idx, RatFuncQ>>(Idx)> map;
    int total_degree_change = 0; // a'+b' - (a+b); raising operators drop at the rim
};

// Sparse vector on the basis.
using Vec = std::map<Idx, RatFuncQ>;

struct L1Model {
    int depth = 0;
    std::map<std::string, OperatorAction> actions;

    const OperatorAction& op(const std::string& name) const {
        auto it = actions.find(name);
        if (it == actions.end()) throw std::out_of_range("L1Model: unknown operator " + name);
        return it->second;
    }

    Vec apply(const OperatorAction& o, const Vec& v) const {
        Vec r;
        for (const auto& [idx, c] : v) {
            auto t = o.map(idx);
            if (!t) continue;
            const auto& [tgt, coef] = *t;
            if (tgt.first + tgt.second > depth) {
                if (o.total_degree_change > 0) continue; // truncation rim
                throw std::logic_error("L1Model: non-raising operator left the basis");
            }
            auto& slot = r[tgt];
            slot += c * coef;
            if (slot.is_zero()) r.erase(tgt);
        }
        return r;
    }
    Vec apply(const std::string& name, const Vec& v) const { return apply(op(name), v); }
    Vec basis(Idx i) const { return Vec{{i, RatFuncQ(1)}}; }

    // word of operator names, leftmost acts last
    Vec apply_word(const std::vector<std::string>& word, Idx start) const {
        Vec v = basis(start);
        for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply(*it, v);
        return v;
    }
};

// q-number coefficients of the displayed actions. The x+_{2,0} coefficient
// is -q^{1-a}(a)_q: the value -q^{-a}(a)_q sometimes quoted does not satisfy
// E_2 E_1 = q^{-1} E_1 E_2 - E_{alpha_1+alpha_2} at a = 1, and the relation
// suite below pins the exponent.
inline L1Model build_l1(int depth) {
    if (depth < 3) throw std::invalid_argument("build_l1: depth must be at least 3");
    L1Model m;
    m.depth = depth;
    RatFuncQ qmqi = RatFuncQ::q_power(1) - RatFuncQ::q_power(-1);

    auto diag = [&](std::function<RatFuncQ(int, int)> c) {
        OperatorAction o;
        o.map = [c](Idx i) -> std::optional<std::pair<Idx, RatFuncQ>> {
            return std::make_pair(i, c(i.first, i.second));
        };
        o.total_degree_change = 0;
        return o;
    };
    auto zero_op = [&]() {
        OperatorAction o;
        o.map = [](Idx) -> std::optional<std::pair<Idx, RatFuncQ>> { return std::nullopt; };
        o.total_degree_change = 0;
        return o;
    };

    // x+_{1,0} v_{a,b} = v_{a+1,b}
    {
        OperatorAction o;
        o.map = [](Idx i) -> std::optional<std::pair<Idx, RatFuncQ>> {
            return std::make_pair(Idx{i.first + 1, i.second}, RatFuncQ(1));
        };
        o.total_degree_change = +1;
        m.actions["x+1,0"] = o;
    }
    // x-_{1,1} v_{a,b} = q^b (a)_q/(q-q^{-1}) v_{a-1,b}
    {
        OperatorAction o;
        o.map = [qmqi](Idx i) -> std::optional<std::pair<Idx, RatFuncQ>> {
            if (i.first == 0) return std::nullopt;
            RatFuncQ c = RatFuncQ::q_power(i.second) * RatFuncQ(q_paren(i.first)) / qmqi;
            return std::make_pair(Idx{i.first - 1, i.second}, c);
        };
        o.total_degree_change = -1;
        m.actions["x-1,1"] = o;
    }
    // x+_{2,0} v_{a,b} = -q^{1-a} (a)_q v_{a-1,b+1}
    {
        OperatorAction o;
        o.map = [](Idx i) -> std::optional<std::pair<Idx, RatFuncQ>> {
            if (i.first == 0) return std::nullopt;
            RatFuncQ c = RatFuncQ(-1) * RatFuncQ::q_power(1 - i.first) * RatFuncQ(q_paren(i.first));
            return std::make_pair(Idx{i.first - 1, i.second + 1}, c);
        };
        o.total_degree_change = 0;
        m.actions["x+2,0"] = o;
    }
    // E_{alpha_1+alpha_2} v_{a,b} = q^a v_{a,b+1}
    {
        OperatorAction o;
        o.map = [](Idx i) -> std::optional<std::pair<Idx, RatFuncQ>> {
            return std::make_pair(Idx{i.first, i.second + 1}, RatFuncQ::q_power(i.first));
        };
        o.total_degree_change = +1;
        m.actions["Ea12"] = o;
    }
    // E_0 v_{a,b} = -q^{-a-2(b-1)} (b)_q/(q-q^{-1}) v_{a,b-1}
    {
        OperatorAction o;
        o.map = [qmqi](Idx i) -> std::optional<std::pair<Idx, RatFuncQ>> {
            if (i.second == 0) return std::nullopt;
            RatFuncQ c = RatFuncQ(-1) * RatFuncQ::q_power(-i.first - 2 * (i.second - 1)) *
                         RatFuncQ(q_paren(i.second)) / qmqi;
            return std::make_pair(Idx{i.first, i.second - 1}, c);
        };
        o.total_degree_change = -1;
        m.actions["E0"] = o;
    }
    // E_{delta-alpha_1} = -K_1^{-1} x-_{1,1}
    {
        OperatorAction o;
        o.map = [qmqi](Idx i) -> std::optional<std::pair<Idx, RatFuncQ>> {
            if (i.first == 0) return std::nullopt;
            int a = i.first, b = i.second;
            RatFuncQ c = RatFuncQ(-1) * RatFuncQ::q_power(-(2 * (a - 1) + b)) *
                         RatFuncQ::q_power(b) * RatFuncQ(q_paren(a)) / qmqi;
            return std::make_pair(Idx{a - 1, b}, c);
        };
        o.total_degree_change = -1;
        m.actions["Edelta-a1"] = o;
    }

    // diagonal Cartan actions
    m.actions["K1"] = diag([](int a, int b) { return RatFuncQ::q_power(2 * a + b); });
    m.actions["K1^-1"] = diag([](int a, int b) { return RatFuncQ::q_power(-(2 * a + b)); });
    m.actions["K2"] = diag([](int a, int b) { return RatFuncQ::q_power(b - a); });
    m.actions["K2^-1"] = diag([](int a, int b) { return RatFuncQ::q_power(a - b); });
    m.actions["K0"] = diag([](int a, int b) { return RatFuncQ::q_power(-2 * b - a); });
    m.actions["K0^-1"] = diag([](int a, int b) { return RatFuncQ::q_power(2 * b + a); });
    // phi+_{1,1} = -K_1 on the whole module
    m.actions["phi+1,1"] = diag([](int a, int b) { return RatFuncQ(-1) * RatFuncQ::q_power(2 * a + b); });

    // annihilating generators within the window
    for (const char* z : {"x+1,1", "x+1,2", "x+2,1", "x+2,2", "x-2,1", "x-2,2", "x-1,2", "x-1,3",
                          "phi+1,2", "phi+1,3", "phi+2,1", "phi+2,2", "Edelta-a2", "E2delta-a1",
                          "E2delta-a1a2"})
        m.actions[z] = zero_op();
    return m;
}

namespace detail {
inline std::string idx_str(Idx i) {
    return "v_{" + std::to_string(i.first) + "," + std::to_string(i.second) + "}";
}
} // namespace detail

// Exact operator identities on the interior region a + b <= depth - margin.
inline CheckList verify_l1_relations(const L1Model& m, int margin) {
    CheckList out;
    if (margin < 3) throw std::invalid_argument("verify_l1_relations: margin must cover Serre words");
    const int inner = m.depth - margin;
    std::vector<Idx> interior;
    for (int a = 0; a <= inner; ++a)
        for (int b = 0; a + b <= inner; ++b) interior.emplace_back(a, b);

    auto equal_on_interior = [&](const std::vector<std::string>& w1, const RatFuncQ& c1,
                                 const std::vector<std::string>& w2, const RatFuncQ& c2,
                                 const std::vector<std::string>& w3 = {}, const RatFuncQ& c3 = RatFuncQ(0),
                                 Idx* witness = nullptr) {
        for (Idx i : interior) {
            Vec lhs = m.apply_word(w1, i);
            Vec acc;
            for (const auto& [k, v] : lhs) acc[k] = c1 * v;
            Vec r2 = m.apply_word(w2, i);
            for (const auto& [k, v] : r2) {
                acc[k] += c2 * v;
                if (acc[k].is_zero()) acc.erase(k);
            }
            if (!w3.empty() || !c3.is_zero()) {
                Vec r3 = m.apply_word(w3, i);
                for (const auto& [k, v] : r3) {
                    acc[k] += c3 * v;
                    if (acc[k].is_zero()) acc.erase(k);
                }
            }
            if (!acc.empty()) {
                if (witness) *witness = i;
                return false;
            }
        }
        return true;
    };

    RatFuncQ q = RatFuncQ::q_power(1), qi = RatFuncQ::q_power(-1);
    RatFuncQ qmqi = q - qi;
    RatFuncQ two(q_bracket(2));
    Idx w{0, 0};

    // K-conjugation of every non-Cartan generator: K_x G K_x^{-1} = q^{pair} G.
    struct KPair {
        const char* K;
        const char* Kinv;
        int pair_with[5]; // pairing against E1, E2, E0, Ea12, Edelta-a1
    };
    // weights: E1 ~ alpha_1, E2(as x+2,0) ~ alpha_2, E0 ~ -(a1+a2),
    // Ea12 ~ a1+a2, Edelta-a1 ~ -a1
    const char* gens[5] = {"x+1,0", "x+2,0", "E0", "Ea12", "Edelta-a1"};
    const int wt1[5] = {2, -1, -1, 1, -2};  // pairing with alpha_1 row
    const int wt2[5] = {-1, 2, -1, 1, 1};   // pairing with alpha_2 row
    bool kconj = true;
    for (int g = 0; g < 5; ++g) {
        if (!equal_on_interior({"K1", gens[g], "K1^-1"}, RatFuncQ(1), {gens[g]},
                               RatFuncQ(0) - RatFuncQ::q_power(wt1[g]), {}, RatFuncQ(0), &w))
            kconj = false;
        if (!equal_on_interior({"K2", gens[g], "K2^-1"}, RatFuncQ(1), {gens[g]},
                               RatFuncQ(0) - RatFuncQ::q_power(wt2[g]), {}, RatFuncQ(0), &w))
            kconj = false;
    }
    out.add("L1: K-conjugation weights of all generators", kconj,
            kconj ? "" : "fails at " + detail::idx_str(w));

    // K0 K1 K2 = 1
    out.add("L1: K0 K1 K2 acts as the identity",
            equal_on_interior({"K0", "K1", "K2"}, RatFuncQ(1), {}, RatFuncQ(-1), {}, RatFuncQ(0), &w));

    // [x+_{1,0}, x-_{1,1}] = phi+_{1,1}/(q - q^{-1})
    out.add("L1: [x+_{1,0}, x-_{1,1}] = phi+_{1,1}/(q-q^{-1})",
            equal_on_interior({"x+1,0", "x-1,1"}, RatFuncQ(1), {"x-1,1", "x+1,0"}, RatFuncQ(-1),
                              {"phi+1,1"}, RatFuncQ(0) - RatFuncQ(1) / qmqi, &w),
            "", 0);

    // E_{a1+a2} E_1 = q E_1 E_{a1+a2}
    out.add("L1: E_{a1+a2} E_1 = q E_1 E_{a1+a2}",
            equal_on_interior({"Ea12", "x+1,0"}, RatFuncQ(1), {"x+1,0", "Ea12"}, RatFuncQ(0) - q, {},
                              RatFuncQ(0), &w));
    // E_2 E_1 = q^{-1} E_1 E_2 - E_{a1+a2}: pins the x+_{2,0} coefficient
    out.add("L1: E_2 E_1 = q^{-1} E_1 E_2 - E_{a1+a2}",
            equal_on_interior({"x+2,0", "x+1,0"}, RatFuncQ(1), {"x+1,0", "x+2,0"}, RatFuncQ(0) - qi,
                              {"Ea12"}, RatFuncQ(1), &w),
            "pins the corrected exponent -q^{1-a}(a)_q");
    // E_2 E_{a1+a2} = q E_{a1+a2} E_2
    out.add("L1: E_2 E_{a1+a2} = q E_{a1+a2} E_2",
            equal_on_interior({"x+2,0", "Ea12"}, RatFuncQ(1), {"Ea12", "x+2,0"}, RatFuncQ(0) - q, {},
                              RatFuncQ(0), &w));
    // E_0 E_1 = q^{-1} E_1 E_0  (x-_{2,1} acts by zero)
    out.add("L1: E_0 E_1 = q^{-1} E_1 E_0 - K_2^{-1} x-_{2,1} (last term zero here)",
            equal_on_interior({"E0", "x+1,0"}, RatFuncQ(1), {"x+1,0", "E0"}, RatFuncQ(0) - qi, {},
                              RatFuncQ(0), &w));
    // E_0 E_2 = q^{-1} E_2 E_0 + K_1^{-1} x-_{1,1}
    out.add("L1: E_0 E_2 = q^{-1} E_2 E_0 + K_1^{-1} x-_{1,1}",
            equal_on_interior({"E0", "x+2,0"}, RatFuncQ(1), {"x+2,0", "E0"}, RatFuncQ(0) - qi,
                              {"K1^-1", "x-1,1"}, RatFuncQ(-1), &w));

    // quantum Serre for every ordered pair among {E0, E1, E2}
    const char* es[3] = {"E0", "x+1,0", "x+2,0"};
    bool serre_ok = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            bool ok = equal_on_interior({es[i], es[i], es[j]}, RatFuncQ(1), {es[i], es[j], es[i]},
                                        RatFuncQ(0) - two, {es[j], es[i], es[i]}, RatFuncQ(1), &w);
            if (!ok) serre_ok = false;
        }
    out.add("L1: quantum Serre relations among E0, E1, E2", serre_ok,
            serre_ok ? "" : "fails at " + detail::idx_str(w));

    // one-dimensional weight spaces: (a,b) -> (2a+b, b-a) is injective
    std::set<std::pair<int, int>> weights;
    bool inj = true;
    for (int a = 0; a + 0 <= m.depth; ++a)
        for (int b = 0; a + b <= m.depth; ++b)
            if (!weights.insert({2 * a + b, b - a}).second) inj = false;
    out.add("L1: weight map (a,b) -> (2a+b, b-a) is injective", inj);

    // raising/lowering consistency: x-_{1,1} x+_{1,0} is diagonal with
    // eigenvalue q^b (a+1)_q / (q-q^{-1})
    bool diag_ok = true;
    for (Idx i : interior) {
        Vec v = m.apply_word({"x-1,1", "x+1,0"}, i);
        RatFuncQ expect = RatFuncQ::q_power(i.second) * RatFuncQ(q_paren(i.first + 1)) / qmqi;
        if (v.size() != 1 || v.begin()->first != i || v.begin()->second != expect) diag_ok = false;
    }
    out.add("L1: x-_{1,1} x+_{1,0} diagonal with eigenvalue q^b (a+1)_q/(q-q^{-1})", diag_ok);
    return out;
}

// Lowest weight data of v_{0,0}: the series phi_1^+ encodes (1 - z), the
// node-2 series is 1, and the listed lowering family annihilates it.
inline CheckList verify_lowest_weight(const L1Model& m) {
    CheckList out;
    Idx o{0, 0};
    auto scalar_on_vac = [&](const std::string& g) -> std::optional<RatFuncQ> {
        Vec v = m.apply(g, m.basis(o));
        if (v.empty()) return RatFuncQ(0);
        if (v.size() == 1 && v.begin()->first == o) return v.begin()->second;
        return std::nullopt;
    };
    auto expect = [&](const std::string& g, const RatFuncQ& val) {
        auto s = scalar_on_vac(g);
        bool ok = s && *s == val;
        out.add("L1 lowest weight: " + g + " on v_{0,0}", ok,
                ok ? "" : "unexpected action on the vacuum");
    };
    expect("K1", RatFuncQ(1));          // phi+_{1,0} = 1
    expect("phi+1,1", RatFuncQ(-1));    // coefficient of z in (1 - z)
    expect("phi+1,2", RatFuncQ(0));
    expect("phi+1,3", RatFuncQ(0));
    expect("K2", RatFuncQ(1));          // phi_2^+ = 1
    expect("phi+2,1", RatFuncQ(0));
    expect("phi+2,2", RatFuncQ(0));
    for (const char* g : {"x-1,1", "x-1,2", "x-2,1", "x-2,2", "x+2,0", "Edelta-a1", "Edelta-a2",
                          "E2delta-a1", "E2delta-a1a2", "E0"})
        expect(g, RatFuncQ(0));
    return out;
}

} // namespace prefund
} // namespace qtheta
