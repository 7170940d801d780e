#include "doctest.h"

#include "qtheta/prefund.hpp"

using namespace qtheta;
using namespace qtheta::prefund;

TEST_CASE("explicit action values") {
    auto m = build_l1(8);
    RatFuncQ qmqi = RatFuncQ::q_power(1) - RatFuncQ::q_power(-1);
    // x-_{1,1} v_{2,1} = q (2)_q/(q-q^{-1}) v_{1,1} = q(1+q^2)/(q-q^{-1}) v_{1,1}
    Vec v = m.apply("x-1,1", m.basis({2, 1}));
    REQUIRE(v.size() == 1);
    CHECK(v.begin()->first == Idx{1, 1});
    CHECK(v.begin()->second ==
          RatFuncQ::q_power(1) * RatFuncQ(LaurentQ(1) + LaurentQ::q_power(2)) / qmqi);
    // E_0 v_{0,0} = 0
    CHECK(m.apply("E0", m.basis({0, 0})).empty());
    // K_1 v_{3,2} = q^8 v_{3,2}
    Vec k = m.apply("K1", m.basis({3, 2}));
    CHECK(k.begin()->second == RatFuncQ::q_power(8));
    // [x+_{1,0}, x-_{1,1}] v_{a,b} = -q^{2a+b}/(q-q^{-1}) v_{a,b}
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 3; ++b) {
            Vec lhs = m.apply("x+1,0", m.apply("x-1,1", m.basis({a, b})));
            Vec rhs = m.apply("x-1,1", m.apply("x+1,0", m.basis({a, b})));
            RatFuncQ commu(0);
            if (!lhs.empty()) commu += lhs.begin()->second;
            if (!rhs.empty()) commu -= rhs.begin()->second;
            CHECK(commu == RatFuncQ(-1) * RatFuncQ::q_power(2 * a + b) / qmqi);
        }
}

TEST_CASE("truncation rim behavior") {
    auto m = build_l1(3);
    // raising at the rim drops
    CHECK(m.apply("x+1,0", m.basis({2, 1})).empty());
    CHECK(m.apply("Ea12", m.basis({1, 2})).empty());
    // lowering never leaves the basis
    CHECK_FALSE(m.apply("x-1,1", m.basis({2, 1})).empty());
}

TEST_CASE("Serre on a small vector, step by step") {
    auto m = build_l1(8);
    // E1^2 E2 - [2] E1 E2 E1 + E2 E1^2 annihilates v_{1,1}
    RatFuncQ two(q_bracket(2));
    Vec t1 = m.apply_word({"x+1,0", "x+1,0", "x+2,0"}, {1, 1});
    Vec t2 = m.apply_word({"x+1,0", "x+2,0", "x+1,0"}, {1, 1});
    Vec t3 = m.apply_word({"x+2,0", "x+1,0", "x+1,0"}, {1, 1});
    Vec acc = t1;
    for (auto& [k, c] : t2) {
        acc[k] -= two * c;
        if (acc[k].is_zero()) acc.erase(k);
    }
    for (auto& [k, c] : t3) {
        acc[k] += c;
        if (acc[k].is_zero()) acc.erase(k);
    }
    CHECK(acc.empty());
}

TEST_CASE("full relation suite at depth 12, margin 3") {
    auto m = build_l1(12);
    auto rep = verify_l1_relations(m, 3);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.detail);
        CHECK(c.pass);
    }
    auto low = verify_lowest_weight(m);
    for (const auto& c : low.checks) {
        INFO(c.name, " ", c.detail);
        CHECK(c.pass);
    }
}
