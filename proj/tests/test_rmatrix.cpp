#include "doctest.h"

#include "qtheta/thetaq.hpp"

using namespace qtheta;
using namespace qtheta::rmat;

namespace {
struct Fixture {
    qaff::QAffine U;
    ThetaWindow W;
    prefund::L1Model model = prefund::build_l1(8);
};
} // namespace

TEST_CASE("monodromy entries at small indices") {
    Fixture fx;
    auto plus = rplus_monodromy(fx.W, fx.model, 3);
    auto minus = rminus_monodromy(fx.W, fx.model, 3);
    RatFuncQ qmqi = RatFuncQ::q_power(1) - RatFuncQ::q_power(-1);
    // (0,0): both entries are 1
    CHECK(plus.plus.at({0, 0}) == fx.W.one());
    CHECK(minus.minus.at({0, 0}) == fx.W.one());
    // (0,1): t+ = (q-q^{-1})/(1)_q! [x-_{1,0},x-_{2,0}]_q
    CHECK(plus.plus.at({0, 1}) == qmqi * fx.W.L2());
    // (1,0): t- = -x+_{1,-1} K_1 z
    CHECK(minus.minus.at({1, 0}) ==
          RatFuncQ(-1) * (fx.W.gen(fx.W.e1m) * fx.W.gen(fx.W.K1)));
    // closed-form match across the window
    auto rep = verify_monodromy(fx.W, fx.model, plus, minus, 3);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("assembled Theta_1 equals the closed form; K letters cancel") {
    Fixture fx;
    auto plus = rplus_monodromy(fx.W, fx.model, 3);
    auto minus = rminus_monodromy(fx.W, fx.model, 3);
    auto theta = assemble_theta1(fx.W, plus, minus, 3);
    auto closed = theta_closed(fx.W, 3);
    CHECK(theta == closed);
    // Theta_{1,alpha_1} = (q-q^{-1}) x-_{1,0} (x) x+_{1,-1} z
    RatFuncQ qmqi = RatFuncQ::q_power(1) - RatFuncQ::q_power(-1);
    TensKey k{Word{fx.W.f1}, Word{fx.W.e1m}, 1};
    REQUIRE(theta.terms().count(k) == 1);
    CHECK(theta.terms().at(k) == qmqi);
    // depth-2 component (2,0): coefficient (q-q^{-1})^2/(2)_q!
    TensKey k2{Word{fx.W.f1, fx.W.f1}, Word{fx.W.e1m, fx.W.e1m}, 2};
    REQUIRE(theta.terms().count(k2) == 1);
    CHECK(theta.terms().at(k2) == qmqi * qmqi / RatFuncQ(q_paren(2)));
}

TEST_CASE("q-commutation scalars of the block letters") {
    Fixture fx;
    auto dj = fx.W.dj_map(fx.U);
    RatFuncQ q = RatFuncQ::q_power(1), qi = RatFuncQ::q_power(-1);
    // the left blocks q-commute with scalar q^{-1} (a Serre consequence)
    CHECK(fx.U.is_zero(dj.apply(fx.W.gen(fx.W.f1) * fx.W.L2() - qi * (fx.W.L2() * fx.W.gen(fx.W.f1)))));
    // the right blocks also carry q^{-1}; the reading with q fails
    CHECK(fx.U.is_zero(dj.apply(fx.W.gen(fx.W.e1m) * fx.W.R2() - qi * (fx.W.R2() * fx.W.gen(fx.W.e1m)))));
    CHECK_FALSE(
        fx.U.is_zero(dj.apply(fx.W.gen(fx.W.e1m) * fx.W.R2() - q * (fx.W.R2() * fx.W.gen(fx.W.e1m)))));
}

TEST_CASE("full comparison suite at depth 3") {
    Fixture fx;
    auto bundle = build_theta_bundle(fx.W, fx.model, 3);
    auto rep = compare_theta_closed(fx.U, fx.W, bundle, 3, 10);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.detail);
        if (c.name.find("(as printed)") != std::string::npos ||
            c.name.find("commute modulo relations (as stated)") != std::string::npos) {
            CHECK_FALSE(c.pass); // documented source errata, must fail honestly
        } else {
            CHECK(c.pass);
        }
    }
}

TEST_CASE("Theta_2 through the diagram swap") {
    Fixture fx;
    auto bundle = build_theta_bundle(fx.W, fx.model, 3);
    auto rep = theta2_via_psi(fx.W, bundle, 3);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("Finkelberg-Tsymbaliuk compatibility") {
    Fixture fx;
    auto rep = verify_ft_compatibility(fx.U, fx.W, 8);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.detail);
        CHECK(c.pass);
    }
}
