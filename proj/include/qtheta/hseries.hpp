#pragma once

#include <map>

#include "qtheta/qnum.hpp"
#include "qtheta/report.hpp"
#include "qtheta/seriesz.hpp"

namespace qtheta {
namespace cartan {

using CPq = CommPoly<RatFuncQ>;
using SeriesQ = SeriesZ<CPq>;

// Symbol keys on the quantum side: phi^-_{i,-s} (s >= 1), phi^+_{i,0},
// and the Drinfeld-Cartan elements h_{i,-s}.
inline int phi_minus_symbol(int i, int s) { return 100000 + i * 1024 + s; }
inline int phi_plus0_symbol(int i) { return 200000 + i; }
inline int h_symbol(int i, int s) { return 300000 + i * 1024 + s; }

inline std::string quantum_symbol_name(int sym) {
    if (sym >= 300000) {
        int r = sym - 300000;
        return "h" + std::to_string(r / 1024) + ",-" + std::to_string(r % 1024);
    }
    if (sym >= 200000) return "phi+" + std::to_string(sym - 200000) + ",0";
    int r = sym - 100000;
    return "phi-" + std::to_string(r / 1024) + ",-" + std::to_string(r % 1024);
}

// Inversion of phi_i^-(z) = phi^-_{i,0} exp(-(q-q^{-1}) sum_{s>0} h_{i,-s} z^{-s}):
// returns h_{i,-s} as polynomials in phi^-_{i,-s'} and phi^+_{i,0} for s <= M.
// (phi^+_{i,0} = (phi^-_{i,0})^{-1}, so multiplying through by it makes the
// series start at 1 and the logarithm well defined.)
inline std::map<std::pair<int, int>, CPq> extract_h_from_phi(int M, int nodes = 2) {
    if (M < 1) throw std::invalid_argument("extract_h_from_phi: M >= 1 required");
    std::map<std::pair<int, int>, CPq> out;
    RatFuncQ qmq = RatFuncQ::q_power(1) - RatFuncQ::q_power(-1);
    for (int i = 1; i <= nodes; ++i) {
        SeriesQ phihat = SeriesQ::one(SeriesVar::InvZ, M);
        for (int s = 1; s <= M; ++s)
            phihat.set(s, CPq::symbol(phi_plus0_symbol(i)) * CPq::symbol(phi_minus_symbol(i, s)));
        SeriesQ lg = phihat.log();
        for (int s = 1; s <= M; ++s) out[{i, s}] = (RatFuncQ(-1) / qmq) * lg.coeff(s);
    }
    return out;
}

// Round-trip check: rebuilding phi^+_{i,0} phi_i^-(z) from the extracted h's
// reproduces the original series exactly.
inline CheckList verify_h_extraction(int M, int nodes = 2) {
    CheckList out;
    auto h = extract_h_from_phi(M, nodes);
    RatFuncQ qmq = RatFuncQ::q_power(1) - RatFuncQ::q_power(-1);
    for (int i = 1; i <= nodes; ++i) {
        SeriesQ expo(SeriesVar::InvZ, M);
        for (int s = 1; s <= M; ++s) expo.add(s, (RatFuncQ(0) - qmq) * h[{i, s}]);
        SeriesQ rebuilt = expo.exp();
        SeriesQ phihat = SeriesQ::one(SeriesVar::InvZ, M);
        for (int s = 1; s <= M; ++s)
            phihat.set(s, CPq::symbol(phi_plus0_symbol(i)) * CPq::symbol(phi_minus_symbol(i, s)));
        SeriesQ diff = rebuilt - phihat;
        out.add("h-extraction[M=" + std::to_string(M) + "]: exp/log round trip, node " +
                    std::to_string(i),
                diff.is_zero(), diff.is_zero() ? "residual 0" : "nonzero residual",
                static_cast<long>(diff.coeffs().size()));
    }
    return out;
}

// T_i(z) = exp( sum_{s>0} sum_j C~_{ij}(q^s) h_{j,-s} z^s / [s]_q ) for the
// rank-2 quantum affine algebra; coefficients are polynomials in the
// h_{j,-s} symbols with scalars in Q(q).
struct TSeries {
    int order = 0;
    std::vector<SeriesQ> T; // index 0,1 for nodes 1,2
    CPq T11() const { return T.at(0).coeff(1); }
    CPq T21() const { return T.at(1).coeff(1); }
};

inline TSeries t_series_coefficients(int M) {
    if (M < 1) throw std::invalid_argument("t_series_coefficients: M >= 1 required");
    TSeries out;
    out.order = M;
    const int n = 2;
    for (int i = 1; i <= n; ++i) {
        SeriesQ expo(SeriesVar::PlainZ, M);
        for (int s = 1; s <= M; ++s) {
            auto ct = quantum_cartan_inverse(n, s);
            RatFuncQ inv_bracket = RatFuncQ(q_bracket(s)).inverse();
            CPq coef;
            for (int j = 1; j <= n; ++j)
                coef += (ct[i - 1][j - 1] * inv_bracket) * CPq::symbol(h_symbol(j, s));
            expo.add(s, coef);
        }
        out.T.push_back(expo.exp());
    }
    return out;
}

// The change of basis between (h_{1,-1}, h_{2,-1}) and (T_{1,1}, T_{2,1});
// its exact inversion uses [2]_q^2 - 1 = [3]_q.
inline CheckList verify_t_series(int M) {
    CheckList out;
    TSeries ts = t_series_coefficients(M);
    RatFuncQ two(q_bracket(2)), three(q_bracket(3));
    CPq h11 = CPq::symbol(h_symbol(1, 1));
    CPq h21 = CPq::symbol(h_symbol(2, 1));

    CPq expected_T11 = (two / three) * h11 + (RatFuncQ(1) / three) * h21;
    CPq expected_T21 = (RatFuncQ(1) / three) * h11 + (two / three) * h21;
    out.add("t-series: T_{1,1} = ([2]h_{1,-1} + h_{2,-1})/[3]", ts.T11() == expected_T11);
    out.add("t-series: T_{2,1} = (h_{1,-1} + [2]h_{2,-1})/[3]", ts.T21() == expected_T21);

    // inversion: h_{1,-1} = [2] T_{1,1} - T_{2,1}, h_{2,-1} = [2] T_{2,1} - T_{1,1}
    out.add("t-series: [2]T_{1,1} - T_{2,1} = h_{1,-1}", two * ts.T11() - ts.T21() == h11);
    out.add("t-series: [2]T_{2,1} - T_{1,1} = h_{2,-1}", two * ts.T21() - ts.T11() == h21);
    out.add("t-series: [2]^2 - 1 = [3]", two * two - RatFuncQ(1) == three);
    // constant coefficient of T_i(z) is 1
    out.add("t-series: T_i(0) = 1",
            ts.T[0].coeff(0) == CPq(1) && ts.T[1].coeff(0) == CPq(1));
    return out;
}

} // namespace cartan
} // namespace qtheta
