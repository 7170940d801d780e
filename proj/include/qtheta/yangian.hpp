#pragma once

#include <functional>
#include <sstream>

#include "qtheta/report.hpp"
#include "qtheta/slalg.hpp"

namespace qtheta {
namespace yang {

using El = NcElem<Rational>;
using Tens = TensorElem<Rational>;

// y = sum_{1 <= j <= i < k <= n+1} E_{kj} (x) E_{jk}; the generating element
// of the Theta series of node i.
inline Tens y_element(const SlAlgebra& g, int i, int H) {
    Tens y(g.alphabet(), H);
    for (auto [j, k] : g.box_pairs(i))
        y += Tens::simple(g.e(k, j), g.e(j, k), H);
    return y;
}

// Closed form of the Theta series of the Yangian Y(sl_{n+1}) at node i:
// Theta_i = exp(y), truncated at height H and brought to the PBW word
// basis. The weight components carry no power of z at all.
inline Tens theta_closed_form(const SlAlgebra& g, int i, int H) {
    return exponential(y_element(g, i, H), ExpFlavor::Classical).reduced(g.rules());
}

// x (x) 1 and 1 (x) x as truncated tensors.
inline Tens lhs_tensor(const SlAlgebra& g, const El& x, int H) {
    return Tens::simple(x, g.one(), H);
}
inline Tens rhs_tensor(const SlAlgebra& g, const El& x, int H, int zdeg = 0) {
    return Tens::simple(g.one(), x, H, zdeg);
}

// Source term of the intertwining system at node i, with the diagonal
// contributions folded into xi_i (x) x+_{i,0}:
//   xi_i (x) E_{i,i+1} + sum_{j<i} E_{ij} (x) E_{j,i+1}
//                      - sum_{k>=i+2} E_{k,i+1} (x) E_{ik}.
inline Tens source_term(const SlAlgebra& g, int i, int H) {
    Tens s = Tens::simple(g.gen(g.xi(i)), g.e(i, i + 1), H);
    for (int j = 1; j < i; ++j) s += Tens::simple(g.e(i, j), g.e(j, i + 1), H);
    for (int k = i + 2; k <= g.n() + 1; ++k) s -= Tens::simple(g.e(k, i + 1), g.e(i, k), H);
    return s;
}

inline std::string residual_detail(const Tens& r, size_t max_terms = 4) {
    if (r.is_zero()) return "residual 0";
    std::ostringstream os;
    os << r.term_count() << " residual terms";
    size_t shown = 0;
    for (const auto& [k, c] : r.terms()) {
        if (shown++ >= max_terms) { os << ", ..."; break; }
        os << "; (" << scalar_str(c) << ")*" << r.alphabet()->word_name(k.left) << "(x)"
           << r.alphabet()->word_name(k.right);
        if (k.zdeg) os << " z^" << k.zdeg;
    }
    return os.str();
}

// The image of J(x+_{i,0}) in the current presentation: x+_{i,1} plus the
// quadratic tail in elementary matrices, with the two diagonal summands
// folded into -1/4 {x+_{i,0}, xi_{i,0}}.
inline El j_to_current(const SlAlgebra& g, int i) {
    Rational quarter(1, 4);
    El tail(g.alphabet());
    for (int k = i + 2; k <= g.n() + 1; ++k)
        tail += g.e(i, k) * g.e(k, i + 1) + g.e(k, i + 1) * g.e(i, k);
    for (int j = 1; j < i; ++j)
        tail -= g.e(j, i + 1) * g.e(i, j) + g.e(i, j) * g.e(j, i + 1);
    El ei = g.e(i, i + 1), xii = g.gen(g.xi(i));
    tail -= ei * xii + xii * ei;
    return g.gen(g.xplus1(i)) + quarter * tail;
}

// The four commutation relations of exp(y) used to solve the intertwining
// system, checked as identities of truncated tensors after PBW reduction,
// together with the bracket computations behind them.
inline CheckList verify_lemma_commutators(const SlAlgebra& g, int i, int H) {
    CheckList out;
    const auto& rules = g.rules();
    Tens y = y_element(g, i, H);
    Tens expy = theta_closed_form(g, i, H);
    const std::string tag = "n=" + std::to_string(g.n()) + ",i=" + std::to_string(i) +
                            ",H=" + std::to_string(H);

    El ei = g.e(i, i + 1);
    Tens x_left = lhs_tensor(g, ei, H);

    // ad chain of x+_{i,0} (x) 1 against y.
    Tens c1 = ((x_left * y) - (y * x_left)).reduced(rules); // [x,y]
    Tens c2 = ((c1 * y) - (y * c1)).reduced(rules);         // [[x,y],y]
    Tens c3 = ((c2 * y) - (y * c2)).reduced(rules);         // [[[x,y],y],y]

    Tens expected_c1(g.alphabet(), H);
    expected_c1 += Tens::simple(g.gen(g.xi(i)), ei, H);
    for (int j = 1; j < i; ++j) expected_c1 += Tens::simple(g.e(i, j), g.e(j, i + 1), H);
    for (int k = i + 1; k <= g.n() + 1; ++k)
        if (k >= i + 2) expected_c1 -= Tens::simple(g.e(k, i + 1), g.e(i, k), H);
    Tens d1 = (c1 - expected_c1).reduced(rules);
    out.add("lemma[" + tag + "]: [x+_{i,0}(x)1, y] value", d1.is_zero(), residual_detail(d1),
            static_cast<long>(d1.term_count()));

    Tens expected_c2(g.alphabet(), H);
    for (auto [j, k] : g.box_pairs(i))
        expected_c2 -= Rational(2) * Tens::simple(g.e(k, j), g.e(j, i + 1) * g.e(i, k), H);
    Tens d2 = (c2 - expected_c2).reduced(rules);
    out.add("lemma[" + tag + "]: [[x,y],y] = -2 sum E_{kj}(x)E_{j,i+1}E_{ik}", d2.is_zero(),
            residual_detail(d2), static_cast<long>(d2.term_count()));
    out.add("lemma[" + tag + "]: ad_{-y}^3(x+_{i,0}(x)1) = 0", c3.is_zero(), residual_detail(c3),
            static_cast<long>(c3.term_count()));

    // Relation 1: [1 (x) x+_{i,0}, exp(y)] = 0.
    Tens r1 = (rhs_tensor(g, ei, H) * expy - expy * rhs_tensor(g, ei, H)).reduced(rules);
    out.add("lemma[" + tag + "]: [1(x)x+_{i,0}, exp(y)] = 0", r1.is_zero(), residual_detail(r1),
            static_cast<long>(r1.term_count()));

    // Relation 2: [x+_{i,0} (x) 1, exp(y)] = exp(y) (c1 + c2/2).
    Tens lhs2 = (x_left * expy - expy * x_left).reduced(rules);
    Tens rhs2 = (expy * (expected_c1 + Rational(1, 2) * expected_c2)).reduced(rules);
    Tens d4 = lhs2 - rhs2;
    out.add("lemma[" + tag + "]: [x+_{i,0}(x)1, exp(y)] relation", d4.is_zero(), residual_detail(d4),
            static_cast<long>(d4.term_count()));

    // Relation 3 is an axiom of the extended algebra; check its weight
    // consistency and its derivation from the J-image fixture:
    // [J-tail, E_{jk}] must reduce to -E_{ik} E_{j,i+1} for all box pairs.
    bool weights_ok = true, fixture_ok = true;
    El quad = j_to_current(g, i) - g.gen(g.xplus1(i));
    for (auto [j, k] : g.box_pairs(i)) {
        El rhs = g.e(i, k) * g.e(j, i + 1);
        WeightVec lw = g.alphabet()->weight(g.xplus1(i)) + g.alphabet()->weight(g.E(j, k));
        if (rhs.weight() != lw) weights_ok = false;
        El br = reduce_pbw(commutator(quad, g.e(j, k)), rules);
        El expect = reduce_pbw(-rhs, rules);
        if (br != expect) fixture_ok = false;
    }
    out.add("lemma[" + tag + "]: [x+_{i,1}, E_{jk}] weight consistency", weights_ok);
    out.add("lemma[" + tag + "]: [x+_{i,1}, E_{jk}] matches the J-image bracket", fixture_ok);

    // Relation 4: [1 (x) x+_{i,1}, exp(y)] = exp(y) sum E_{kj}(x)E_{j,i+1}E_{ik}.
    Tens x1_right = rhs_tensor(g, g.gen(g.xplus1(i)), H);
    Tens lhs4 = (x1_right * expy - expy * x1_right).reduced(rules);
    Tens rhs4(g.alphabet(), H);
    for (auto [j, k] : g.box_pairs(i))
        rhs4 += Tens::simple(g.e(k, j), g.e(j, i + 1) * g.e(i, k), H);
    rhs4 = (expy * rhs4).reduced(rules);
    Tens d5 = lhs4 - rhs4;
    out.add("lemma[" + tag + "]: [1(x)x+_{i,1}, exp(y)] relation", d5.is_zero(), residual_detail(d5),
            static_cast<long>(d5.term_count()));
    return out;
}

// Residual of the full intertwining system for a candidate Theta series.
// Every weight and z component of every equation must reduce to zero.
inline CheckList verify_intertwining_for(const SlAlgebra& g, int i, int H, const Tens& theta,
                                         const std::string& label) {
    CheckList out;
    const auto& rules = g.rules();
    for (int j = 1; j <= g.n(); ++j) {
        Tens residual(g.alphabet(), H);
        if (j != i) {
            Tens a = lhs_tensor(g, g.e(j, j + 1), H) + rhs_tensor(g, g.e(j, j + 1), H);
            residual = (a * theta - theta * a).reduced(rules);
        } else {
            Tens a = lhs_tensor(g, g.e(i, i + 1), H) + rhs_tensor(g, g.gen(g.xplus1(i)), H) -
                     rhs_tensor(g, g.e(i, i + 1), H, /*zdeg=*/1);
            residual = ((a * theta - theta * a) - theta * source_term(g, i, H)).reduced(rules);
        }
        std::ostringstream name;
        name << label << ": equation j=" << j << " (n=" << g.n() << ", i=" << i << ", H=" << H << ")";
        out.add(name.str(), residual.is_zero(), residual_detail(residual),
                static_cast<long>(residual.term_count()));
    }
    return out;
}

inline CheckList verify_intertwining(const SlAlgebra& g, int i, int H) {
    return verify_intertwining_for(g, i, H, theta_closed_form(g, i, H), "intertwining/closed-form");
}

// ---------------------------------------------------------------------------
// Recursive solver: determines Theta_i component by component from the
// projected intertwining equations, by exact linear algebra over Q on PBW
// word bases (left: lowering words, right: raising words, z-degrees 0..H).
// Uniqueness is asserted through a full-column-rank check, and z-independence
// comes out as the zero solution in every positive z-degree.
// ---------------------------------------------------------------------------

namespace detail {

// Nondecreasing words over `letters` with the exact target weight.
inline std::vector<Word> pbw_words(const Alphabet& a, const std::vector<Gid>& letters,
                                   const WeightVec& target) {
    std::vector<Word> out;
    int want = weight_height(target);
    Word acc;
    std::function<void(size_t, WeightVec, int)> rec = [&](size_t min_idx, WeightVec rest, int rest_h) {
        if (weight_height(rest) == 0 && rest == weight_zero(a.rank())) {
            out.push_back(acc);
            return;
        }
        for (size_t t = min_idx; t < letters.size(); ++t) {
            const WeightVec& w = a.weight(letters[t]);
            int h = weight_height(w);
            // every letter moves the height monotonically for pure
            // raising/lowering alphabets
            if ((rest_h > 0 && h <= 0) || (rest_h < 0 && h >= 0)) continue;
            if (std::abs(h) > std::abs(rest_h)) continue;
            bool feasible = true;
            WeightVec next = rest - w;
            if (rest_h > 0) {
                for (int c = 0; c < a.rank(); ++c)
                    if (next[c] < 0) { feasible = false; break; }
            } else {
                for (int c = 0; c < a.rank(); ++c)
                    if (next[c] > 0) { feasible = false; break; }
            }
            if (!feasible) continue;
            acc.push_back(letters[t]);
            rec(t, next, rest_h - h);
            acc.pop_back();
        }
    };
    rec(0, target, want);
    (void)want;
    return out;
}

// Weights beta in Q_+ with height exactly h.
inline std::vector<WeightVec> weights_of_height(int rank, int h) {
    std::vector<WeightVec> out;
    WeightVec acc(rank, 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == rank - 1) {
            acc[pos] = rest;
            out.push_back(acc);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            acc[pos] = v;
            rec(pos + 1, rest - v);
        }
    };
    if (h >= 0) rec(0, h);
    return out;
}

} // namespace detail

struct ThetaSolveResult {
    Tens theta;          // the solved series (z-degree 0 components)
    bool unique = true;  // every linear system had full column rank
    bool z_independent = true;
    bool consistent = true;
    std::string detail;
};

inline ThetaSolveResult solve_theta_recursive(const SlAlgebra& g, int i, int H) {
    const auto& rules = g.rules();
    const Alphabet& a = *g.alphabet();
    ThetaSolveResult res;
    res.theta = Tens::one(g.alphabet(), H);
    std::vector<Gid> lows = g.lowering_letters();
    std::vector<Gid> ups = g.raising_letters();
    const int zmax = H;
    std::ostringstream log;

    // components solved so far, stored per weight: map word-pair -> coef per zdeg
    // (kept inside res.theta; extraction below).
    auto component = [&](const WeightVec& beta) {
        Tens t(g.alphabet(), H);
        for (const auto& [k, c] : res.theta.terms())
            if (a.word_weight(k.right) == beta) t.add_term(k, c);
        return t;
    };

    for (int h = 1; h <= H; ++h) {
        for (const WeightVec& beta : detail::weights_of_height(g.n(), h)) {
            std::vector<Word> lwords = detail::pbw_words(a, lows, -beta);
            std::vector<Word> rwords = detail::pbw_words(a, ups, beta);
            if (lwords.empty() || rwords.empty())
                throw std::logic_error("solve_theta_recursive: empty PBW basis");

            std::map<std::pair<Word, Word>, int> col_of;
            for (const auto& lw : lwords)
                for (const auto& rw : rwords)
                    col_of[{lw, rw}] = static_cast<int>(col_of.size());
            int ncols = static_cast<int>(col_of.size());

            // rows: (equation node, left word, right word) -> row id
            std::map<std::tuple<int, Word, Word>, int> row_of;
            auto row_id = [&](int j, const Word& wl, const Word& wr) {
                auto key = std::make_tuple(j, wl, wr);
                auto it = row_of.find(key);
                if (it != row_of.end()) return it->second;
                int id = static_cast<int>(row_of.size());
                row_of.emplace(key, id);
                return id;
            };

            LinearSystem<Rational> sys;
            sys.ncols = ncols;
            std::vector<std::map<int, Rational>> cols_rows; // transposed fill helper
            std::map<int, std::map<int, Rational>> matrix_rows;

            for (int j = 1; j <= g.n(); ++j) {
                El ej = g.e(j, j + 1);
                for (const auto& [pair_key, col] : col_of) {
                    const auto& [lw, rw] = pair_key;
                    El left = El::word(&a, lw);
                    El br = reduce_pbw(ej * left - left * ej, rules);
                    for (const auto& [w, c] : br.terms()) {
                        int r = row_id(j, w, rw);
                        matrix_rows[r][col] += c;
                        if (matrix_rows[r][col].is_zero()) matrix_rows[r].erase(col);
                    }
                }
            }

            // Right-hand sides per z-degree.
            std::vector<std::map<int, Rational>> rhs(zmax + 1);
            auto add_rhs_tens = [&](int j, const Tens& t, int sign) {
                for (const auto& [k, c] : t.terms()) {
                    if (a.word_weight(k.right) != beta) continue;
                    if (k.zdeg < 0 || k.zdeg > zmax)
                        throw std::logic_error("solve_theta_recursive: z-degree out of range");
                    int r = row_id(j, k.left, k.right);
                    Rational v = Rational(sign) * c;
                    rhs[k.zdeg][r] += v;
                    if (rhs[k.zdeg][r].is_zero()) rhs[k.zdeg].erase(r);
                }
            };

            for (int j = 1; j <= g.n(); ++j) {
                if (j == i) continue;
                WeightVec bprev = beta;
                bprev[j - 1] -= 1;
                if (!weight_is_nonneg(bprev)) continue;
                Tens prev = component(bprev);
                Tens t = (rhs_tensor(g, g.e(j, j + 1), H) * prev - prev * rhs_tensor(g, g.e(j, j + 1), H))
                             .reduced(rules);
                add_rhs_tens(j, t, -1);
            }
            {
                WeightVec bprev = beta;
                bprev[i - 1] -= 1;
                if (weight_is_nonneg(bprev)) {
                    Tens prev = component(bprev);
                    Tens x1r = rhs_tensor(g, g.gen(g.xplus1(i)), H);
                    Tens t1 = (x1r * prev - prev * x1r).reduced(rules);
                    add_rhs_tens(i, t1, -1);
                    // + z [1 (x) x+_{i,0}, Theta_{beta-alpha_i}]
                    Tens x0r = rhs_tensor(g, g.e(i, i + 1), H, /*zdeg=*/1);
                    Tens t2 = (x0r * prev - prev * x0r).reduced(rules);
                    add_rhs_tens(i, t2, +1);
                    // + Theta_{beta-alpha_i} (xi_i (x) x+_{i,0})
                    Tens t3 = (prev * Tens::simple(g.gen(g.xi(i)), g.e(i, i + 1), H)).reduced(rules);
                    add_rhs_tens(i, t3, +1);
                }
                for (int j = 1; j < i; ++j) {
                    WeightVec bp = beta - a.weight(g.E(j, i + 1));
                    if (!weight_is_nonneg(bp)) continue;
                    Tens prev = component(bp);
                    Tens t = (prev * Tens::simple(g.e(i, j), g.e(j, i + 1), H)).reduced(rules);
                    add_rhs_tens(i, t, +1);
                }
                for (int k = i + 2; k <= g.n() + 1; ++k) {
                    WeightVec bp = beta - a.weight(g.E(i, k));
                    if (!weight_is_nonneg(bp)) continue;
                    Tens prev = component(bp);
                    Tens t = (prev * Tens::simple(g.e(k, i + 1), g.e(i, k), H)).reduced(rules);
                    add_rhs_tens(i, t, -1);
                }
            }

            int nrows = static_cast<int>(row_of.size());
            sys.rows.assign(nrows, {});
            for (auto& [r, row] : matrix_rows) sys.rows[r] = std::move(row);

            auto outcome = sys.solve_all(rhs);
            if (outcome.rank < ncols) {
                res.unique = false;
                log << "rank deficiency at beta height " << h << "; ";
            }
            for (int d = 0; d <= zmax; ++d) {
                if (!outcome.solutions[d]) {
                    res.consistent = false;
                    log << "inconsistent system at height " << h << " z^" << d << "; ";
                    continue;
                }
                const auto& sol = *outcome.solutions[d];
                for (const auto& [pair_key, col] : col_of) {
                    if (sol[col].is_zero()) continue;
                    if (d > 0) {
                        res.z_independent = false;
                        log << "z-dependent component at height " << h << "; ";
                    }
                    res.theta.add_term(TensKey{pair_key.first, pair_key.second, d}, sol[col]);
                }
            }
        }
    }
    res.detail = log.str();
    return res;
}

// Zigzag consistency of the shifted coproduct: applying the shift morphism
// (x+_{i,m} -> x+_{i,m+1}, xi_{i,p} -> xi_{i,p+1} on node i, x- fixed) to the
// left factors of the claimed Delta_{omega_i,0}(x+_{i,0}) must reproduce the
// coproduct of x+_{i,1} term by term.
inline CheckList verify_shift_zigzag(const SlAlgebra& g, int i) {
    CheckList out;
    const int H = g.n() + 1;
    const Alphabet& a = *g.alphabet();

    Tens claim(g.alphabet(), H);
    claim += Tens::simple(g.e(i, i + 1), g.one(), H);           // x+_{i,0} (x) 1
    claim += Tens::simple(g.one(), g.gen(g.xplus1(i)), H);      // 1 (x) x+_{i,1}
    claim += Tens::simple(g.gen(g.xi_m1(i)), g.e(i, i + 1), H); // xi_{i,-1} (x) x+_{i,0}
    for (int j = 1; j < i; ++j) claim += Tens::simple(g.e(i, j), g.e(j, i + 1), H);
    for (int k = i + 2; k <= g.n() + 1; ++k) claim -= Tens::simple(g.e(k, i + 1), g.e(i, k), H);

    // shift (x) id, letterwise on left factors
    auto shift_letter = [&](Gid gid) -> Gid {
        if (gid == g.E(i, i + 1)) return g.xplus1(i);
        if (gid == g.xi_m1(i)) return g.xi(i);
        return gid;
    };
    Tens shifted(g.alphabet(), H);
    for (const auto& [k, c] : claim.terms()) {
        Word nl = k.left;
        for (auto& gid : nl) gid = shift_letter(gid);
        shifted.add_term(TensKey{nl, k.right, k.zdeg}, c);
    }

    auto gnw = [&](int kmax) {
        Tens t(g.alphabet(), H);
        t += Tens::simple(g.gen(g.xplus1(i)), g.one(), H);
        t += Tens::simple(g.one(), g.gen(g.xplus1(i)), H);
        t += Tens::simple(g.gen(g.xi(i)), g.e(i, i + 1), H); // h_{i,0} (x) x+_{i,0}
        for (int j = i + 2; j <= kmax; ++j) t -= Tens::simple(g.e(j, i + 1), g.e(i, j), H);
        for (int k = 1; k < i; ++k) t += Tens::simple(g.e(i, k), g.e(k, i + 1), H);
        return t;
    };

    Tens target = gnw(g.n() + 1);
    Tens diff = shifted - target;
    std::string tag = "zigzag[n=" + std::to_string(g.n()) + ",i=" + std::to_string(i) + "]";
    out.add(tag + ": shifted claim equals coproduct of x+_{i,1} (sum bound n+1)", diff.is_zero(),
            residual_detail(diff), static_cast<long>(diff.term_count()));

    Tens diff_n = shifted - gnw(g.n());
    std::ostringstream note;
    if (diff_n.is_zero())
        note << "sum bound n and n+1 coincide here";
    else
        note << "with the bound read as n the sides differ by " << diff_n.term_count()
             << " term(s): " << residual_detail(diff_n);
    out.add(tag + ": bound-n reading reported, not asserted", true, note.str());
    (void)a;
    return out;
}

} // namespace yang
} // namespace qtheta
