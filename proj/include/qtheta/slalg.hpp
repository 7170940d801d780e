#pragma once

#include <memory>

#include "qtheta/ideal.hpp"
#include "qtheta/qnum.hpp"
#include "qtheta/tensorelem.hpp"

namespace qtheta {

// U(sl_{n+1}) on the elementary-matrix basis, extended by the degree-one
// current generators x+_{l,1} and the bookkeeping symbols xi_{l,-1} of the
// shifted current algebra.
//
// Alphabet order (normal words are nondecreasing):
//   lowering E_{kj} (k > j)  <  xi_{l,0}, xi_{l,-1}  <  raising E_{jk} (j < k)
//   <  x+_{l,1}.
//
// The swap rules on the E/xi block are the Lie-algebra commutators, so the
// rewriting is the PBW normal form of U(sl_{n+1}). The x+_{l,1} swaps are
// the box commutators [x+_{l,1}, E_{jk}] = E_{lk} E_{j,l+1} for
// 1 <= j <= l < k <= n+1 and the Cartan action [xi_{l',0}, x+_{l,1}] =
// c_{l'l} x+_{l,1}; pairs outside this set have no rule and reducing them
// is an error.
class SlAlgebra {
public:
    explicit SlAlgebra(int n) : n_(n), alph_(n) {
        if (n < 1) throw std::invalid_argument("SlAlgebra: rank must be positive");
        // lowering block
        for (int a = 2; a <= n + 1; ++a)
            for (int b = 1; b < a; ++b)
                E_id_[{a, b}] = alph_.add(ename(a, b), eweight(a, b));
        // Cartan block
        for (int l = 1; l <= n; ++l) xi_id_.push_back(alph_.add("xi" + std::to_string(l), weight_zero(n)));
        for (int l = 1; l <= n; ++l)
            xim_id_.push_back(alph_.add("xi" + std::to_string(l) + "[-1]", weight_zero(n)));
        // raising block
        for (int a = 1; a <= n + 1; ++a)
            for (int b = a + 1; b <= n + 1; ++b)
                E_id_[{a, b}] = alph_.add(ename(a, b), eweight(a, b));
        // degree-one currents
        for (int l = 1; l <= n; ++l) {
            WeightVec w = weight_zero(n);
            w[l - 1] = 1;
            xp1_id_.push_back(alph_.add("x+" + std::to_string(l) + "[1]", w));
        }
        build_rules();
    }

    SlAlgebra(const SlAlgebra&) = delete;
    SlAlgebra& operator=(const SlAlgebra&) = delete;

    int n() const { return n_; }
    const Alphabet* alphabet() const { return &alph_; }
    const RelationSet<Rational>& rules() const { return rules_; }

    Gid E(int a, int b) const { return E_id_.at({a, b}); }
    Gid xi(int l) const { return xi_id_.at(l - 1); }
    Gid xi_m1(int l) const { return xim_id_.at(l - 1); }
    Gid xplus1(int l) const { return xp1_id_.at(l - 1); }

    using El = NcElem<Rational>;
    El gen(Gid g) const { return El::generator(&alph_, g); }
    El e(int a, int b) const { return gen(E(a, b)); }
    El one() const { return El::one(&alph_); }

    // [g, h] for letters of the Lie block (E's and xi's); diagonal
    // differences are rewritten into xi's.
    El lie_bracket(Gid g, Gid h) const {
        auto ga = letter_kind(g), ha = letter_kind(h);
        if (ga.kind == Kind::X1 || ha.kind == Kind::X1)
            throw std::invalid_argument("lie_bracket: degree-one currents are not Lie letters");
        if (ga.kind != Kind::E && ha.kind != Kind::E) return El(&alph_); // Cartan is abelian
        if (ga.kind != Kind::E) return cartan_bracket(ga, h);
        if (ha.kind != Kind::E) return -cartan_bracket(ha, g);
        return ee_bracket(ga.a, ga.b, ha.a, ha.b);
    }

    // Commutator table as swap rules plus the degree-one box rules.
    std::vector<Gid> lowering_letters() const {
        std::vector<Gid> r;
        for (int a = 2; a <= n_ + 1; ++a)
            for (int b = 1; b < a; ++b) r.push_back(E(a, b));
        return r;
    }
    std::vector<Gid> raising_letters() const {
        std::vector<Gid> r;
        for (int a = 1; a <= n_ + 1; ++a)
            for (int b = a + 1; b <= n_ + 1; ++b) r.push_back(E(a, b));
        return r;
    }
    // Raising letters E_{jk} with j <= i < k ("box" of the node i).
    std::vector<std::pair<int, int>> box_pairs(int i) const {
        std::vector<std::pair<int, int>> r;
        for (int j = 1; j <= i; ++j)
            for (int k = i + 1; k <= n_ + 1; ++k) r.emplace_back(j, k);
        return r;
    }

private:
    enum class Kind { E, Xi, XiM1, X1 };
    struct Letter {
        Kind kind;
        int a = 0, b = 0; // E_{ab}
        int l = 0;        // node index for xi / x+
    };

    int n_;
    Alphabet alph_;
    RelationSet<Rational> rules_;
    std::map<std::pair<int, int>, Gid> E_id_;
    std::vector<Gid> xi_id_, xim_id_, xp1_id_;

    static std::string ename(int a, int b) {
        return "E" + std::to_string(a) + "_" + std::to_string(b);
    }
    WeightVec eweight(int a, int b) const {
        WeightVec w = weight_zero(n_);
        if (a < b)
            for (int l = a; l < b; ++l) w[l - 1] = 1;
        else
            for (int l = b; l < a; ++l) w[l - 1] = -1;
        return w;
    }

    Letter letter_kind(Gid g) const {
        for (const auto& [ab, id] : E_id_)
            if (id == g) return {Kind::E, ab.first, ab.second, 0};
        for (int l = 1; l <= n_; ++l) {
            if (xi_id_[l - 1] == g) return {Kind::Xi, 0, 0, l};
            if (xim_id_[l - 1] == g) return {Kind::XiM1, 0, 0, l};
            if (xp1_id_[l - 1] == g) return {Kind::X1, 0, 0, l};
        }
        throw std::out_of_range("SlAlgebra: unknown letter");
    }

    El ee_bracket(int a, int b, int c, int d) const {
        // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb, with E_xx - E_yy
        // folded into the xi's.
        El r(&alph_);
        if (b == c && a == d) return diag_difference(a, b);
        if (b == c) r += e(a, d);
        if (d == a) r -= e(c, b);
        return r;
    }

    // E_aa - E_bb as a combination of xi's.
    El diag_difference(int a, int b) const {
        El r(&alph_);
        if (a < b)
            for (int l = a; l < b; ++l) r += gen(xi(l));
        else
            for (int l = b; l < a; ++l) r -= gen(xi(l));
        return r;
    }

    // [xi_l, E_ab] = (delta_la - delta_lb - delta_{l+1,a} + delta_{l+1,b}) E_ab
    El cartan_bracket(const Letter& xi_letter, Gid eg) const {
        Letter el = letter_kind(eg);
        int l = xi_letter.l;
        int coef = (l == el.a) - (l == el.b) - (l + 1 == el.a) + (l + 1 == el.b);
        El r(&alph_);
        if (coef != 0) r += Rational(coef) * gen(eg);
        if (xi_letter.kind == Kind::XiM1)
            throw std::invalid_argument("SlAlgebra: xi[-1] has no commutator rules");
        return r;
    }

    void build_rules() {
        rules_.alph = &alph_;
        std::vector<Gid> lie;
        for (const auto& [ab, id] : E_id_) lie.push_back(id);
        for (Gid g : xi_id_) lie.push_back(g);
        for (Gid g : lie)
            for (Gid h : lie) {
                if (g <= h) continue;
                El target = El::word(&alph_, Word{h, g}) + lie_bracket(g, h);
                rules_.add_swap(g, h, target);
            }
        // Degree-one box rules and Cartan action on x+_{l,1}.
        for (int l = 1; l <= n_; ++l) {
            Gid x = xplus1(l);
            for (auto [j, k] : box_pairs(l)) {
                El target = El::word(&alph_, Word{E(j, k), x}) + e(l, k) * e(j, l + 1);
                rules_.add_swap(x, E(j, k), target);
            }
            for (int lp = 1; lp <= n_; ++lp) {
                // [xi_{l'}, x+_{l,1}] = c_{l'l} x+_{l,1}
                int c = cartan_entry_A(n_, lp - 1, l - 1);
                El target = El::word(&alph_, Word{xi(lp), x}) - Rational(c) * gen(x);
                rules_.add_swap(x, xi(lp), target);
            }
        }
    }
};

// Relation set of U(sl_{n+1}) alone (no degree-one extension); the swap
// table realizes [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb with diagonals
// rewritten into the xi's, and the xi-action on root vectors.
inline std::unique_ptr<SlAlgebra> sl_commutator_rules(int n) {
    return std::make_unique<SlAlgebra>(n);
}

} // namespace qtheta
