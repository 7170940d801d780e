#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qtheta/rewrite.hpp"

namespace qtheta {

// Row echelon structure over the free-word basis, used for bounded-degree
// ideal membership: rows are stored pivot-normalized, keyed by their
// largest word.
template <class K>
class WordRowSpace {
public:
    using Row = std::map<Word, K>;

    size_t size() const { return rows_.size(); }

    Row reduce(Row v) const {
        bool changed = true;
        while (changed && !v.empty()) {
            changed = false;
            for (auto it = v.rbegin(); it != v.rend(); ++it) {
                auto row = rows_.find(it->first);
                if (row == rows_.end()) continue;
                K f = it->second;
                for (const auto& [w, c] : row->second) {
                    auto e = v.find(w);
                    K delta = f * c;
                    if (e == v.end()) {
                        if (!delta.is_zero()) v[w] = K(0) - delta;
                    } else {
                        e->second -= delta;
                        if (e->second.is_zero()) v.erase(e);
                    }
                }
                changed = true;
                break;
            }
        }
        return v;
    }

    bool insert(Row v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        Word pivot = v.rbegin()->first;
        K inv = K(1) / v.rbegin()->second;
        for (auto& [w, c] : v) c *= inv;
        rows_.emplace(std::move(pivot), std::move(v));
        return true;
    }

    bool reduces_to_zero(const NcElem<K>& x) const {
        Row v(x.terms().begin(), x.terms().end());
        return reduce(std::move(v)).empty();
    }

private:
    std::map<Word, Row> rows_;
};

namespace detail {

// Enumerate all words of the given length over the allowed letters whose
// weight equals `target`, with a coordinatewise reachability prune.
inline void enumerate_words(const Alphabet& a, const std::vector<Gid>& letters, int length,
                            const WeightVec& target, Word& acc,
                            const std::function<void(const Word&)>& emit,
                            const std::vector<int>& max_abs) {
    if (length == 0) {
        if (weight_height(target) == 0 && target == weight_zero(a.rank())) emit(acc);
        return;
    }
    for (size_t c = 0; c < target.size(); ++c)
        if (std::abs(target[c]) > length * max_abs[c]) return;
    for (Gid g : letters) {
        acc.push_back(g);
        enumerate_words(a, letters, length - 1, target - a.weight(g), acc, emit, max_abs);
        acc.pop_back();
    }
}

} // namespace detail

struct IdealMemberOptions {
    // Letters allowed in the flanking words u, v; empty means the whole alphabet.
    std::vector<Gid> letters;
    // Check x for early exit after this many successful row insertions.
    size_t check_every = 32;
};

// Bounded-degree ideal membership over the scalar field: decides whether x
// lies in the span of { u * r * v } with r running over the defining
// relations of `rules`, u, v words, and every product of total length at
// most `degree_bound`. x must be weight homogeneous. The answer "true" is
// a certificate; "false" only says the bound was not enough.
template <class K>
bool ideal_member(const NcElem<K>& x, const RelationSet<K>& rules, int degree_bound,
                  IdealMemberOptions opt = {}) {
    const Alphabet& a = *(x.alphabet() ? x.alphabet() : rules.alph);
    if (x.is_zero()) return true;
    if (!x.is_homogeneous())
        throw std::invalid_argument("ideal_member: element must be weight homogeneous");
    WeightVec target = x.weight();
    for (const auto& [w, c] : x.terms())
        if (static_cast<int>(w.size()) > degree_bound)
            throw std::invalid_argument("ideal_member: word longer than degree bound");

    std::vector<Gid> letters = opt.letters;
    if (letters.empty())
        for (Gid g = 0; g < a.size(); ++g) letters.push_back(g);
    std::vector<int> max_abs(a.rank(), 0);
    for (Gid g : letters)
        for (int c = 0; c < a.rank(); ++c)
            max_abs[c] = std::max(max_abs[c], std::abs(a.weight(g)[c]));

    std::vector<NcElem<K>> rels = rules.all_relations();
    WordRowSpace<K> space;
    size_t since_check = 0;
    if (space.reduces_to_zero(x)) return true;

    for (int total = 0; total <= degree_bound; ++total) {
        for (const auto& r : rels) {
            if (r.is_zero()) continue;
            int rlen = 0;
            for (const auto& [w, c] : r.terms()) rlen = std::max(rlen, static_cast<int>(w.size()));
            int flank = total - rlen;
            if (flank < 0) continue;
            WeightVec rw = r.weight();
            for (int la = 0; la <= flank; ++la) {
                int lb = flank - la;
                // enumerate u with arbitrary admissible weight, v with the
                // complementary weight.
                Word u;
                std::function<void(const Word&)> with_u = [&](const Word& uw) {
                    WeightVec rest = target - a.word_weight(uw) - rw;
                    Word v;
                    std::function<void(const Word&)> with_v = [&](const Word& vw) {
                        NcElem<K> s = NcElem<K>::word(&a, uw) * r * NcElem<K>::word(&a, vw);
                        typename WordRowSpace<K>::Row row(s.terms().begin(), s.terms().end());
                        if (space.insert(std::move(row))) {
                            if (++since_check >= opt.check_every) {
                                since_check = 0;
                                if (space.reduces_to_zero(x)) throw true; // unwound below
                            }
                        }
                    };
                    detail::enumerate_words(a, letters, lb, rest, v, with_v, max_abs);
                };
                // u of length la with any weight: enumerate over all weights by
                // recursing without a target; emulate with a weight-free walk.
                std::function<void(int)> gen_u = [&](int remaining) {
                    if (remaining == 0) { with_u(u); return; }
                    for (Gid g : letters) {
                        u.push_back(g);
                        gen_u(remaining - 1);
                        u.pop_back();
                    }
                };
                try {
                    gen_u(la);
                } catch (bool found) {
                    return found;
                }
            }
        }
        if (space.reduces_to_zero(x)) return true;
    }
    return space.reduces_to_zero(x);
}

// Sparse exact linear solver for the recursive Theta systems: one matrix,
// several right-hand sides, full-column-rank assertion.
template <class K>
struct LinearSystem {
    int ncols = 0;
    std::vector<std::map<int, K>> rows;

    struct Outcome {
        int rank = 0;
        // one entry per rhs: the unique solution, or nullopt if inconsistent
        std::vector<std::optional<std::vector<K>>> solutions;
    };

    // Solve A x = b for each b; requires (and reports) rank == ncols for
    // uniqueness. Columns ncols.. hold the right-hand sides internally.
    Outcome solve_all(const std::vector<std::map<int, K>>& rhss) const {
        std::vector<std::map<int, K>> work = rows;
        int nrhs = static_cast<int>(rhss.size());
        // splice rhs columns
        for (size_t i = 0; i < work.size(); ++i)
            for (int j = 0; j < nrhs; ++j) {
                auto it = rhss[j].find(static_cast<int>(i));
                if (it != rhss[j].end() && !it->second.is_zero()) work[i][ncols + j] = it->second;
            }

        std::vector<int> pivot_col_of_row;
        std::vector<size_t> pivot_rows;
        std::vector<bool> used(work.size(), false);
        for (int col = 0; col < ncols; ++col) {
            size_t best = work.size();
            size_t best_size = SIZE_MAX;
            for (size_t r = 0; r < work.size(); ++r) {
                if (used[r]) continue;
                auto it = work[r].find(col);
                if (it != work[r].end() && !it->second.is_zero() && work[r].size() < best_size) {
                    best = r;
                    best_size = work[r].size();
                }
            }
            if (best == work.size()) continue;
            used[best] = true;
            pivot_rows.push_back(best);
            pivot_col_of_row.push_back(col);
            K inv = K(1) / work[best][col];
            for (auto& [c, v] : work[best]) v *= inv;
            for (size_t r = 0; r < work.size(); ++r) {
                if (r == best) continue;
                auto it = work[r].find(col);
                if (it == work[r].end() || it->second.is_zero()) continue;
                K f = it->second;
                for (const auto& [c, v] : work[best]) {
                    auto e = work[r].find(c);
                    K delta = f * v;
                    if (e == work[r].end()) {
                        if (!delta.is_zero()) work[r][c] = K(0) - delta;
                    } else {
                        e->second -= delta;
                        if (e->second.is_zero()) work[r].erase(e);
                    }
                }
            }
        }

        Outcome out;
        out.rank = static_cast<int>(pivot_rows.size());
        for (int j = 0; j < nrhs; ++j) {
            bool consistent = true;
            for (size_t r = 0; r < work.size(); ++r) {
                if (used[r]) continue;
                auto it = work[r].find(ncols + j);
                if (it != work[r].end() && !it->second.is_zero()) { consistent = false; break; }
            }
            if (!consistent || out.rank < ncols) {
                out.solutions.emplace_back(consistent ? std::optional<std::vector<K>>(std::nullopt)
                                                      : std::nullopt);
                continue;
            }
            std::vector<K> sol(ncols, K(0));
            for (size_t p = 0; p < pivot_rows.size(); ++p) {
                auto it = work[pivot_rows[p]].find(ncols + j);
                sol[pivot_col_of_row[p]] = (it == work[pivot_rows[p]].end()) ? K(0) : it->second;
            }
            out.solutions.emplace_back(std::move(sol));
        }
        return out;
    }
};

} // namespace qtheta
