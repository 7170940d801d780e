#pragma once

#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

#include "qtheta/ncelem.hpp"

namespace qtheta {

struct IncompleteRuleSet : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ReductionDiverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rewriting data for an algebra presented on an ordered alphabet.
//
// swap_rules: for a pair (g,h) with g > h in the alphabet order, the image
// of the word g.h as an element whose words are strictly smaller in the
// termination order (h.g plus lower terms). Applied only to out-of-order
// adjacent pairs.
//
// forced_rules: rewrites applied to an adjacent pair regardless of order
// (inverse-generator cancellation such as K.K^{-1} -> 1).
//
// ideal_generators: additional relations that are not oriented; they only
// participate in ideal membership, never in reduction.
template <class K>
struct RelationSet {
    const Alphabet* alph = nullptr;
    std::map<std::pair<Gid, Gid>, NcElem<K>> swap_rules;
    std::map<std::pair<Gid, Gid>, NcElem<K>> forced_rules;
    std::vector<NcElem<K>> ideal_generators;
    // partial: pairs without a rule are left in place (triangular-form
    // rewriting); total: such a pair is a contract violation.
    bool partial = false;

    void add_swap(Gid g, Gid h, NcElem<K> target) {
        if (g <= h) throw std::invalid_argument("RelationSet: swap key must be out of order");
        swap_rules.emplace(std::make_pair(g, h), std::move(target));
    }
    void add_forced(Gid g, Gid h, NcElem<K> target) {
        forced_rules.emplace(std::make_pair(g, h), std::move(target));
    }

    // The relation elements g.h - target, one per oriented rule; together
    // with ideal_generators these span the defining ideal.
    std::vector<NcElem<K>> all_relations() const {
        std::vector<NcElem<K>> r = ideal_generators;
        for (const auto& [key, target] : swap_rules) {
            NcElem<K> lhs = NcElem<K>::word(alph, Word{key.first, key.second});
            r.push_back(lhs - target);
        }
        for (const auto& [key, target] : forced_rules) {
            NcElem<K> lhs = NcElem<K>::word(alph, Word{key.first, key.second});
            r.push_back(lhs - target);
        }
        return r;
    }
};

// Normal form under the swap rules: no forced pair remains, and every
// adjacent pair respects the alphabet order (in partial mode, every pair
// that has a rule). Diverging reductions are cut off by the step cap,
// which signals an inconsistent or incomplete rule set.
//
// The worklist is a map so that different rewrite paths reaching the same
// word merge their coefficients instead of being traversed separately.
template <class K>
NcElem<K> reduce_pbw(const NcElem<K>& x, const RelationSet<K>& rules,
                     std::size_t step_cap = 50'000'000) {
    const Alphabet* a = x.alphabet() ? x.alphabet() : rules.alph;
    NcElem<K> out(a);
    std::map<Word, K> pending(x.terms().begin(), x.terms().end());
    std::size_t steps = 0;

    auto merge = [](std::map<Word, K>& m, Word w, const K& c) {
        auto it = m.find(w);
        if (it == m.end()) {
            if (!c.is_zero()) m.emplace(std::move(w), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) m.erase(it);
        }
    };

    while (!pending.empty()) {
        auto node = *pending.rbegin();
        pending.erase(std::prev(pending.end()));
        const Word& w = node.first;
        const K& c = node.second;

        size_t pos = w.size();
        const NcElem<K>* target = nullptr;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            auto key = std::make_pair(w[i], w[i + 1]);
            auto f = rules.forced_rules.find(key);
            if (f != rules.forced_rules.end()) { pos = i; target = &f->second; break; }
            if (w[i] > w[i + 1]) {
                auto s = rules.swap_rules.find(key);
                if (s != rules.swap_rules.end()) { pos = i; target = &s->second; break; }
                if (!rules.partial)
                    throw IncompleteRuleSet("reduce_pbw: no rule for out-of-order pair " +
                                            a->name(w[i]) + " . " + a->name(w[i + 1]));
            }
        }
        if (!target) { out.add_term(w, c); continue; }

        if (++steps > step_cap)
            throw ReductionDiverged("reduce_pbw: step cap exceeded (incomplete rule set?)");

        Word prefix(w.begin(), w.begin() + pos);
        Word suffix(w.begin() + pos + 2, w.end());
        for (const auto& [tw, tc] : target->terms()) {
            Word nw = prefix;
            nw.insert(nw.end(), tw.begin(), tw.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            merge(pending, std::move(nw), c * tc);
        }
    }
    return out;
}

} // namespace qtheta
