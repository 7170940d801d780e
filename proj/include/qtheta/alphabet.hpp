#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtheta {

// A generator of a finitely generated algebra. The id doubles as the
// position in the fixed total order of the alphabet: normal words are
// the ones with nondecreasing ids.
using Gid = std::uint16_t;
using Word = std::vector<Gid>;

// Weight in the root lattice, written over the simple roots alpha_1..alpha_n.
using WeightVec = std::vector<int>;

inline WeightVec weight_zero(int rank) { return WeightVec(rank, 0); }

inline WeightVec operator+(const WeightVec& a, const WeightVec& b) {
    WeightVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}
inline WeightVec operator-(const WeightVec& a, const WeightVec& b) {
    WeightVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}
inline WeightVec operator-(const WeightVec& a) {
    WeightVec r = a;
    for (auto& x : r) x = -x;
    return r;
}

// Height of a weight: pairing with the sum of the fundamental coweights,
// i.e. the coordinate sum.
inline int weight_height(const WeightVec& w) {
    return std::accumulate(w.begin(), w.end(), 0);
}

inline bool weight_is_nonneg(const WeightVec& w) {
    for (int x : w)
        if (x < 0) return false;
    return true;
}

struct GenInfo {
    std::string name;
    WeightVec weight;
};

class Alphabet {
public:
    explicit Alphabet(int rank) : rank_(rank) {}

    Gid add(const std::string& name, const WeightVec& w) {
        if (w.size() != static_cast<size_t>(rank_))
            throw std::invalid_argument("Alphabet: weight rank mismatch for " + name);
        if (by_name_.count(name)) throw std::invalid_argument("Alphabet: duplicate generator " + name);
        Gid id = static_cast<Gid>(gens_.size());
        gens_.push_back({name, w});
        by_name_[name] = id;
        return id;
    }

    int rank() const { return rank_; }
    size_t size() const { return gens_.size(); }
    const GenInfo& gen(Gid g) const { return gens_.at(g); }
    const std::string& name(Gid g) const { return gens_.at(g).name; }
    const WeightVec& weight(Gid g) const { return gens_.at(g).weight; }

    bool has(const std::string& name) const { return by_name_.count(name) != 0; }
    Gid id(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) throw std::out_of_range("Alphabet: unknown generator " + name);
        return it->second;
    }

    WeightVec word_weight(const Word& w) const {
        WeightVec r = weight_zero(rank_);
        for (Gid g : w) r = r + weight(g);
        return r;
    }

    std::string word_name(const Word& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) s += ".";
            s += name(w[i]);
        }
        return s;
    }

private:
    int rank_;
    std::vector<GenInfo> gens_;
    std::map<std::string, Gid> by_name_;
};

} // namespace qtheta
