#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

#include "echelon.hpp"
#include "enveloping.hpp"
#include "partitions.hpp"

namespace sympl {

// All normal-form words of exact degree n over the full color set, in
// lexicographic order. Degree of a word is minus the sum of its t-exponents.
inline std::vector<Word> slice_words(const SymplecticAlgebra& g, int n,
                                     std::uint64_t cap = 500000) {
    std::vector<Word> out;
    if (n < 0) return out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<Generator> universe;
    for (int e = -n; e <= -1; ++e)
        for (int idx = 0; idx < g.dim(); ++idx) universe.push_back(Generator{e, g.color(idx)});
    Word current;
    auto emit = [&]() {
        if (out.size() >= cap) throw ResourceCapExceeded("module slice exceeds cap");
        out.push_back(current);
    };
    // The universe ascends in generator order, so words come out sorted.
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos >= universe.size()) return;
        self(self, pos + 1, remaining);
        int cost = -universe[pos].n;
        int take = 0;
        while ((take + 1) * cost <= remaining) {
            ++take;
            current.push_back(universe[pos]);
            int rest = remaining - take * cost;
            if (rest == 0)
                emit();
            else
                self(self, pos + 1, rest);
        }
        current.resize(current.size() - take);
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> word_weight(const SymplecticAlgebra& g, const Word& w) {
    std::vector<int> wt(g.rank(), 0);
    for (const auto& gen : w) {
        const std::vector<int>& cw = g.weight(g.color_index(gen.col));
        for (int i = 0; i < g.rank(); ++i) wt[i] += cw[i];
    }
    return wt;
}

// The monomial vector u(pi)v: a sorted partition word is itself in normal form,
// so no rewriting happens (asserted by u_from_word).
inline Combo monomial_vector(const ColoredPartition& pi) {
    Word w;
    for (const auto& gen : pi.word()) w.push_back(gen);
    return u_from_word(std::move(w));
}

// Graded slices of the level-k vacuum module together with the submodule
// generated by the singular vector, organized block by block under the finite
// torus weight. Relation rows are built once per degree: every normal-form
// word of complementary degree is applied to the singular vector, then the
// resulting span is saturated under the degree-zero root vectors (Cartan
// elements act as scalars on each block, so they never enlarge it).
class QuotientModel {
  public:
    QuotientModel(const SymplecticAlgebra& g, int level, int max_degree,
                  std::uint64_t cap_slice_dim = 500000)
        : g_(g), level_(level), level_rat_(level), max_degree_(max_degree) {
        if (level < 1) throw std::invalid_argument("level must be positive");
        if (max_degree < 0) throw std::invalid_argument("max degree must be nonnegative");
        std::vector<int> roots;
        for (int idx = 0; idx < g.dim(); ++idx)
            if (!g.is_cartan(idx)) roots.push_back(idx);
        slices_.reserve(max_degree + 1);
        for (int n = 0; n <= max_degree; ++n) {
            Slice sl;
            sl.words = slice_words(g, n, cap_slice_dim);
            for (int i = 0; i < static_cast<int>(sl.words.size()); ++i)
                sl.index.emplace(sl.words[i], i);
            for (int i = 0; i < static_cast<int>(sl.words.size()); ++i) {
                Block& blk = sl.blocks[word_weight(g, sl.words[i])];
                blk.local.emplace(i, static_cast<int>(blk.cols.size()));
                blk.cols.push_back(i);
            }
            for (auto& kv : sl.blocks)
                kv.second.ech = RowEchelon(static_cast<int>(kv.second.cols.size()));
            if (n >= level + 1) {
                Combo s = singular_vector(g, level);
                std::deque<Combo> pending;
                for (const Word& u : slices_[n - level - 1].words) {
                    Combo row = act_word(g, level_rat_, u, s);
                    if (insert_row(sl, row)) pending.push_back(std::move(row));
                }
                while (!pending.empty()) {
                    Combo v = std::move(pending.front());
                    pending.pop_front();
                    for (int r : roots) {
                        Combo img = act(g, level_rat_, Generator{0, g.color(r)}, v);
                        if (insert_row(sl, img)) pending.push_back(std::move(img));
                    }
                }
            }
            for (const auto& kv : sl.blocks) sl.rel_rank += kv.second.ech.rank();
            slices_.push_back(std::move(sl));
        }
    }

    int max_degree() const { return max_degree_; }
    int level() const { return level_; }
    const SymplecticAlgebra& algebra() const { return g_; }

    int ambient_dim(int n) const { return static_cast<int>(slice(n).words.size()); }
    int relation_rank(int n) const { return slice(n).rel_rank; }
    int quotient_dim(int n) const { return ambient_dim(n) - relation_rank(n); }
    const std::vector<Word>& basis_words(int n) const { return slice(n).words; }

    // Membership of a degree-n vector in the submodule: each weight component
    // must reduce to zero against its block's relation rows.
    bool in_submodule(int n, const Combo& v) const {
        const Slice& sl = slice(n);
        std::map<const Block*, std::vector<std::pair<int, Rat>>> per_block;
        for (const auto& [w, c] : v) {
            auto it = sl.index.find(w);
            if (it == sl.index.end()) throw std::invalid_argument("word outside the slice");
            const Block& blk = sl.blocks.at(word_weight(g_, w));
            per_block[&blk].emplace_back(blk.local.at(it->second), c);
        }
        for (auto& [blk, entries] : per_block)
            if (!blk->ech.reduce(row_from_rationals(entries)).empty()) return false;
        return true;
    }

    struct RankResult {
        int rank = 0;
        // entry j nonempty when monomial j reduces into the span of the
        // relations and the earlier monomials; pairs are (input index, coeff)
        std::vector<std::vector<std::pair<std::size_t, Rat>>> dependencies;
    };

    // Rank of the images of the given degree-n monomials in the quotient,
    // processed in input order against copies of the relation rows.
    RankResult monomial_rank(int n, const std::vector<ColoredPartition>& mons) const {
        const Slice& sl = slice(n);
        RankResult res;
        res.dependencies.resize(mons.size());
        std::map<const Block*, RowEchelon> scratch;
        for (std::size_t j = 0; j < mons.size(); ++j) {
            if (mons[j].degree() != n) throw std::invalid_argument("monomial of wrong degree");
            Word w;
            for (const auto& gen : mons[j].word()) w.push_back(gen);
            auto it = sl.index.find(w);
            if (it == sl.index.end()) throw std::invalid_argument("monomial outside the slice");
            const Block& blk = sl.blocks.at(word_weight(g_, w));
            RowEchelon& ech = scratch.try_emplace(&blk, blk.ech).first->second;
            int main_cols = static_cast<int>(blk.cols.size());
            int col = blk.local.at(it->second);
            int tag = main_cols + static_cast<int>(j);
            SparseRow leftover;
            if (ech.insert({{col, Int(1)}, {tag, Int(1)}}, &leftover) >= 0) {
                ++res.rank;
            } else {
                for (const auto& [tcol, coeff] : leftover)
                    res.dependencies[j].emplace_back(static_cast<std::size_t>(tcol - main_cols),
                                                     Rat(coeff));
            }
        }
        return res;
    }

  private:
    struct Block {
        std::vector<int> cols;     // global word ids, ascending
        std::map<int, int> local;  // global id -> column
        RowEchelon ech{0};
    };
    struct Slice {
        std::vector<Word> words;
        std::map<Word, int> index;
        std::map<std::vector<int>, Block> blocks;
        int rel_rank = 0;
    };

    const Slice& slice(int n) const {
        if (n < 0 || n > max_degree_) throw std::out_of_range("degree outside the model");
        return slices_[n];
    }

    // Returns true when the row contributed a new pivot to its block. Rows
    // coming from the module action are weight homogeneous, so they land in a
    // single block; a stray word would fail the local column lookup.
    bool insert_row(Slice& sl, const Combo& v) {
        if (v.empty()) return false;
        Block& blk = sl.blocks.at(word_weight(g_, v.begin()->first));
        std::vector<std::pair<int, Rat>> entries;
        entries.reserve(v.size());
        for (const auto& [w, c] : v) entries.emplace_back(blk.local.at(sl.index.at(w)), c);
        return blk.ech.insert(row_from_rationals(entries)) >= 0;
    }

    const SymplecticAlgebra& g_;
    int level_;
    Rat level_rat_;
    int max_degree_;
    std::vector<Slice> slices_;
};

}  // namespace sympl
