#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "symplectic.hpp"

namespace sympl {

// A basis element at a (strictly negative) power of t.
struct Generator {
    int n = 0;  // t-exponent, n <= -1
    Color col;
    friend bool operator==(const Generator&, const Generator&) = default;
    // Canonical order: deeper t-exponent first, then the color's index pair
    // compared lexicographically (the Color order is exactly that).
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

struct ArrayPosition {
    int row = 0;   // 0 (top) .. 2l (bottom)
    int diag = 0;  // position along the row, 0-based
    friend bool operator==(const ArrayPosition&, const ArrayPosition&) = default;
    friend auto operator<=>(const ArrayPosition&, const ArrayPosition&) = default;
};

enum class ArrayKind { Full, FoldedSubspace };

// The infinite triangular array of generators, rotated a quarter turn.
//
// One triangle per t-exponent -n holds the cells (c,i), 1 <= c <= i <= L
// (L = 2l); consecutive triangles are glued along their length-L legs with
// alternating reflection, and the rotated band has L+1 rows. Row r is infinite
// to the right and every node has exactly two successors in row r+1, at the
// same diag and at diag+1, so 2^L downward paths run through each top-row node.
//
// Frozen coordinate map (verified by the round-trip, the 2^L path count and
// the adjacency realization of wt(1a_{-n-1}) = -alpha_0 + wt(a 1bar_{-n})):
//   n = 2p+1:  row = L-(i-c),  diag = (c-1) + p*L
//   n = 2p:    row = i-c,      diag = (i-1) + (p-1)*L
// In particular the top row carries the hypotenuses of the even triangles and
// the bottom row those of the odd ones.
class GeneratorArray {
  public:
    GeneratorArray(int ell, ArrayKind kind) : ell_(ell), kind_(kind), L_(2 * ell) {
        if (ell < 1) throw std::invalid_argument("ell must be positive");
    }

    int ell() const { return ell_; }
    ArrayKind kind() const { return kind_; }
    int rows() const { return L_ + 1; }
    // Rank of the algebra whose colors label the cells: l for the full array,
    // 2l for the folded-subspace one (whose labels are all plain pairs).
    int label_rank() const { return kind_ == ArrayKind::Full ? ell_ : L_; }

    ArrayPosition position_of(Generator g) const {
        check(g);
        int c = g.col.c, i = g.col.i, n = -g.n;
        if (n % 2 == 1) {
            int p = (n - 1) / 2;
            return {L_ - (i - c), (c - 1) + p * L_};
        }
        int p = n / 2;
        return {i - c, (i - 1) + (p - 1) * L_};
    }

    Generator generator_at(ArrayPosition pos) const {
        if (pos.row < 0 || pos.row > L_ || pos.diag < 0)
            throw std::out_of_range("position outside array");
        int s = pos.diag % L_, q = pos.diag / L_;
        if (s >= pos.row) {  // even triangle
            int i = s + 1, c = i - pos.row;
            return {-2 * (q + 1), Color{c, i}};
        }
        int c = s + 1, i = c + L_ - pos.row;  // odd triangle
        return {-(2 * q + 1), Color{c, i}};
    }

    // Successors in the next row; both always exist while row < 2l.
    std::vector<ArrayPosition> successors(ArrayPosition pos) const {
        if (pos.row >= L_) return {};
        return {{pos.row + 1, pos.diag}, {pos.row + 1, pos.diag + 1}};
    }

    // All downward paths whose top-row node is `top`: one node per row,
    // consecutive nodes adjacent. Exactly 2^(2l) of them.
    std::vector<std::vector<ArrayPosition>> paths_through(ArrayPosition top) const {
        if (top.row != 0) throw std::invalid_argument("paths start in the top row");
        std::vector<std::vector<ArrayPosition>> out;
        std::vector<ArrayPosition> cur{top};
        walk(cur, out);
        return out;
    }

    // Largest total multiplicity any single downward path collects from the
    // given parts. Dynamic programming over the finite window of diagonals
    // that support the parts; everything to the right contributes nothing.
    int max_path_load(const std::vector<std::pair<Generator, int>>& parts) const {
        if (parts.empty()) return 0;
        int dmax = 0;
        std::map<ArrayPosition, int> load;
        for (const auto& [g, mult] : parts) {
            ArrayPosition pos = position_of(g);
            load[pos] += mult;
            dmax = std::max(dmax, pos.diag);
        }
        const int w = dmax + 1;
        std::vector<int> below(w + 1, 0), here(w + 1, 0);
        for (int r = L_; r >= 0; --r) {
            for (int d = 0; d < w; ++d) {
                auto it = load.find({r, d});
                int own = it == load.end() ? 0 : it->second;
                here[d] = own + (r == L_ ? 0 : std::max(below[d], below[d + 1]));
            }
            here[w] = 0;
            std::swap(below, here);
        }
        int best = 0;
        for (int d = 0; d < w; ++d) best = std::max(best, below[d]);
        return best;
    }

  private:
    void walk(std::vector<ArrayPosition>& cur, std::vector<std::vector<ArrayPosition>>& out) const {
        if (static_cast<int>(cur.size()) == L_ + 1) {
            out.push_back(cur);
            return;
        }
        for (ArrayPosition nxt : successors(cur.back())) {
            cur.push_back(nxt);
            walk(cur, out);
            cur.pop_back();
        }
    }

    void check(Generator g) const {
        if (g.n >= 0 || !color_valid(g.col, ell_))
            throw std::invalid_argument("generator outside array");
    }

    int ell_;
    ArrayKind kind_;
    int L_;
};

}  // namespace sympl
