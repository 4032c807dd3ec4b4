#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace sympl {

// Sparse integer row: (column, coefficient) pairs, sorted by column, no zeros.
using SparseRow = std::vector<std::pair<int, Int>>;

inline SparseRow row_from_rationals(const std::vector<std::pair<int, Rat>>& entries) {
    Int lcm = 1;
    for (const auto& [c, q] : entries) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    SparseRow row;
    row.reserve(entries.size());
    for (const auto& [c, q] : entries)
        if (q != 0) row.emplace_back(c, Int(q.get_num() * (lcm / q.get_den())));
    std::sort(row.begin(), row.end());
    return row;
}

// a*x + b*y for sparse rows (linear merge).
inline SparseRow row_combine(const Int& a, const SparseRow& x, const Int& b, const SparseRow& y) {
    SparseRow r;
    r.reserve(x.size() + y.size());
    std::size_t p = 0, q = 0;
    Int v;
    while (p < x.size() || q < y.size()) {
        if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
            v = a * x[p].second;
            if (v != 0) r.emplace_back(x[p].first, v);
            ++p;
        } else if (p == x.size() || y[q].first < x[p].first) {
            v = b * y[q].second;
            if (v != 0) r.emplace_back(y[q].first, v);
            ++q;
        } else {
            v = a * x[p].second + b * y[q].second;
            if (v != 0) r.emplace_back(x[p].first, v);
            ++p, ++q;
        }
    }
    return r;
}

// Divide by the gcd of all coefficients and make the leading one positive.
inline void row_normalize(SparseRow& r) {
    if (r.empty()) return;
    Int g = 0;
    for (const auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(r.front().second) < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : r) v /= g;
}

// Incremental row echelon form over Z with cross-multiplication instead of
// division (rows stay integral; each is reduced by its content after every
// combination, which keeps the entries from blowing up). Exact ranks and
// membership tests over Q follow since scaling rows does not change the span.
//
// Columns >= main_cols never become pivots. Feeding rows an identity tag in
// those columns turns a vanishing main part into an explicit dependency
// certificate: the surviving tag coefficients combine the fed rows into the
// span of everything inserted before them.
class RowEchelon {
  public:
    explicit RowEchelon(int main_cols) : pivot_of_col_(main_cols, -1) {}

    int main_cols() const { return static_cast<int>(pivot_of_col_.size()); }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduce `row` against the current pivots (main columns only).
    SparseRow reduce(SparseRow row) const {
        for (std::size_t at = 0; at < row.size();) {
            int col = row[at].first;
            if (col >= main_cols()) break;  // tag region reached: main part done
            int pr = pivot_of_col_[col];
            if (pr < 0) {
                ++at;
                continue;
            }
            // leading coefficients: rows_[pr] starts at col by construction
            row = row_combine(rows_[pr][0].second, row, -row[at].second, rows_[pr]);
            row_normalize(row);
            // columns before `col` are already pivot-free; rescan from there
            while (at < row.size() && row[at].first < col) ++at;
        }
        return row;
    }

    // Returns the pivot column if the row added to the rank, or -1 if its main
    // part vanished (the reduced row, tags included, is stored in `leftover`).
    int insert(SparseRow row, SparseRow* leftover = nullptr) {
        row = reduce(std::move(row));
        if (row.empty() || row.front().first >= main_cols()) {
            if (leftover) *leftover = std::move(row);
            return -1;
        }
        row_normalize(row);
        int col = row.front().first;
        pivot_of_col_[col] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return col;
    }

    const std::vector<SparseRow>& rows() const { return rows_; }

  private:
    std::vector<SparseRow> rows_;
    std::vector<int> pivot_of_col_;
};

}  // namespace sympl
