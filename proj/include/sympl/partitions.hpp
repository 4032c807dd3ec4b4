#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrays.hpp"

namespace sympl {

struct ResourceCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite multiset of generators, kept sorted in the canonical order.
class ColoredPartition {
  public:
    using Parts = std::vector<std::pair<Generator, int>>;

    ColoredPartition() = default;
    explicit ColoredPartition(Parts parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end());
        for (std::size_t t = 0; t < parts_.size(); ++t) {
            if (parts_[t].second <= 0) throw std::invalid_argument("multiplicity must be positive");
            if (t > 0 && parts_[t - 1].first == parts_[t].first)
                throw std::invalid_argument("duplicate part");
            if (parts_[t].first.n >= 0) throw std::invalid_argument("parts must have negative degree");
        }
    }

    const Parts& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    int degree() const {
        int s = 0;
        for (const auto& [g, m] : parts_) s += -g.n * m;
        return s;
    }
    int length() const {
        int s = 0;
        for (const auto& [g, m] : parts_) s += m;
        return s;
    }
    int mult(Generator g) const {
        for (const auto& [h, m] : parts_)
            if (h == g) return m;
        return 0;
    }

    // The monomial's factors in the canonical order, multiplicities expanded.
    std::vector<Generator> word() const {
        std::vector<Generator> w;
        for (const auto& [g, m] : parts_) w.insert(w.end(), m, g);
        return w;
    }

    friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;
    // degree-lex: total degree first, then the part lists lexicographically.
    friend bool operator<(const ColoredPartition& a, const ColoredPartition& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.parts_ < b.parts_;
    }

  private:
    Parts parts_;
};

inline std::vector<Generator> sort_monomial(std::vector<Generator> gens) {
    std::sort(gens.begin(), gens.end());
    return gens;
}

inline int max_path_load(const GeneratorArray& arr, const ColoredPartition& pi) {
    return arr.max_path_load(pi.parts());
}

inline bool admissible(const GeneratorArray& arr, const ColoredPartition& pi, int level) {
    return max_path_load(arr, pi) <= level;
}

// All partitions over the array with parts of t-exponent >= -max_degree and
// total degree <= max_degree; level < 0 disables the admissibility filter.
// Output in degree-lex order. Throws ResourceCapExceeded past `cap` results.
inline std::vector<ColoredPartition> enumerate_partitions(const GeneratorArray& arr,
                                                          int max_degree, int level,
                                                          std::uint64_t cap = 5'000'000) {
    std::vector<Generator> universe;
    const int L = 2 * arr.ell();
    for (int n = -max_degree; n <= -1; ++n)
        for (int c = 1; c <= L; ++c)
            for (int i = c; i <= L; ++i) universe.push_back({n, Color{c, i}});

    std::vector<ColoredPartition> out;
    ColoredPartition::Parts cur;
    auto emit = [&](const ColoredPartition::Parts& parts) {
        out.emplace_back(ColoredPartition(parts));
        if (out.size() > cap) throw ResourceCapExceeded("partition enumeration cap exceeded");
    };
    // Depth-first over the fixed generator order; admissibility is monotone in
    // every multiplicity, so a busted prefix prunes the whole branch.
    auto rec = [&](auto&& self, std::size_t at, int remaining) -> void {
        if (remaining == 0 || at == universe.size()) {
            if (!cur.empty()) emit(cur);
            return;
        }
        self(self, at + 1, remaining);
        Generator g = universe[at];
        int unit = -g.n;
        for (int m = 1; m * unit <= remaining; ++m) {
            cur.emplace_back(g, m);
            if (level >= 0 && arr.max_path_load(cur) > level) {
                cur.pop_back();
                break;
            }
            self(self, at + 1, remaining - m * unit);
            cur.pop_back();
        }
    };
    rec(rec, 0, max_degree);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::uint64_t> count_by_degree(const std::vector<ColoredPartition>& pis,
                                                  int max_degree) {
    std::vector<std::uint64_t> counts(max_degree + 1, 0);
    counts[0] = 1;  // the empty partition
    for (const auto& pi : pis) counts.at(pi.degree())++;
    return counts;
}

// Color relabeling between the two array kinds: plain pairs keep their labels,
// ab|bar -> a(2l-b+1), abar bbar -> (2l-a+1)(2l-b+1). On cells this is the
// identity, which the tests verify against these index formulas.
inline Color phi_label(Color x, int ell) {
    auto to_plain = [&](int pos) {
        return index_barred(pos, ell) ? 2 * ell - index_value(pos, ell) + 1 : index_value(pos, ell);
    };
    int u = to_plain(x.c), v = to_plain(x.i);
    if (u > v) std::swap(u, v);
    return {u, v};
}

inline ColoredPartition phi_bijection(const ColoredPartition& pi, int ell) {
    ColoredPartition::Parts parts;
    for (const auto& [g, m] : pi.parts()) parts.emplace_back(Generator{g.n, phi_label(g.col, ell)}, m);
    return ColoredPartition(std::move(parts));
}

inline std::string render_generator(Generator g, int label_rank) {
    return render_color(g.col, label_rank) + "(" + std::to_string(g.n) + ")";
}

// One part: {color: "2 1~", degree: -3, mult: 2} (with the real bar mark).
inline std::string render_part_record(Generator g, int mult, int label_rank) {
    std::ostringstream os;
    os << "{color: \"" << render_color(g.col, label_rank) << "\", degree: " << g.n
       << ", mult: " << mult << "}";
    return os.str();
}

inline std::string render_partition(const ColoredPartition& pi, int label_rank) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [g, m] : pi.parts()) {
        if (!first) os << ", ";
        first = false;
        os << render_part_record(g, m, label_rank);
    }
    os << "]";
    return os.str();
}

}  // namespace sympl
