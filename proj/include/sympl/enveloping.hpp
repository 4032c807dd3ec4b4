#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arrays.hpp"
#include "rational.hpp"
#include "symplectic.hpp"

namespace sympl {

// A word is a product of generators, stored left to right; normal form is the
// canonical non-decreasing order (t-exponent, then color). Combo is a linear
// combination of normal-form words over Q. The same container serves elements
// of U(hat-n-minus) and vectors of the level-k vacuum module: a module vector
// is a combination of normal-form words with all exponents negative, applied
// to the highest weight vector.
using Word = std::vector<Generator>;
using Combo = std::map<Word, Rat>;

inline void add_into(Combo& dst, const Word& w, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = dst.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) dst.erase(it);
    }
}

inline Combo combo_add(Combo a, const Combo& b) {
    for (const auto& [w, c] : b) add_into(a, w, c);
    return a;
}

inline Combo combo_scale(Combo a, const Rat& s) {
    if (s == 0) return {};
    for (auto& [w, c] : a) c *= s;
    return a;
}

inline bool combo_zero(const Combo& a) { return a.empty(); }

// If b == q*a for a single rational q != 0, return q.
inline std::optional<Rat> scalar_multiple(const Combo& a, const Combo& b) {
    if (a.empty() || a.size() != b.size()) return std::nullopt;
    Rat q = 0;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return std::nullopt;
        Rat r = ib->second / ia->second;
        if (q == 0)
            q = r;
        else if (q != r)
            return std::nullopt;
    }
    return q == 0 ? std::nullopt : std::optional<Rat>(q);
}

// [x(i), y(j)] = [x,y](i+j) + i delta_{i+j,0} <x,y> k, the central part already
// evaluated at the given level.
struct AffineBracket {
    std::vector<std::pair<Generator, long>> terms;
    Rat central = 0;
};

inline AffineBracket affine_bracket(const SymplecticAlgebra& g, Generator x, Generator y,
                                    const Rat& level) {
    AffineBracket out;
    int ix = g.color_index(x.col), iy = g.color_index(y.col);
    for (const auto& t : g.bracket(ix, iy))
        out.terms.emplace_back(Generator{x.n + y.n, g.color(t.color)}, t.coeff);
    if (x.n + y.n == 0) out.central = Rat(x.n) * g.form(ix, iy) * level;
    return out;
}

namespace detail {

// Straighten coeff * w into normal form by adjacent transpositions:
//   x(n) y(m) = y(m) x(n) + [x,y](n+m) + n * delta_{n+m,0} <x,y> K.
// In module mode K acts by `level` and any normal-form word with a trailing
// t-exponent >= 0 annihilates the highest weight vector; in algebra mode all
// exponents must stay negative, so neither rule can fire (asserted).
inline void straighten(const SymplecticAlgebra& g, const Rat* level, Rat coeff, Word w,
                       Combo& out) {
    struct Item {
        Rat c;
        Word w;
    };
    std::vector<Item> stack;
    stack.push_back({std::move(coeff), std::move(w)});
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        if (it.c == 0) continue;
        std::size_t inv = 0;
        while (inv + 1 < it.w.size() && !(it.w[inv + 1] < it.w[inv])) ++inv;
        if (inv + 1 >= it.w.size()) {  // already sorted
            if (!it.w.empty() && it.w.back().n >= 0) {
                if (level == nullptr)
                    throw std::logic_error("nonnegative t-exponent in algebra word");
                continue;  // annihilates the highest weight vector
            }
            add_into(out, it.w, it.c);
            continue;
        }
        Generator x = it.w[inv], y = it.w[inv + 1];
        Word swapped = it.w;
        std::swap(swapped[inv], swapped[inv + 1]);
        stack.push_back({it.c, std::move(swapped)});
        int ix = g.color_index(x.col), iy = g.color_index(y.col);
        for (const auto& t : g.bracket(ix, iy)) {
            Word shorter;
            shorter.reserve(it.w.size() - 1);
            shorter.insert(shorter.end(), it.w.begin(), it.w.begin() + inv);
            shorter.push_back({x.n + y.n, g.color(t.color)});
            shorter.insert(shorter.end(), it.w.begin() + inv + 2, it.w.end());
            stack.push_back({it.c * t.coeff, std::move(shorter)});
        }
        if (x.n + y.n == 0 && g.form(ix, iy) != 0) {
            if (level == nullptr) throw std::logic_error("central term in algebra word");
            Word shorter;
            shorter.reserve(it.w.size() - 2);
            shorter.insert(shorter.end(), it.w.begin(), it.w.begin() + inv);
            shorter.insert(shorter.end(), it.w.begin() + inv + 2, it.w.end());
            stack.push_back({it.c * x.n * g.form(ix, iy) * (*level), std::move(shorter)});
        }
    }
}

}  // namespace detail

//--- U(hat-n-minus) -----------------------------------------------------------

inline Combo u_normal_order(const SymplecticAlgebra& g, const Rat& coeff, Word w) {
    Combo out;
    detail::straighten(g, nullptr, coeff, std::move(w), out);
    return out;
}

inline Combo u_from_word(Word w) {
    for (std::size_t t = 1; t < w.size(); ++t)
        if (w[t] < w[t - 1]) throw std::invalid_argument("word not in normal form");
    Combo out;
    out.emplace(std::move(w), Rat(1));
    return out;
}

inline Combo u_mul(const SymplecticAlgebra& g, const Combo& a, const Combo& b) {
    Combo out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            detail::straighten(g, nullptr, ca * cb, std::move(w), out);
        }
    return out;
}

//--- level-k vacuum module ----------------------------------------------------

// x acting on a module vector; x may have any t-exponent.
inline Combo act(const SymplecticAlgebra& g, const Rat& level, Generator x, const Combo& vec) {
    Combo out;
    for (const auto& [w, c] : vec) {
        Word xw;
        xw.reserve(w.size() + 1);
        xw.push_back(x);
        xw.insert(xw.end(), w.begin(), w.end());
        detail::straighten(g, &level, c, std::move(xw), out);
    }
    return out;
}

// Apply a product of generators: the word's rightmost factor acts first.
inline Combo act_word(const SymplecticAlgebra& g, const Rat& level, const Word& w, Combo vec) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) vec = act(g, level, *it, std::move(vec));
    return vec;
}

inline Combo vacuum() { return {{Word{}, Rat(1)}}; }

// x_theta(-1)^(level+1) applied to the vacuum: the generating vector of the
// maximal submodule.
inline Combo singular_vector(const SymplecticAlgebra& g, int level) {
    Word w(level + 1, Generator{-1, g.color(g.theta())});
    Combo out;
    out.emplace(std::move(w), Rat(1));
    return out;
}

}  // namespace sympl
