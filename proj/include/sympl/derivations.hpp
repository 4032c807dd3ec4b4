#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "enveloping.hpp"
#include "partitions.hpp"

namespace sympl {

// Shift operators live in the doubled algebra: for a partition over the rank-l
// color set, the ambient algebra has rank 2l. T_a is the adjoint action of the
// degree-zero element t_a = x_{e_a + e_{2l-a+1}}, one operator per a = 1..l.

inline int shift_color(const SymplecticAlgebra& g, int a) {
    int m = g.rank();
    if (m % 2 != 0) throw std::invalid_argument("shift operators need an even-rank algebra");
    if (a < 1 || 2 * a > m) throw std::invalid_argument("shift index out of range");
    return g.color_index(Color{a, m - a + 1});
}

// ad(t_a) extended to U by the Leibniz rule, result restraightened.
inline Combo apply_shift(const SymplecticAlgebra& g, int a, const Combo& u) {
    int t = shift_color(g, a);
    Combo out;
    for (const auto& [w, c] : u)
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            int x = g.color_index(w[pos].col);
            for (const auto& term : g.bracket(t, x)) {
                Word repl = w;
                repl[pos] = Generator{w[pos].n, g.color(term.color)};
                detail::straighten(g, nullptr, c * term.coeff, std::move(repl), out);
            }
        }
    return out;
}

inline Combo apply_shift_power(const SymplecticAlgebra& g, int a, int times, Combo u) {
    for (int r = 0; r < times && !u.empty(); ++r) u = apply_shift(g, a, u);
    return u;
}

//--- bar bookkeeping on rank-l partitions --------------------------------------

// Multiplicity of the barred index a across all parts, counted with part
// multiplicities; a doubly-barred diagonal color contributes twice.
inline int bar_index_mult(const ColoredPartition& pi, int ell, int a) {
    int pos = index_pos(a, true, ell);
    int total = 0;
    for (const auto& [gen, mult] : pi.parts())
        total += mult * ((gen.col.c == pos ? 1 : 0) + (gen.col.i == pos ? 1 : 0));
    return total;
}

struct ShiftPlan {
    std::vector<int> bar_mult;              // entry a-1 for a = 1..l
    int total = 0;                          // sum of all entries
    std::vector<std::pair<int, int>> steps; // (a, power), applied in order a = l..1
};

inline ShiftPlan shift_plan(const ColoredPartition& pi, int ell) {
    ShiftPlan plan;
    plan.bar_mult.resize(ell);
    for (int a = 1; a <= ell; ++a) {
        plan.bar_mult[a - 1] = bar_index_mult(pi, ell, a);
        plan.total += plan.bar_mult[a - 1];
    }
    for (int a = ell; a >= 1; --a)
        if (plan.bar_mult[a - 1] > 0) plan.steps.emplace_back(a, plan.bar_mult[a - 1]);
    return plan;
}

// Relabel every barred index a as the plain index 2l-a+1. The image uses the
// doubled label range, so render it with label rank 2l.
inline ColoredPartition color_shift(const ColoredPartition& pi, int ell) {
    ColoredPartition::Parts parts;
    for (const auto& [gen, mult] : pi.parts()) {
        int p[2] = {gen.col.c, gen.col.i};
        for (int& q : p)
            if (index_barred(q, ell)) q = index_pos(2 * ell - index_value(q, ell) + 1, false, ell);
        Color img{std::min(p[0], p[1]), std::max(p[0], p[1])};
        parts.emplace_back(Generator{gen.n, img}, mult);
    }
    return ColoredPartition(std::move(parts));
}

// The word u(pi) inside the doubled algebra: barred labels keep their values,
// which moves their positions to the doubled range.
inline Word embedded_word(const ColoredPartition& pi, int ell, const SymplecticAlgebra& big) {
    Word w;
    for (const auto& gen : pi.word())
        w.push_back(Generator{gen.n, embed_color(gen.col, ell, big.rank())});
    return sort_monomial(std::move(w));
}

// The plan word acting on a module vector through the module action itself:
// t_a(u v) = (T_a u) v because t_a annihilates the highest weight vector, so
// this must agree with apply_shift followed by evaluation.
inline Combo adjoint_word_action(const SymplecticAlgebra& g, const Rat& level,
                                 const ShiftPlan& plan, Combo w) {
    for (auto [a, power] : plan.steps) {
        Generator t{0, g.color(shift_color(g, a))};
        for (int r = 0; r < power && !w.empty(); ++r) w = act(g, level, t, std::move(w));
    }
    return w;
}

//--- single-identity verification ----------------------------------------------

struct IdentityReport {
    std::string name;
    bool ok = false;
    bool proportional = false;  // scalar field is meaningful
    Rat scalar = 0;
};

namespace detail {

inline std::string gen_label(const SymplecticAlgebra& g, int color, int n) {
    std::ostringstream os;
    os << g.render(color) << "(" << n << ")";
    return os.str();
}

inline IdentityReport check_proportional(const std::string& name, const Combo& got,
                                         const Combo& want) {
    IdentityReport rep;
    rep.name = name;
    if (auto q = scalar_multiple(want, got)) {
        rep.ok = true;
        rep.proportional = true;
        rep.scalar = *q;
    }
    return rep;
}

inline IdentityReport check_zero(const std::string& name, const Combo& got) {
    IdentityReport rep;
    rep.name = name;
    rep.ok = combo_zero(got);
    return rep;
}

}  // namespace detail

// Behaviour of one shift operator on single generators x(n). Four families:
// barred pairs containing index a move to their shifted partner, with the
// doubly-barred diagonal needing two steps, and everything not touching the
// indices a-bar or (2l-a+1)-bar dies by the second application.
inline std::vector<IdentityReport> verify_shift_single(const SymplecticAlgebra& g, int a, int n) {
    int m = g.rank();
    int half = m / 2;
    if (m % 2 != 0 || a < 1 || a > half) throw std::invalid_argument("bad shift index");
    int posA = index_pos(a, true, m);          // a barred
    int posS = index_pos(m - a + 1, false, m); // shifted partner, plain
    int posSbar = index_pos(m - a + 1, true, m);
    std::vector<IdentityReport> out;
    auto single = [&](int color) { return u_from_word({Generator{n, g.color(color)}}); };
    auto name = [&](int k, int color, const char* rhs) {
        std::ostringstream os;
        os << "T_" << a << "^" << k << " " << detail::gen_label(g, color, n) << " -> " << rhs;
        return os.str();
    };

    for (int b = 1; b <= a; ++b) {
        int x = g.color_index(Color{std::min(posA, index_pos(b, true, m)),
                                    std::max(posA, index_pos(b, true, m))});
        if (b == a) {
            int y = g.color_index(Color{posS, posA});
            int z = g.color_index(Color{posS, posS});
            out.push_back(detail::check_proportional(
                name(1, x, "shifted pair"), apply_shift(g, a, single(x)), single(y)));
            out.push_back(detail::check_proportional(
                name(2, x, "shifted diagonal"),
                apply_shift_power(g, a, 2, single(x)), single(z)));
            out.push_back(detail::check_zero(name(3, x, "0"),
                                             apply_shift_power(g, a, 3, single(x))));
        } else {
            int y = g.color_index(Color{posS, index_pos(b, true, m)});
            out.push_back(detail::check_proportional(
                name(1, x, "shifted pair"), apply_shift(g, a, single(x)), single(y)));
            out.push_back(detail::check_zero(name(2, x, "0"),
                                             apply_shift_power(g, a, 2, single(x))));
        }
    }
    for (int c = 1; c <= m - a + 1; ++c) {
        int x = g.color_index(Color{std::min(c, posA), std::max(c, posA)});
        int y = g.color_index(Color{std::min(c, posS), std::max(c, posS)});
        out.push_back(detail::check_proportional(
            name(1, x, "shifted pair"), apply_shift(g, a, single(x)), single(y)));
        out.push_back(detail::check_zero(name(2, x, "0"),
                                         apply_shift_power(g, a, 2, single(x))));
    }
    for (int idx = 0; idx < g.dim(); ++idx) {
        Color col = g.color(idx);
        if (col.c == posA || col.i == posA || col.c == posSbar || col.i == posSbar) continue;
        out.push_back(detail::check_zero(name(2, idx, "0"),
                                         apply_shift_power(g, a, 2, single(idx))));
    }
    return out;
}

enum class PowerCase { Diagonal, Column, Row };

// Pure powers of a single color: the full bar multiplicity of the power is the
// number of applications needed to land on the shifted power, one more kills it.
inline std::vector<IdentityReport> verify_shift_powers(const SymplecticAlgebra& g, int a, int n,
                                                       int m, PowerCase which) {
    int M = g.rank();
    int half = M / 2;
    if (M % 2 != 0 || a < 1 || a > half || m < 1) throw std::invalid_argument("bad power case");
    int posA = index_pos(a, true, M);
    int posS = index_pos(M - a + 1, false, M);
    std::vector<IdentityReport> out;
    auto run = [&](int x, int y, int steps) {
        Word wx(m, Generator{n, g.color(x)});
        Word wy(m, Generator{n, g.color(y)});
        Combo u = u_from_word(wx);
        Combo reached = apply_shift_power(g, a, steps * m, u);
        std::ostringstream base;
        base << "T_" << a << "^" << steps * m << " " << detail::gen_label(g, x, n) << "^" << m;
        out.push_back(detail::check_proportional(base.str() + " -> shifted power", reached,
                                                 u_from_word(wy)));
        out.push_back(detail::check_zero(base.str() + " * T -> 0", apply_shift(g, a, reached)));
    };
    switch (which) {
        case PowerCase::Diagonal:
            run(g.color_index(Color{posA, posA}), g.color_index(Color{posS, posS}), 2);
            break;
        case PowerCase::Column:
            for (int b = 1; b < a; ++b) {
                int pb = index_pos(b, true, M);
                run(g.color_index(Color{posA, pb}), g.color_index(Color{posS, pb}), 1);
            }
            break;
        case PowerCase::Row:
            for (int c = 1; c <= M - a + 1; ++c) {
                run(g.color_index(Color{std::min(c, posA), std::max(c, posA)}),
                    g.color_index(Color{std::min(c, posS), std::max(c, posS)}), 1);
            }
            break;
    }
    return out;
}

//--- end-to-end shift of a whole monomial ---------------------------------------

struct ShiftCheck {
    bool ok = false;
    Rat scalar = 0;
    std::string detail;
};

// Applying the full plan of pi to u(pi) inside the doubled algebra must land on
// the relabeled monomial, up to a nonzero rational.
inline ShiftCheck verify_color_shift(const ColoredPartition& pi, int ell,
                                     const SymplecticAlgebra& big) {
    ShiftCheck res;
    Combo u = u_from_word(embedded_word(pi, ell, big));
    ShiftPlan plan = shift_plan(pi, ell);
    for (auto [a, power] : plan.steps) u = apply_shift_power(big, a, power, std::move(u));
    ColoredPartition img = color_shift(pi, ell);
    Word target;
    for (const auto& gen : img.word()) target.push_back(gen);
    Combo want = u_from_word(sort_monomial(std::move(target)));
    std::ostringstream os;
    os << render_partition(pi, ell) << " => " << render_partition(img, 2 * ell);
    res.detail = os.str();
    if (auto q = scalar_multiple(want, u)) {
        res.ok = true;
        res.scalar = *q;
    }
    return res;
}

// The plan of pi0 annihilates any monomial with a different bar profile and no
// larger total bar count.
inline bool verify_shift_selection(const ColoredPartition& pi0, const ColoredPartition& other,
                                   int ell, const SymplecticAlgebra& big) {
    ShiftPlan p0 = shift_plan(pi0, ell);
    ShiftPlan po = shift_plan(other, ell);
    if (po.bar_mult == p0.bar_mult || po.total > p0.total)
        throw std::invalid_argument("selection test needs a distinct profile of no larger size");
    Combo u = u_from_word(embedded_word(other, ell, big));
    for (auto [a, power] : p0.steps) u = apply_shift_power(big, a, power, std::move(u));
    return combo_zero(u);
}

}  // namespace sympl
