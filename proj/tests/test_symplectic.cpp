#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <sstream>

#include <sympl/symplectic.hpp>

using namespace sympl;

namespace {

using Acc = std::map<int, long>;

void add_bracket(const SymplecticAlgebra& g, Acc& acc, int x, int y, long c) {
    for (const auto& t : g.bracket(x, y)) acc[t.color] += c * t.coeff;
}

bool acc_zero(const Acc& acc) {
    for (const auto& [col, c] : acc)
        if (c != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("basis size and color catalogue") {
    for (int m = 1; m <= 6; ++m) {
        SymplecticAlgebra g(m);
        REQUIRE(g.dim() == m * (2 * m + 1));
        int cartans = 0;
        for (int idx = 0; idx < g.dim(); ++idx) {
            REQUIRE(color_valid(g.color(idx), m));
            REQUIRE(g.color_index(g.color(idx)) == idx);
            if (g.is_cartan(idx)) ++cartans;
        }
        REQUIRE(cartans == m);
    }
    REQUIRE_THROWS_AS(SymplecticAlgebra(0), std::invalid_argument);
}

TEST_CASE("bracket satisfies antisymmetry and the Jacobi identity") {
    for (int m = 1; m <= 6; ++m) {
        SymplecticAlgebra g(m);
        const int d = g.dim();
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                Acc anti;
                add_bracket(g, anti, x, y, 1);
                add_bracket(g, anti, y, x, 1);
                REQUIRE(acc_zero(anti));
            }
        for (int x = 0; x < d; ++x)
            for (int y = x; y < d; ++y)
                for (int z = y; z < d; ++z) {
                    Acc jac;
                    for (const auto& t : g.bracket(y, z)) add_bracket(g, jac, x, t.color, t.coeff);
                    for (const auto& t : g.bracket(z, x)) add_bracket(g, jac, y, t.color, t.coeff);
                    for (const auto& t : g.bracket(x, y)) add_bracket(g, jac, z, t.color, t.coeff);
                    if (!acc_zero(jac)) {
                        CAPTURE(m, g.render(x), g.render(y), g.render(z));
                        REQUIRE(acc_zero(jac));
                    }
                }
    }
}

TEST_CASE("trace form is symmetric, invariant, and correctly normalized") {
    for (int m = 1; m <= 4; ++m) {
        SymplecticAlgebra g(m);
        const int d = g.dim();
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                REQUIRE(g.form(x, y) == g.form(y, x));
                for (int z = 0; z < d; ++z) {
                    long lhs = 0, rhs = 0;
                    for (const auto& t : g.bracket(x, y)) lhs += t.coeff * g.form(t.color, z);
                    for (const auto& t : g.bracket(y, z)) rhs += g.form(x, t.color) * t.coeff;
                    REQUIRE(lhs == rhs);
                }
            }
        // highest-root normalization: squared length 2, dual pair pairing 1
        REQUIRE(weight_dot2(g.weight(g.theta()), g.weight(g.theta())) == 4);
        REQUIRE(g.form(g.theta(), g.theta_opposite()) == 1);
        for (int a = 1; a <= m; ++a) REQUIRE(g.form(g.cartan(a), g.cartan(a)) == 2);
        // the form pairs opposite weights only
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                if (g.form(x, y) != 0)
                    for (int a = 1; a <= m; ++a)
                        REQUIRE(g.weight_at(x, a) + g.weight_at(y, a) == 0);
    }
}

TEST_CASE("weights and grades are additive under the bracket") {
    for (int m = 1; m <= 4; ++m) {
        SymplecticAlgebra g(m);
        const int d = g.dim();
        for (int x = 0; x < d; ++x) {
            // Cartan action is by the weight
            for (int a = 1; a <= m; ++a) {
                const auto& terms = g.bracket(g.cartan(a), x);
                if (g.weight_at(x, a) == 0) {
                    REQUIRE(terms.empty());
                } else {
                    REQUIRE(terms.size() == 1);
                    REQUIRE(terms[0].color == x);
                    REQUIRE(terms[0].coeff == g.weight_at(x, a));
                }
            }
            for (int y = 0; y < d; ++y)
                for (const auto& t : g.bracket(x, y)) {
                    REQUIRE(g.grade(t.color) == g.grade(x) + g.grade(y));
                    for (int a = 1; a <= m; ++a)
                        REQUIRE(g.weight_at(t.color, a) == g.weight_at(x, a) + g.weight_at(y, a));
                }
        }
    }
}

TEST_CASE("specific structure constants") {
    SymplecticAlgebra g(2);
    int top = g.theta(), bot = g.theta_opposite();
    auto terms = g.bracket(top, bot);
    REQUIRE(terms.size() == 1);
    REQUIRE(terms[0].color == g.cartan(1));
    REQUIRE(terms[0].coeff == 1);

    // short-root ladder inside sp(6): [e_{eps1-eps2}, e_{eps2-eps3}] lands on eps1-eps3
    SymplecticAlgebra h(3);
    int e12 = h.color_index(parse_color("1 2~", 3));
    int e23 = h.color_index(parse_color("2 3~", 3));
    int e13 = h.color_index(parse_color("1 3~", 3));
    auto ladder = h.bracket(e12, e23);
    REQUIRE(ladder.size() == 1);
    REQUIRE(ladder[0].color == e13);
    REQUIRE(ladder[0].coeff != 0);
}

TEST_CASE("label parsing and rendering round-trip") {
    for (int m = 1; m <= 4; ++m) {
        SymplecticAlgebra g(m);
        for (int idx = 0; idx < g.dim(); ++idx) {
            Color x = g.color(idx);
            REQUIRE(parse_color(render_color(x, m), m) == x);
        }
    }
    REQUIRE(parse_color("1 2~", 2) == parse_color("1 2̲", 2));
    REQUIRE(parse_color("12~", 2) == Color{1, 3});
    REQUIRE(parse_color("1~1~", 2) == Color{4, 4});
    REQUIRE(render_color(Color{3, 4}, 2) == "2̲ 1̲");
    REQUIRE_THROWS_AS(parse_color("2 1", 2), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_color("0 1", 2), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_color("1 5", 2), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_color("1 2x", 3), std::invalid_argument);
}

TEST_CASE("corner embedding is a homomorphism preserving the form") {
    for (int m = 1; m <= 3; ++m) {
        int big = 2 * m;
        SymplecticAlgebra g(m), G(big);
        auto lift = [&](int idx) { return G.color_index(embed_color(g.color(idx), m, big)); };
        for (int x = 0; x < g.dim(); ++x)
            for (int y = 0; y < g.dim(); ++y) {
                Acc diff;
                for (const auto& t : g.bracket(x, y)) diff[lift(t.color)] += t.coeff;
                for (const auto& t : G.bracket(lift(x), lift(y))) diff[t.color] -= t.coeff;
                REQUIRE(acc_zero(diff));
                REQUIRE(g.form(x, y) == G.form(lift(x), lift(y)));
            }
    }
    REQUIRE_THROWS_AS(embed_color(Color{1, 1}, 3, 2), std::invalid_argument);
}

TEST_CASE("model dump golden") {
    SymplecticAlgebra g(1);
    std::ostringstream os;
    dump_model(g, os);
    REQUIRE(os.str() ==
            "symplectic-model rank 1\n"
            "dim 3\n"
            "basis 0 \"1 1\" weight (2) grade 1\n"
            "basis 1 \"1 1̲\" weight (0) grade 0\n"
            "basis 2 \"1̲ 1̲\" weight (-2) grade -1\n"
            "bracket \"1 1\" \"1 1̲\" = -2*\"1 1\"\n"
            "bracket \"1 1\" \"1̲ 1̲\" = 1*\"1 1̲\"\n"
            "bracket \"1 1̲\" \"1 1\" = 2*\"1 1\"\n"
            "bracket \"1 1̲\" \"1̲ 1̲\" = -2*\"1̲ 1̲\"\n"
            "bracket \"1̲ 1̲\" \"1 1\" = -1*\"1 1̲\"\n"
            "bracket \"1̲ 1̲\" \"1 1̲\" = 2*\"1̲ 1̲\"\n"
            "form \"1 1\" \"1̲ 1̲\" = 1\n"
            "form \"1 1̲\" \"1 1̲\" = 2\n");
}
