#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include <sympl/partitions.hpp>

#include "support/oracles.hpp"

using namespace sympl;

TEST_CASE("canonical monomial order: deeper exponent first, then color") {
    std::vector<Generator> w{{-1, Color{1, 1}}, {-2, Color{4, 4}}, {-2, Color{1, 3}},
                            {-1, Color{1, 1}}, {-3, Color{2, 2}}};
    auto s = sort_monomial(w);
    std::vector<Generator> want{{-3, Color{2, 2}}, {-2, Color{1, 3}}, {-2, Color{4, 4}},
                               {-1, Color{1, 1}}, {-1, Color{1, 1}}};
    REQUIRE(s == want);
    REQUIRE(std::is_sorted(s.begin(), s.end()));
}

TEST_CASE("partition construction validates its parts") {
    Generator g{-1, Color{1, 1}};
    REQUIRE_THROWS_AS(ColoredPartition({{g, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(ColoredPartition({{g, 1}, {g, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(ColoredPartition({{Generator{1, Color{1, 1}}, 1}}), std::invalid_argument);
    ColoredPartition pi({{Generator{-2, Color{1, 2}}, 2}, {g, 1}});
    REQUIRE(pi.degree() == 5);
    REQUIRE(pi.length() == 3);
    REQUIRE(pi.mult(Generator{-2, Color{1, 2}}) == 2);
    REQUIRE(pi.mult(Generator{-5, Color{1, 2}}) == 0);
    REQUIRE(pi.word() == sort_monomial(pi.word()));
    REQUIRE(static_cast<int>(pi.word().size()) == pi.length());
}

TEST_CASE("enumeration agrees with the brute-force admissibility filter") {
    for (int ell = 1; ell <= 2; ++ell)
        for (int level = 1; level <= 2; ++level) {
            GeneratorArray arr(ell, ArrayKind::Full);
            int N = ell == 1 ? 5 : 4;
            auto fast = enumerate_partitions(arr, N, level);
            auto slow = oracles::brute_admissible(arr, N, level);
            REQUIRE(fast == slow);
            REQUIRE(std::is_sorted(fast.begin(), fast.end()));
            // unfiltered enumeration matches the raw universe too
            auto all = enumerate_partitions(arr, N, -1);
            REQUIRE(all == oracles::brute_all_partitions(arr, N));
        }
}

TEST_CASE("per-degree counts") {
    GeneratorArray a1(1, ArrayKind::Full);
    auto c11 = count_by_degree(enumerate_partitions(a1, 6, 1), 6);
    REQUIRE(c11 == std::vector<std::uint64_t>{1, 3, 4, 7, 13, 19, 29});
    auto c12 = count_by_degree(enumerate_partitions(a1, 6, 2), 6);
    REQUIRE(c12 == std::vector<std::uint64_t>{1, 3, 9, 15, 30, 54, 94});

    GeneratorArray a2(2, ArrayKind::Full);
    auto c21 = count_by_degree(enumerate_partitions(a2, 4, 1), 4);
    REQUIRE(c21 == std::vector<std::uint64_t>{1, 10, 30, 85, 205});
    auto c22 = count_by_degree(enumerate_partitions(a2, 4, 2), 4);
    REQUIRE(c22 == std::vector<std::uint64_t>{1, 10, 65, 246, 821});

    // raising the level only admits more partitions
    for (std::size_t n = 0; n < c21.size(); ++n) REQUIRE(c21[n] <= c22[n]);
    auto unfiltered = count_by_degree(enumerate_partitions(a2, 4, -1), 4);
    for (std::size_t n = 0; n < c22.size(); ++n) REQUIRE(c22[n] <= unfiltered[n]);
}

TEST_CASE("admissibility is monotone in the level") {
    GeneratorArray arr(1, ArrayKind::Full);
    for (const auto& pi : oracles::brute_all_partitions(arr, 4))
        for (int k = 1; k <= 3; ++k)
            if (admissible(arr, pi, k)) REQUIRE(admissible(arr, pi, k + 1));
}

TEST_CASE("enumeration respects the resource cap") {
    GeneratorArray arr(2, ArrayKind::Full);
    REQUIRE_THROWS_AS(enumerate_partitions(arr, 4, -1, 10), ResourceCapExceeded);
}

TEST_CASE("relabeling bijection is the identity on cells") {
    for (int ell = 1; ell <= 3; ++ell) {
        const int L = 2 * ell;
        for (int c = 1; c <= L; ++c)
            for (int i = c; i <= L; ++i) REQUIRE(phi_label(Color{c, i}, ell) == Color{c, i});
    }
}

TEST_CASE("relabeling bijection rewrites bars into high plain labels") {
    // at l = 3 the barred index values 3,2,1 become the plain labels 4,5,6
    REQUIRE(render_color(phi_label(parse_color("3~ 3~", 3), 3), 6) == "4 4");
    REQUIRE(render_color(phi_label(parse_color("1 3~", 3), 3), 6) == "1 4");
    REQUIRE(render_color(phi_label(parse_color("2 3~", 3), 3), 6) == "2 4");
    REQUIRE(render_color(phi_label(parse_color("1~ 1~", 3), 3), 6) == "6 6");
}

TEST_CASE("relabeling preserves degree, length, and path load") {
    for (int ell = 1; ell <= 2; ++ell) {
        GeneratorArray full(ell, ArrayKind::Full);
        GeneratorArray fs(ell, ArrayKind::FoldedSubspace);
        auto pis = oracles::brute_all_partitions(full, 5);
        std::vector<ColoredPartition> images;
        for (const auto& pi : pis) {
            ColoredPartition img = phi_bijection(pi, ell);
            REQUIRE(img.degree() == pi.degree());
            REQUIRE(img.length() == pi.length());
            REQUIRE(max_path_load(fs, img) == max_path_load(full, pi));
            images.push_back(img);
        }
        // and it is injective at this scale
        std::sort(images.begin(), images.end());
        REQUIRE(std::adjacent_find(images.begin(), images.end()) == images.end());
    }
}

TEST_CASE("partition serialization") {
    REQUIRE(render_generator(Generator{-1, Color{1, 4}}, 2) == "1 1̲(-1)");
    REQUIRE(render_part_record(Generator{-3, Color{2, 4}}, 2, 2) ==
            "{color: \"2 1̲\", degree: -3, mult: 2}");
    ColoredPartition pi({{Generator{-3, Color{2, 4}}, 2}, {Generator{-1, Color{1, 2}}, 1}});
    REQUIRE(render_partition(pi, 2) ==
            "[{color: \"2 1̲\", degree: -3, mult: 2}, {color: \"1 2\", degree: -1, mult: 1}]");
    REQUIRE(render_partition(ColoredPartition{}, 2) == "[]");
}
