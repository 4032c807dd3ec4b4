#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include <sympl/tables.hpp>

using namespace sympl;

namespace {

template <typename Fn>
std::string capture(Fn&& fn) {
    std::ostringstream os;
    fn(os);
    return os.str();
}

}  // namespace

TEST_CASE("format names") {
    REQUIRE(parse_format("csv") == OutputFormat::Csv);
    REQUIRE(parse_format("text") == OutputFormat::Text);
    REQUIRE(parse_format("structured") == OutputFormat::Structured);
    REQUIRE_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("count tables") {
    std::vector<CountRow> rows{{0, 1}, {1, 3}, {2, 4}};
    REQUIRE(capture([&](std::ostream& os) { render_counts(os, OutputFormat::Csv, rows); }) ==
            "degree,count\n0,1\n1,3\n2,4\n");
    REQUIRE(capture([&](std::ostream& os) { render_counts(os, OutputFormat::Text, rows); }) ==
            "degree  count\n"
            "     0      1\n"
            "     1      3\n"
            "     2      4\n");
    std::string js =
        capture([&](std::ostream& os) { render_counts(os, OutputFormat::Structured, rows); });
    auto parsed = nlohmann::json::parse(js);
    REQUIRE(parsed["counts"].size() == 3);
    REQUIRE(parsed["counts"][1]["degree"] == 1);
    REQUIRE(parsed["counts"][1]["count"] == 3);
}

TEST_CASE("graded tables") {
    std::vector<GradedRow> rows{{0, 1, 0, 1, 1, 1}, {2, 9, 5, 4, 4, 4}};
    REQUIRE(capture([&](std::ostream& os) { render_graded(os, OutputFormat::Csv, rows); }) ==
            "degree,ambient_dim,relation_rank,quotient_dim,admissible_count,monomial_rank\n"
            "0,1,0,1,1,1\n"
            "2,9,5,4,4,4\n");
    std::string js =
        capture([&](std::ostream& os) { render_graded(os, OutputFormat::Structured, rows); });
    auto parsed = nlohmann::json::parse(js);
    REQUIRE(parsed["slices"][1]["relation_rank"] == 5);
    REQUIRE(parsed["slices"][1]["quotient_dim"] == 4);
}

TEST_CASE("dimension tables carry arbitrary precision") {
    Int big = Int("123456789012345678901234567890");
    std::vector<DimRow> rows{{0, Int(1)}, {9, big}};
    REQUIRE(capture([&](std::ostream& os) { render_dims(os, OutputFormat::Csv, rows); }) ==
            "degree,dim\n0,1\n9,123456789012345678901234567890\n");
    std::string js =
        capture([&](std::ostream& os) { render_dims(os, OutputFormat::Structured, rows); });
    auto parsed = nlohmann::json::parse(js);
    // too wide for int64: must survive as a string, digit for digit
    REQUIRE(parsed["dims"][1]["dim"] == "123456789012345678901234567890");
    REQUIRE(parsed["dims"][0]["dim"] == 1);
}

TEST_CASE("identity report lines") {
    IdentityReport good{"T_1^1 x -> y", true, true, make_rat(-2)};
    IdentityReport plain{"T_1^2 x -> 0", true, false, Rat(0)};
    IdentityReport bad{"T_1^1 z -> w", false, false, Rat(0)};

    std::ostringstream os;
    bool ok = render_reports(os, {good, plain});
    REQUIRE(ok);
    REQUIRE(os.str() ==
            "ok   T_1^1 x -> y  scalar=-2\n"
            "ok   T_1^2 x -> 0\n");

    std::ostringstream os2;
    REQUIRE(!render_reports(os2, {good, bad}));
    REQUIRE(os2.str().find("FAIL T_1^1 z -> w") != std::string::npos);

    // line count equals report count
    std::string text = os2.str();
    REQUIRE(std::count(text.begin(), text.end(), '\n') == 2);
}
