#include <catch_amalgamated.hpp>

#include <sstream>
#include <vector>

#include "loh/datagen.hpp"
#include "loh/io.hpp"

TEST_CASE("values round-trip exactly")
{
    const auto values = loh::generate_values(2000, loh::Distribution::uniform_real, 12);
    std::stringstream ss;
    loh::write_values(ss, values);
    CHECK(loh::read_values(ss) == values);

    std::stringstream odd;
    odd << "1e-310\n-0\n\n  3.5  \n";
    const auto parsed = loh::read_values(odd);
    REQUIRE(parsed.size() == 3);
    CHECK(parsed[0] == 1e-310);
    CHECK(parsed[2] == 3.5);
}

TEST_CASE("malformed values report the line")
{
    std::stringstream ss("1\n2\nthree\n");
    CHECK_THROWS_WITH(loh::read_values(ss), Catch::Matchers::ContainsSubstring("line 3"));
}

TEST_CASE("layouts round-trip and are validated on read")
{
    const auto layout = loh::layout_for(1000, loh::Rank{1.5});
    std::stringstream ss;
    loh::write_layout(ss, layout);
    CHECK(loh::read_layout(ss) == layout);

    std::stringstream bad("0\n5\n3\n10\n");
    CHECK_THROWS_AS(loh::read_layout(bad), loh::IoError);
    std::stringstream negative("0\n-1\n");
    CHECK_THROWS_AS(loh::read_layout(negative), loh::IoError);
}

TEST_CASE("hypotheses round-trip with ids by row")
{
    const auto data = loh::generate_hypotheses(300, 0.6, 2);
    std::stringstream ss;
    loh::write_hypotheses(ss, data);
    const auto back = loh::read_hypotheses(ss);
    REQUIRE(back.size() == data.size());
    for (std::size_t i = 0; i < data.size(); ++i)
    {
        CHECK(back[i].score == data[i].score);
        CHECK(back[i].label == data[i].label);
        CHECK(back[i].id == i);
    }

    std::stringstream no_header("1.0\tTP\n");
    CHECK_THROWS_AS(loh::read_hypotheses(no_header), loh::IoError);
    std::stringstream bad_label("score\tlabel\n1.0\tXX\n");
    CHECK_THROWS_AS(loh::read_hypotheses(bad_label), loh::IoError);
}

TEST_CASE("missing files raise IoError")
{
    CHECK_THROWS_AS(loh::read_values(std::filesystem::path("/nonexistent/values.txt")), loh::IoError);
    CHECK_THROWS_AS(loh::write_values(std::filesystem::path("/nonexistent/dir/out.txt"), std::vector<double>{1.0}),
                    loh::IoError);
}

TEST_CASE("generated data is reproducible and shaped as named")
{
    for (auto dist : loh::all_distributions)
    {
        CHECK(loh::generate_values(100, dist, 7) == loh::generate_values(100, dist, 7));
        CHECK(loh::parse_distribution(loh::distribution_name(dist)) == dist);
    }
    const auto up = loh::generate_values(500, loh::Distribution::sorted, 1);
    CHECK(std::is_sorted(up.begin(), up.end()));
    const auto down = loh::generate_values(500, loh::Distribution::reverse_sorted, 1);
    CHECK(std::is_sorted(down.rbegin(), down.rend()));
    auto few = loh::generate_values(100, loh::Distribution::few_distinct, 7);
    std::sort(few.begin(), few.end());
    CHECK(std::unique(few.begin(), few.end()) - few.begin() <= 8);
    for (double x : loh::generate_values(1000, loh::Distribution::uniform_int, 3))
    {
        CHECK(x == std::floor(x));
        CHECK(x >= 0.0);
        CHECK(x < 1e6);
    }
}
