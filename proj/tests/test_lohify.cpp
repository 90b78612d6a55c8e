#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "loh/datagen.hpp"
#include "loh/lohify.hpp"
#include "loh/rng.hpp"

using loh::InstrumentedComparator;
using loh::LohifyStrategy;
using loh::Rank;
using loh::Strategy;

namespace
{
    using Trace = std::vector<std::size_t>;

    loh::LohResult run(std::vector<double>& p_values, Strategy p_kind, double p_alpha, std::uint64_t p_seed = 0)
    {
        InstrumentedComparator<> cmp;
        return loh::lohify(std::span<double>(p_values), LohifyStrategy{p_kind, Rank{p_alpha}, p_seed}, cmp);
    }

    std::vector<double> ten() { return {9, 1, 8, 2, 7, 3, 6, 4, 5, 0}; }

    std::vector<std::size_t> boundaries_of(const loh::LayerLayout& p_layout)
    {
        return {p_layout.boundaries().begin(), p_layout.boundaries().end()};
    }
}

TEST_CASE("strategy names round-trip")
{
    for (Strategy s : loh::all_strategies)
    {
        CHECK(loh::parse_strategy(loh::strategy_name(s)) == s);
    }
    CHECK(loh::parse_strategy("ppcca") == Strategy::ppcca);
    CHECK_FALSE(loh::parse_strategy("heap").has_value());
}

TEST_CASE("empty input is rejected by every strategy")
{
    for (Strategy s : loh::all_strategies)
    {
        std::vector<double> empty;
        CHECK_THROWS_AS(run(empty, s, 2.0), std::invalid_argument);
    }
}

TEST_CASE("sort strategy examples")
{
    auto a = ten();
    const auto r = run(a, Strategy::sort, 2.0);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(boundaries_of(r.layout) == std::vector<std::size_t>{0, 1, 3, 7, 10});

    std::vector<double> three{3, 1, 2};
    CHECK(boundaries_of(run(three, Strategy::sort, 2.0).layout) == std::vector<std::size_t>{0, 1, 3});
    CHECK(three == std::vector<double>{1, 2, 3});

    std::vector<double> sorted{1, 2, 3, 4, 5, 6};
    const auto rs = run(sorted, Strategy::sort, 1.5);
    CHECK(sorted == std::vector<double>{1, 2, 3, 4, 5, 6});
    CHECK(loh::is_loh(sorted, rs.layout));
}

TEST_CASE("slwgi selects from the last layer down")
{
    auto a = ten();
    const auto r = run(a, Strategy::slwgi, 2.0);
    CHECK(r.trace == Trace{7, 3, 1});
    CHECK(loh::is_loh(a, r.layout));

    std::vector<double> one{1};
    CHECK(run(one, Strategy::slwgi, 2.0).trace.empty());

    std::vector<double> three{3, 2, 1};
    const auto r3 = run(three, Strategy::slwgi, 2.0);
    CHECK(r3.trace == Trace{1});
    CHECK(boundaries_of(r3.layout) == std::vector<std::size_t>{0, 1, 3});
    CHECK(three[0] == 1);
    CHECK((three == std::vector<double>{1, 2, 3} || three == std::vector<double>{1, 3, 2}));
}

TEST_CASE("sdrpih selects at the median remaining pivot first")
{
    auto a = ten();
    const auto r = run(a, Strategy::sdrpih, 2.0);
    CHECK(r.trace == Trace{3, 1, 7});
    CHECK(loh::is_loh(a, r.layout));

    std::vector<double> one{4};
    CHECK(run(one, Strategy::sdrpih, 2.0).trace.empty());

    std::vector<double> four{4, 3, 1, 2};
    const auto r4 = run(four, Strategy::sdrpih, 1.0);
    CHECK(r4.trace == Trace{2, 1, 3});
    CHECK(four == std::vector<double>{1, 2, 3, 4});
}

TEST_CASE("sdrpih recursion depth is logarithmic in the layer count")
{
    loh::SeededRng rng(3);
    for (double alpha : {1.0, 1.05, 1.5, 2.0})
    {
        auto a = loh::generate_values(5000, loh::Distribution::uniform_real, 17);
        const auto r = run(a, Strategy::sdrpih, alpha);
        const double layers = static_cast<double>(r.layout.layer_count());
        CHECK(static_cast<double>(r.max_depth) <= std::ceil(std::log2(layers)) + 1);
    }
}

TEST_CASE("ppcca selects the pivot closest to the centre, ties to the left")
{
    auto a = ten();
    const auto r = run(a, Strategy::ppcca, 2.0);
    CHECK(r.trace == Trace{3, 1, 7});
    CHECK(loh::is_loh(a, r.layout));

    std::vector<double> two{2, 1};
    const auto r2 = run(two, Strategy::ppcca, 2.0);
    CHECK(r2.trace == Trace{1});
    CHECK(two == std::vector<double>{1, 2});

    std::vector<double> eight{8, 3, 5, 1, 7, 2, 6, 4};
    const auto r8 = run(eight, Strategy::ppcca, 1.0);
    CHECK(eight == std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(r8.comparisons <= 8 * 3 * 8);
}

TEST_CASE("all-equal input is a LOH for every strategy")
{
    for (Strategy s : loh::all_strategies)
    {
        std::vector<double> same{5, 5, 5, 5};
        const auto r = run(same, s, 2.0, 7);
        CHECK(same == std::vector<double>{5, 5, 5, 5});
        CHECK(loh::is_loh(same, r.layout));
    }
}

TEST_CASE("every strategy yields a LOH and preserves the multiset")
{
    loh::SeededRng rng(2024);
    for (int trial = 0; trial < 60; ++trial)
    {
        const std::size_t n = trial < 20 ? 1 + rng.uniform_index(64) : 1 + rng.uniform_index(1u << 14);
        const auto dist = loh::all_distributions[trial % loh::all_distributions.size()];
        const auto input = loh::generate_values(n, dist, static_cast<std::uint64_t>(trial));
        auto sorted = input;
        std::sort(sorted.begin(), sorted.end());
        for (double alpha : {1.0, 1.0 + 4.0 / static_cast<double>(n), 1.05, 1.5, 2.0, 6.0})
        {
            for (Strategy s : loh::all_strategies)
            {
                auto a = input;
                const auto r = run(a, s, alpha, static_cast<std::uint64_t>(trial));
                REQUIRE(loh::is_loh(a, r.layout));
                if (loh::is_deterministic(s))
                {
                    REQUIRE(r.layout == loh::layout_for(n, Rank{alpha}));
                    if (alpha == 1.0)
                    {
                        REQUIRE(a == sorted);
                    }
                }
                if (n >= 2)
                {
                    REQUIRE(r.comparisons > 0);
                }
                std::sort(a.begin(), a.end());
                REQUIRE(a == sorted);
            }
        }
    }
}

TEST_CASE("the comparator tally covers exactly the work of one call")
{
    auto a = loh::generate_values(1000, loh::Distribution::uniform_real, 1);
    InstrumentedComparator<> cmp;
    const auto first = loh::lohify(std::span<double>(a), LohifyStrategy{Strategy::ppcca, Rank{2.0}, {}}, cmp);
    const auto second = loh::lohify(std::span<double>(a), LohifyStrategy{Strategy::ppcca, Rank{2.0}, {}}, cmp);
    CHECK(cmp.tally() == first.comparisons + second.comparisons);
}

TEST_CASE("lohify works with a custom order")
{
    auto a = loh::generate_values(500, loh::Distribution::uniform_int, 4);
    InstrumentedComparator<std::greater<>> cmp;
    const auto r = loh::lohify(std::span<double>(a), LohifyStrategy{Strategy::sdrpih, Rank{1.5}, {}}, cmp);
    CHECK(loh::is_loh(a, r.layout, std::greater<>{}));
}
