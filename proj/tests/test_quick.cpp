#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "loh/bench.hpp"
#include "loh/datagen.hpp"
#include "loh/lohify.hpp"

using loh::InstrumentedComparator;

namespace
{
    loh::LohResult quick(std::vector<double>& p_values, std::uint64_t p_seed)
    {
        InstrumentedComparator<> cmp;
        return loh::quick_lohify(std::span<double>(p_values), p_seed, cmp);
    }

    // Exact mean of (last layer)/(second-to-last layer) by enumerating the
    // first two pivot ranks on distinct keys, conditioned on two or more layers.
    double enumerate_ratio(std::size_t p_n)
    {
        double total = 0.0;
        for (std::size_t r1 = 1; r1 < p_n; ++r1)
        {
            double inner = 0.0;
            for (std::size_t r2 = 0; r2 < r1; ++r2)
            {
                inner += static_cast<double>(p_n - r1) / static_cast<double>(r1 - r2);
            }
            total += inner / static_cast<double>(r1);
        }
        return total / static_cast<double>(p_n - 1);
    }
}

TEST_CASE("quick_lohify degenerate inputs")
{
    std::vector<double> one{3.0};
    const auto r1 = quick(one, 42);
    CHECK(r1.comparisons == 0);
    CHECK(r1.layout == loh::LayerLayout({0, 1}));

    std::vector<double> same(50, 2.5);
    for (std::uint64_t seed = 0; seed < 10; ++seed)
    {
        CHECK(quick(same, seed).layout == loh::LayerLayout({0, 50}));
    }

    std::vector<double> empty;
    CHECK_THROWS_AS(quick(empty, 1), std::invalid_argument);
}

TEST_CASE("quick_lohify is reproducible per seed")
{
    const auto input = loh::generate_values(3000, loh::Distribution::uniform_real, 8);
    auto a = input;
    auto b = input;
    const auto ra = quick(a, 123);
    const auto rb = quick(b, 123);
    CHECK(a == b);
    CHECK(ra.layout == rb.layout);
    CHECK(ra.comparisons == rb.comparisons);

    auto c = input;
    CHECK_FALSE(quick(c, 124).layout == ra.layout);
}

TEST_CASE("quick_lohify boundaries open at the first copy of the pivot")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed)
    {
        auto a = loh::generate_values(300, loh::Distribution::few_distinct, seed);
        const auto r = quick(a, seed);
        REQUIRE(loh::is_loh(a, r.layout));
        for (std::size_t i = 1; i < r.layout.layer_count(); ++i)
        {
            const std::size_t b = r.layout.layer_begin(i);
            // everything before a boundary is strictly smaller than the element opening it
            for (std::size_t j = 0; j < b; ++j)
            {
                REQUIRE(a[j] < a[b]);
            }
        }
    }
}

TEST_CASE("quick_lohify mean comparisons match the recurrence 2n - 2H_n")
{
    const std::size_t n = 64;
    const int trials = 20000;
    double sum = 0.0;
    for (int t = 0; t < trials; ++t)
    {
        auto a = loh::generate_values(n, loh::Distribution::uniform_real, static_cast<std::uint64_t>(t));
        sum += static_cast<double>(quick(a, static_cast<std::uint64_t>(t) + 1'000'000).comparisons);
    }
    const double expected = 2.0 * n - 2.0 * loh::harmonic_number(n);
    CHECK(sum / trials == Catch::Approx(expected).epsilon(0.02));
}

TEST_CASE("harmonic numbers and the closed form")
{
    CHECK(loh::harmonic_number(1) == 1.0);
    CHECK(loh::harmonic_number(3) == Catch::Approx(11.0 / 6.0).epsilon(1e-15));
    CHECK(loh::expected_quick_alpha(2) == Catch::Approx(2.0).epsilon(1e-15));
    // (2*9*11/6 + 2*3*11/6 - 27 + 21 - 12) / 12 = 26/12
    CHECK(loh::expected_quick_alpha(3) == Catch::Approx(13.0 / 6.0).epsilon(1e-15));
    CHECK_THROWS_AS(loh::expected_quick_alpha(1), std::domain_error);
    CHECK_THROWS_AS(loh::expected_quick_alpha(0), std::domain_error);

    double lo = INFINITY;
    double hi = 0.0;
    for (std::size_t n : {1u << 10, 1u << 14, 1u << 18})
    {
        const double v = loh::expected_quick_alpha(n) / std::log(static_cast<double>(n));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi / lo < 1.10);
}

TEST_CASE("exact ratio expectation of the construction")
{
    // n = 3: r1 = 1 gives 2/1; r1 = 2 gives (1/2)(1/2 + 1/1); mean over r1 = (2 + 0.75)/2
    CHECK(loh::quick_ratio_expectation(3) == Catch::Approx(1.375).epsilon(1e-15));
    for (std::size_t n = 2; n <= 40; ++n)
    {
        CHECK(loh::quick_ratio_expectation(n) == Catch::Approx(enumerate_ratio(n)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(loh::quick_ratio_expectation(1), std::domain_error);
}

TEST_CASE("monte carlo ratio agrees with the exact construction expectation")
{
    const auto stats = loh::run_quick_stats(16, 40000, 9);
    const double exact = loh::quick_ratio_expectation(16);
    CHECK(std::abs(stats.mean_ratio - exact) < 5.0 * stats.se_ratio + 1e-9);
    CHECK(stats.ratio_trials > 0);
    CHECK(stats.ratio_trials <= stats.trials);
}
