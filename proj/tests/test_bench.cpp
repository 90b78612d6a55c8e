#include <catch_amalgamated.hpp>

#include <sstream>
#include <string>

#include "loh/bench.hpp"

using loh::Strategy;

namespace
{
    std::string strip_elapsed(const std::string& p_csv)
    {
        std::istringstream in(p_csv);
        std::string out;
        std::string line;
        while (std::getline(in, line))
        {
            out += line.substr(0, line.rfind(',')) + '\n';
        }
        return out;
    }
}

TEST_CASE("bench grid collapses QUICK over alpha")
{
    loh::BenchConfig config;
    config.sizes = {1u << 12};
    config.alphas = {1.5, 2.0, 6.0};
    config.strategies.assign(loh::all_strategies.begin(), loh::all_strategies.end());
    config.trials = 10;
    config.threads = 4;
    const auto records = loh::run_bench(config);
    CHECK(records.size() == 4 * 3 * 10 + 10);
    for (const auto& r : records)
    {
        CHECK(r.comparisons > 0);
        CHECK(r.elapsed_ns >= 0);
        CHECK(r.alpha.has_value() == (r.strategy != Strategy::quick));
    }
}

TEST_CASE("bench CSV is reproducible apart from timings")
{
    loh::BenchConfig config;
    config.sizes = {100, 1000};
    config.alphas = {2.0};
    config.strategies = {Strategy::quick, Strategy::slwgi};
    config.trials = 3;
    config.seed = 5;
    std::ostringstream a;
    std::ostringstream b;
    loh::write_bench_csv(a, loh::run_bench(config));
    config.threads = 3;
    loh::write_bench_csv(b, loh::run_bench(config));
    CHECK(strip_elapsed(a.str()) == strip_elapsed(b.str()));
    CHECK(a.str().rfind("strategy,n,alpha,trial,comparisons,elapsed_ns\n", 0) == 0);
    CHECK(a.str().find("QUICK,100,,0,") != std::string::npos);
    CHECK(a.str().find("SLWGI,1000,2,2,") != std::string::npos);
}

TEST_CASE("bench rejects bad parameters")
{
    loh::BenchConfig config;
    config.sizes = {0};
    config.strategies = {Strategy::sort};
    config.alphas = {2.0};
    CHECK_THROWS_AS(loh::run_bench(config), std::domain_error);
    config.sizes = {10};
    config.alphas = {0.5};
    CHECK_THROWS_AS(loh::run_bench(config), std::domain_error);
}
