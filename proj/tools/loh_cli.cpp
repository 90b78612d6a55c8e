// loh: command-line front end for layer-ordered heap construction.
//
//   loh gen         --n N --distribution D --seed S --out FILE
//   loh lohify      --in FILE --strategy K --alpha A --seed S --out FILE --layout FILE
//   loh verify      --in FILE --layout FILE
//   loh bench       --n N... --alpha A... --strategy K... --trials T --seed S --csv FILE
//   loh quick-stats --n N --trials T --seed S
//   loh fdr         --in FILE.tsv --tau T --method sort|loh --alpha A
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loh/bench.hpp"
#include "loh/datagen.hpp"
#include "loh/fdr.hpp"
#include "loh/io.hpp"
#include "loh/layer_layout.hpp"
#include "loh/lohify.hpp"

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_not_loh = 1;
    constexpr int exit_usage = 2;
    constexpr int exit_io = 3;

    class UsageError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    loh::Strategy strategy_from(const std::string& p_name)
    {
        if (auto s = loh::parse_strategy(p_name))
        {
            return *s;
        }
        throw UsageError("unknown strategy '" + p_name + "' (expected SORT, SLWGI, SDRPIH, PPCCA or QUICK)");
    }

    struct GenArgs
    {
        std::size_t n = 0;
        std::string distribution = "uniform-real";
        std::uint64_t seed = 0;
        double p_tp = 0.9;
        std::string out;
    };

    int run_gen(const GenArgs& p_args)
    {
        if (p_args.n == 0)
        {
            throw UsageError("--n must be at least 1");
        }
        if (p_args.distribution == "scored")
        {
            const auto data = loh::generate_hypotheses(p_args.n, p_args.p_tp, p_args.seed);
            loh::write_hypotheses(std::filesystem::path(p_args.out), data);
            return exit_ok;
        }
        const auto dist = loh::parse_distribution(p_args.distribution);
        if (!dist)
        {
            throw UsageError("unknown distribution '" + p_args.distribution + "'");
        }
        const auto values = loh::generate_values(p_args.n, *dist, p_args.seed);
        loh::write_values(std::filesystem::path(p_args.out), values);
        return exit_ok;
    }

    struct LohifyArgs
    {
        std::string in;
        std::string strategy = "PPCCA";
        double alpha = 2.0;
        std::uint64_t seed = 0;
        std::string out;
        std::string layout;
    };

    int run_lohify(const LohifyArgs& p_args)
    {
        const loh::LohifyStrategy strategy{strategy_from(p_args.strategy), loh::Rank{p_args.alpha}, p_args.seed};
        std::vector<double> values = loh::read_values(std::filesystem::path(p_args.in));
        if (values.empty())
        {
            throw UsageError("input has no values");
        }
        loh::InstrumentedComparator<> cmp;
        const loh::LohResult result = loh::lohify(std::span<double>(values), strategy, cmp);
        loh::write_values(std::filesystem::path(p_args.out), values);
        loh::write_layout(std::filesystem::path(p_args.layout), result.layout);
        std::cout << "n=" << values.size() << " layers=" << result.layout.layer_count()
                  << " comparisons=" << result.comparisons << " elapsed_ns=" << result.elapsed.count() << '\n';
        return exit_ok;
    }

    int run_verify(const std::string& p_values, const std::string& p_layout)
    {
        const auto values = loh::read_values(std::filesystem::path(p_values));
        const auto layout = loh::read_layout(std::filesystem::path(p_layout));
        if (layout.size() != values.size())
        {
            std::cout << "layout covers " << layout.size() << " elements but the file has " << values.size() << '\n';
            return exit_not_loh;
        }
        const auto bad = loh::first_loh_violation(std::span<const double>(values), layout);
        if (bad)
        {
            std::cout << "not a LOH: layer " << *bad << " has an element greater than some element of layer "
                      << *bad + 1 << '\n';
            return exit_not_loh;
        }
        std::cout << "ok: " << layout.layer_count() << " layers over " << values.size() << " elements\n";
        return exit_ok;
    }

    struct BenchArgs
    {
        std::vector<std::size_t> sizes;
        std::vector<double> alphas;
        std::vector<std::string> strategies;
        std::size_t trials = 10;
        std::uint64_t seed = 0;
        std::string distribution = "uniform-real";
        unsigned threads = 1;
        std::string csv = "-";
    };

    int run_bench(const BenchArgs& p_args)
    {
        loh::BenchConfig config;
        config.sizes = p_args.sizes;
        config.alphas = p_args.alphas;
        config.trials = p_args.trials;
        config.seed = p_args.seed;
        config.threads = p_args.threads;
        const auto dist = loh::parse_distribution(p_args.distribution);
        if (!dist)
        {
            throw UsageError("unknown distribution '" + p_args.distribution + "'");
        }
        config.distribution = *dist;
        if (p_args.strategies.empty())
        {
            config.strategies.assign(loh::all_strategies.begin(), loh::all_strategies.end());
        }
        for (const auto& s : p_args.strategies)
        {
            config.strategies.push_back(strategy_from(s));
        }
        const bool needs_alpha = std::any_of(config.strategies.begin(), config.strategies.end(),
                                             [](loh::Strategy s) { return s != loh::Strategy::quick; });
        if (needs_alpha && config.alphas.empty())
        {
            throw UsageError("--alpha is required for deterministic strategies");
        }

        const auto records = loh::run_bench(config);
        if (p_args.csv == "-")
        {
            loh::write_bench_csv(std::cout, records);
            return exit_ok;
        }
        std::ofstream out(p_args.csv);
        if (!out)
        {
            throw loh::IoError("cannot open for writing: " + p_args.csv);
        }
        loh::write_bench_csv(out, records);
        if (!out.flush())
        {
            throw loh::IoError("write failed: " + p_args.csv);
        }
        return exit_ok;
    }

    int run_quick_stats(std::size_t p_n, std::size_t p_trials, std::uint64_t p_seed)
    {
        const auto stats = loh::run_quick_stats(p_n, p_trials, p_seed);
        const double target = 2.0 * static_cast<double>(p_n) - 2.0;
        std::cout << "n=" << p_n << " trials=" << p_trials << '\n';
        std::cout << "comparisons: mean=" << stats.mean_comparisons << " se=" << stats.se_comparisons
                  << " expected(2n-2)=" << target
                  << " rel_dev=" << (stats.mean_comparisons - target) / target << '\n';
        std::cout << "last/second-to-last layer ratio: mean=" << stats.mean_ratio << " se=" << stats.se_ratio
                  << " trials_with_two_layers=" << stats.ratio_trials << '\n';
        if (p_n >= 2)
        {
            std::cout << "  closed form=" << loh::expected_quick_alpha(p_n)
                      << " exact for this construction=" << loh::quick_ratio_expectation(p_n) << '\n';
        }
        return exit_ok;
    }

    struct FdrArgs
    {
        std::string in;
        double tau = 0.05;
        std::string method = "loh";
        double alpha = 6.0;
        std::string strategy = "PPCCA";
    };

    int run_fdr(const FdrArgs& p_args)
    {
        const loh::FdrQuery query(p_args.tau);
        const loh::Rank rank(p_args.alpha);
        const loh::Strategy engine = strategy_from(p_args.strategy);
        if (p_args.method != "sort" && p_args.method != "loh")
        {
            throw UsageError("--method must be sort or loh");
        }
        const auto data = loh::read_hypotheses(std::filesystem::path(p_args.in));
        if (data.empty())
        {
            throw UsageError("input has no hypotheses");
        }
        const loh::FdrAnswer answer = p_args.method == "sort" ? loh::fdr_threshold_by_sort(data, query)
                                                              : loh::fdr_threshold_by_loh(data, query, rank, engine);
        std::cout << "k=" << answer.k << " threshold="
                  << (answer.threshold_score ? loh::format_double(*answer.threshold_score) : std::string("none"))
                  << " achieved_fdr=" << answer.achieved_fdr << " comparisons=" << answer.comparisons << '\n';
        return exit_ok;
    }
}

int main(int argc, char** argv)
{
    CLI::App app{"Layer-ordered heap construction, verification and benchmarks"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a reproducible value (or scored hypothesis) file");
    gen_cmd->add_option("--n", gen.n, "Number of values")->required();
    gen_cmd->add_option("--distribution", gen.distribution,
                        "uniform-real, uniform-int, sorted, reverse-sorted, few-distinct, or scored (TSV)");
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("--p-tp", gen.p_tp, "TP probability for --distribution scored");
    gen_cmd->add_option("--out", gen.out, "Output path")->required();

    LohifyArgs lohify;
    auto* lohify_cmd = app.add_subcommand("lohify", "Permute a value file into a layer-ordered heap");
    lohify_cmd->add_option("--in", lohify.in, "Input values")->required();
    lohify_cmd->add_option("--strategy", lohify.strategy, "SORT, SLWGI, SDRPIH, PPCCA or QUICK");
    lohify_cmd->add_option("--alpha", lohify.alpha, "Rank (ignored by QUICK)");
    lohify_cmd->add_option("--seed", lohify.seed, "Seed for QUICK");
    lohify_cmd->add_option("--out", lohify.out, "Permuted values")->required();
    lohify_cmd->add_option("--layout", lohify.layout, "Layer boundary list")->required();

    std::string verify_in;
    std::string verify_layout;
    auto* verify_cmd = app.add_subcommand("verify", "Check a value file against a layout");
    verify_cmd->add_option("--in", verify_in, "Values")->required();
    verify_cmd->add_option("--layout", verify_layout, "Layer boundary list")->required();

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Comparison-count benchmark grid as CSV");
    bench_cmd->add_option("--n", bench.sizes, "Array size (repeatable)")->required();
    bench_cmd->add_option("--alpha", bench.alphas, "Rank (repeatable)");
    bench_cmd->add_option("--strategy", bench.strategies, "Strategy (repeatable; default all)");
    bench_cmd->add_option("--trials", bench.trials, "Trials per cell");
    bench_cmd->add_option("--seed", bench.seed, "Random seed");
    bench_cmd->add_option("--distribution", bench.distribution, "Input distribution");
    bench_cmd->add_option("--threads", bench.threads, "Worker threads");
    bench_cmd->add_option("--csv", bench.csv, "Output CSV path, - for stdout");

    std::size_t quick_n = 0;
    std::size_t quick_trials = 1000;
    std::uint64_t quick_seed = 0;
    auto* quick_cmd = app.add_subcommand("quick-stats", "Quick-LOHify comparison and rank statistics");
    quick_cmd->add_option("--n", quick_n, "Array size")->required();
    quick_cmd->add_option("--trials", quick_trials, "Number of trials");
    quick_cmd->add_option("--seed", quick_seed, "Random seed");

    FdrArgs fdr;
    auto* fdr_cmd = app.add_subcommand("fdr", "Most permissive score threshold with FDR <= tau");
    fdr_cmd->add_option("--in", fdr.in, "Hypotheses TSV (score<TAB>label)")->required();
    fdr_cmd->add_option("--tau", fdr.tau, "Target FDR in (0, 1)")->required();
    fdr_cmd->add_option("--method", fdr.method, "sort or loh");
    fdr_cmd->add_option("--alpha", fdr.alpha, "Rank for the loh method");
    fdr_cmd->add_option("--strategy", fdr.strategy, "LOHify strategy for the loh method");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (*gen_cmd)
        {
            return run_gen(gen);
        }
        if (*lohify_cmd)
        {
            return run_lohify(lohify);
        }
        if (*verify_cmd)
        {
            return run_verify(verify_in, verify_layout);
        }
        if (*bench_cmd)
        {
            return run_bench(bench);
        }
        if (*quick_cmd)
        {
            return run_quick_stats(quick_n, quick_trials, quick_seed);
        }
        if (*fdr_cmd)
        {
            return run_fdr(fdr);
        }
    }
    catch (const loh::IoError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    }
    catch (const UsageError& e)
    {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::logic_error& e)
    {
        // domain_error / invalid_argument / out_of_range from bad parameters
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
