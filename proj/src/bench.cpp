#include "loh/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "loh/io.hpp"
#include "loh/rng.hpp"

namespace loh
{
    namespace
    {
        struct BenchTask
        {
            Strategy strategy;
            std::size_t n;
            std::optional<double> alpha;
            std::size_t trial;
        };

        // Distinct from the array stream of the same cell.
        constexpr std::uint64_t quick_seed_salt = 0x51c0ffee;

        template <typename Fn>
        void run_parallel(std::size_t p_count, unsigned p_threads, Fn&& p_fn)
        {
            const unsigned workers = std::max(1u, std::min<unsigned>(p_threads, static_cast<unsigned>(p_count)));
            if (workers <= 1)
            {
                for (std::size_t i = 0; i < p_count; ++i)
                {
                    p_fn(i);
                }
                return;
            }
            std::atomic<std::size_t> next{0};
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
            {
                pool.emplace_back([&] {
                    for (std::size_t i = next++; i < p_count; i = next++)
                    {
                        p_fn(i);
                    }
                });
            }
        }

        struct MeanAndError
        {
            double mean = 0.0;
            double standard_error = 0.0;
        };

        MeanAndError summarize(std::span<const double> p_samples)
        {
            MeanAndError out;
            if (p_samples.empty())
            {
                return out;
            }
            double sum = 0.0;
            for (double x : p_samples)
            {
                sum += x;
            }
            out.mean = sum / static_cast<double>(p_samples.size());
            if (p_samples.size() > 1)
            {
                double ss = 0.0;
                for (double x : p_samples)
                {
                    ss += (x - out.mean) * (x - out.mean);
                }
                const double variance = ss / static_cast<double>(p_samples.size() - 1);
                out.standard_error = std::sqrt(variance / static_cast<double>(p_samples.size()));
            }
            return out;
        }
    }

    std::vector<BenchRecord> run_bench(const BenchConfig& p_config)
    {
        std::vector<BenchTask> tasks;
        for (Strategy s : p_config.strategies)
        {
            for (std::size_t n : p_config.sizes)
            {
                if (n == 0)
                {
                    throw std::domain_error("run_bench: sizes must be positive");
                }
                std::vector<std::optional<double>> alphas;
                if (s == Strategy::quick)
                {
                    alphas.emplace_back(std::nullopt);
                }
                else
                {
                    for (double a : p_config.alphas)
                    {
                        static_cast<void>(Rank{a}); // validates
                        alphas.emplace_back(a);
                    }
                }
                for (const auto& a : alphas)
                {
                    for (std::size_t t = 0; t < p_config.trials; ++t)
                    {
                        tasks.push_back({s, n, a, t});
                    }
                }
            }
        }

        std::vector<BenchRecord> records(tasks.size());
        run_parallel(tasks.size(), p_config.threads, [&](std::size_t i) {
            const BenchTask& task = tasks[i];
            const std::uint64_t cell_seed = derive_seed(p_config.seed, task.n, task.trial);
            std::vector<double> values = generate_values(task.n, p_config.distribution, cell_seed);
            LohifyStrategy strategy{task.strategy, Rank{task.alpha.value_or(1.0)}, cell_seed ^ quick_seed_salt};
            InstrumentedComparator<> cmp;
            const LohResult result = lohify(std::span<double>(values), strategy, cmp);
            records[i] = BenchRecord{task.strategy, task.n,        task.alpha,
                                     task.trial,    result.comparisons, static_cast<std::int64_t>(result.elapsed.count())};
        });

        std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
            // nullopt sorts before any alpha.
            return std::tuple(a.strategy, a.n, a.alpha, a.trial) < std::tuple(b.strategy, b.n, b.alpha, b.trial);
        });
        return records;
    }

    void write_bench_csv(std::ostream& p_out, std::span<const BenchRecord> p_records)
    {
        p_out << bench_csv_header << '\n';
        for (const auto& r : p_records)
        {
            p_out << strategy_name(r.strategy) << ',' << r.n << ',' << (r.alpha ? format_double(*r.alpha) : "") << ','
                  << r.trial << ',' << r.comparisons << ',' << r.elapsed_ns << '\n';
        }
    }

    QuickStats run_quick_stats(std::size_t p_n, std::size_t p_trials, std::uint64_t p_seed)
    {
        if (p_n == 0 || p_trials == 0)
        {
            throw std::domain_error("run_quick_stats: n and trials must be positive");
        }
        std::vector<double> comparisons;
        std::vector<double> ratios;
        comparisons.reserve(p_trials);
        for (std::size_t t = 0; t < p_trials; ++t)
        {
            const std::uint64_t cell_seed = derive_seed(p_seed, p_n, t);
            std::vector<double> values = generate_values(p_n, Distribution::uniform_real, cell_seed);
            InstrumentedComparator<> cmp;
            const LohResult result = quick_lohify(std::span<double>(values), cell_seed ^ quick_seed_salt, cmp);
            comparisons.push_back(static_cast<double>(result.comparisons));
            const LayerLayout& layout = result.layout;
            if (const std::size_t layers = layout.layer_count(); layers >= 2)
            {
                ratios.push_back(static_cast<double>(layout.layer_size(layers - 1)) /
                                 static_cast<double>(layout.layer_size(layers - 2)));
            }
        }
        const auto c = summarize(comparisons);
        const auto r = summarize(ratios);
        return QuickStats{p_n, p_trials, c.mean, c.standard_error, ratios.size(), r.mean, r.standard_error};
    }

    double quick_ratio_expectation(std::size_t p_n)
    {
        if (p_n < 2)
        {
            throw std::domain_error("quick_ratio_expectation: n must be at least 2");
        }
        const double n = static_cast<double>(p_n);
        double harmonic = 0.0;
        double sum = 0.0;
        for (std::size_t j = 1; j < p_n; ++j)
        {
            const double jd = static_cast<double>(j);
            harmonic += 1.0 / jd;
            sum += (n - jd) * harmonic / jd;
        }
        return sum / (n - 1.0);
    }
}
// namespace loh
