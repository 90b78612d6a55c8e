#ifndef LOH_BENCH_HPP
#define LOH_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "loh/datagen.hpp"
#include "loh/lohify.hpp"

namespace loh
{
    /// One LOHify run of a benchmark grid.
    struct BenchRecord
    {
        Strategy strategy = Strategy::sort;
        std::size_t n = 0;
        std::optional<double> alpha; // absent for QUICK
        std::size_t trial = 0;
        std::uint64_t comparisons = 0;
        std::int64_t elapsed_ns = 0;
    };

    struct BenchConfig
    {
        std::vector<std::size_t> sizes;
        std::vector<double> alphas;
        std::vector<Strategy> strategies;
        std::size_t trials = 10;
        std::uint64_t seed = 0;
        Distribution distribution = Distribution::uniform_real;
        unsigned threads = 1;
    };

    inline constexpr std::string_view bench_csv_header = "strategy,n,alpha,trial,comparisons,elapsed_ns";

    /// Runs the grid. Every (n, trial) cell uses the same input array for all
    /// strategies and alphas; QUICK runs once per cell whatever the alphas.
    /// Rows come back sorted by (strategy, n, alpha, trial).
    std::vector<BenchRecord> run_bench(const BenchConfig& p_config);

    void write_bench_csv(std::ostream& p_out, std::span<const BenchRecord> p_records);

    struct QuickStats
    {
        std::size_t n = 0;
        std::size_t trials = 0;
        double mean_comparisons = 0.0;
        double se_comparisons = 0.0;
        /// Trials that produced at least two layers; only these have a ratio.
        std::size_t ratio_trials = 0;
        double mean_ratio = 0.0;
        double se_ratio = 0.0;
    };

    /// Quick-LOHify over `trials` independent uniform-real arrays of size n:
    /// comparison counts and the last / second-to-last layer size ratio.
    QuickStats run_quick_stats(std::size_t p_n, std::size_t p_trials, std::uint64_t p_seed);

    /// Exact mean of the last / second-to-last layer ratio produced by
    /// quick_lohify on n distinct keys, given at least two layers:
    /// (1 / (n-1)) * sum_{j=1}^{n-1} (n-j) H_j / j.
    double quick_ratio_expectation(std::size_t p_n);
}
// namespace loh

#endif // LOH_BENCH_HPP
