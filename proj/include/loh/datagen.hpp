#ifndef LOH_DATAGEN_HPP
#define LOH_DATAGEN_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "loh/fdr.hpp"

namespace loh
{
    enum class Distribution
    {
        uniform_real,   // [0, 1)
        uniform_int,    // integers in [0, 10^6)
        sorted,         // uniform_real, ascending
        reverse_sorted, // uniform_real, descending
        few_distinct    // integers in [0, 8)
    };

    inline constexpr std::array<Distribution, 5> all_distributions = {
        Distribution::uniform_real, Distribution::uniform_int, Distribution::sorted, Distribution::reverse_sorted,
        Distribution::few_distinct};

    std::string_view distribution_name(Distribution p_dist) noexcept;
    std::optional<Distribution> parse_distribution(std::string_view p_name) noexcept;

    /// Reproducible per (n, distribution, seed).
    std::vector<double> generate_values(std::size_t p_n, Distribution p_dist, std::uint64_t p_seed);

    /// Separation between the TP and FP score means (unit-variance normals).
    inline constexpr double tp_score_shift = 2.0;

    /// Labels are TP with probability p_tp; scores are N(0,1) for FPs and
    /// N(tp_score_shift, 1) for TPs; ids are 0..n-1.
    std::vector<ScoredHypothesis> generate_hypotheses(std::size_t p_n, double p_tp, std::uint64_t p_seed);
}
// namespace loh

#endif // LOH_DATAGEN_HPP
