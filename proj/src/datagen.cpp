#include "loh/datagen.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "loh/rng.hpp"

namespace loh
{
    std::string_view distribution_name(Distribution p_dist) noexcept
    {
        switch (p_dist)
        {
        case Distribution::uniform_real:
            return "uniform-real";
        case Distribution::uniform_int:
            return "uniform-int";
        case Distribution::sorted:
            return "sorted";
        case Distribution::reverse_sorted:
            return "reverse-sorted";
        case Distribution::few_distinct:
            return "few-distinct";
        }
        return "?";
    }

    std::optional<Distribution> parse_distribution(std::string_view p_name) noexcept
    {
        for (Distribution d : all_distributions)
        {
            if (distribution_name(d) == p_name)
            {
                return d;
            }
        }
        return std::nullopt;
    }

    std::vector<double> generate_values(std::size_t p_n, Distribution p_dist, std::uint64_t p_seed)
    {
        SeededRng rng(p_seed);
        std::vector<double> values(p_n);
        switch (p_dist)
        {
        case Distribution::uniform_real:
        case Distribution::sorted:
        case Distribution::reverse_sorted:
            for (double& v : values)
            {
                v = rng.uniform_real();
            }
            break;
        case Distribution::uniform_int:
            for (double& v : values)
            {
                v = static_cast<double>(rng.uniform_index(1'000'000));
            }
            break;
        case Distribution::few_distinct:
            for (double& v : values)
            {
                v = static_cast<double>(rng.uniform_index(8));
            }
            break;
        }
        if (p_dist == Distribution::sorted)
        {
            std::sort(values.begin(), values.end());
        }
        else if (p_dist == Distribution::reverse_sorted)
        {
            std::sort(values.begin(), values.end(), std::greater<>());
        }
        return values;
    }

    std::vector<ScoredHypothesis> generate_hypotheses(std::size_t p_n, double p_tp, std::uint64_t p_seed)
    {
        if (!(p_tp >= 0.0 && p_tp <= 1.0))
        {
            throw std::domain_error("generate_hypotheses: TP probability must lie in [0, 1]");
        }
        SeededRng rng(p_seed);
        std::vector<ScoredHypothesis> data(p_n);
        for (std::size_t i = 0; i < p_n; ++i)
        {
            const bool tp = rng.uniform_real() < p_tp;
            data[i].label = tp ? Label::tp : Label::fp;
            data[i].score = rng.normal() + (tp ? tp_score_shift : 0.0);
            data[i].id = i;
        }
        return data;
    }
}
// namespace loh
