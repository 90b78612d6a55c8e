#include "loh/layer_layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace loh
{
    namespace
    {
        // Sums of powers of rational alpha often land on integers; ceil of a
        // value perturbed to 7.0000000001 would move a boundary.
        long double snap_to_integer(long double p_x)
        {
            const long double r = std::round(p_x);
            if (std::fabs(p_x - r) < 1e-9L * std::max(1.0L, std::fabs(p_x)))
            {
                return r;
            }
            return p_x;
        }

        std::uint64_t snapped_ceil(long double p_x)
        {
            return static_cast<std::uint64_t>(std::ceil(snap_to_integer(p_x)));
        }

        double log_base(double p_alpha, double p_x)
        {
            return std::log(p_x) / std::log1p(p_alpha - 1.0);
        }
    }

    Rank::Rank(double p_alpha)
        : m_alpha(p_alpha)
    {
        if (!std::isfinite(p_alpha) || !(p_alpha >= 1.0))
        {
            throw std::domain_error("rank alpha must be finite and >= 1, got " + std::to_string(p_alpha));
        }
    }

    LayerLayout::LayerLayout(std::vector<std::size_t> p_boundaries)
        : m_boundaries(std::move(p_boundaries))
    {
        if (m_boundaries.size() < 2 || m_boundaries.front() != 0)
        {
            throw std::invalid_argument("layer layout needs boundaries 0 .. n with at least one layer");
        }
        for (std::size_t i = 1; i < m_boundaries.size(); ++i)
        {
            if (m_boundaries[i] <= m_boundaries[i - 1])
            {
                throw std::invalid_argument("layer layout boundaries must be strictly increasing");
            }
        }
    }

    LayerLayout layout_for(std::size_t p_n, Rank p_rank)
    {
        if (p_n == 0)
        {
            throw std::domain_error("layout_for: n must be positive");
        }
        std::vector<std::size_t> boundaries;
        boundaries.push_back(0);
        if (p_rank.is_unit())
        {
            boundaries.resize(p_n + 1);
            for (std::size_t i = 0; i <= p_n; ++i)
            {
                boundaries[i] = i;
            }
            return LayerLayout(std::move(boundaries));
        }

        const long double alpha = p_rank.alpha();
        long double sum = 0.0L;
        long double term = 1.0L;
        while (true)
        {
            sum += term;
            term *= alpha;
            const std::uint64_t pivot = snapped_ceil(sum);
            if (pivot >= p_n)
            {
                break;
            }
            // Each term is >= 1, so consecutive pivots differ by at least one.
            boundaries.push_back(static_cast<std::size_t>(pivot));
        }
        boundaries.push_back(p_n);
        return LayerLayout(std::move(boundaries));
    }

    LayerCountBounds layer_count_bounds(std::size_t p_n, Rank p_rank)
    {
        if (p_rank.is_unit())
        {
            throw std::domain_error("layer_count_bounds: undefined for alpha == 1 (the layer count is n)");
        }
        const double a = p_rank.alpha();
        const double lower = log_base(a, static_cast<double>(p_n) * (a - 1.0) + 1.0);
        return {lower, lower + 1.0};
    }

    std::uint64_t layer_size_bound(Rank p_rank, std::size_t p_layer)
    {
        if (p_rank.is_unit())
        {
            return 1;
        }
        return snapped_ceil(std::pow(static_cast<long double>(p_rank.alpha()), static_cast<long double>(p_layer)));
    }

    std::size_t pivot_count_in_range(const LayerLayout& p_layout, std::size_t p_begin, std::size_t p_end)
    {
        if (p_begin > p_end || p_end > p_layout.size())
        {
            throw std::out_of_range("pivot_count_in_range: need 0 <= begin <= end <= n");
        }
        const auto b = p_layout.boundaries();
        const auto first = std::upper_bound(b.begin(), b.end(), p_begin);
        const auto last = std::lower_bound(b.begin(), b.end(), p_end);
        return first < last ? static_cast<std::size_t>(last - first) : 0;
    }

    double pivot_count_bound(Rank p_rank, std::size_t p_begin, std::size_t p_end)
    {
        if (p_rank.is_unit())
        {
            throw std::domain_error("pivot_count_bound: undefined for alpha == 1");
        }
        const double a = p_rank.alpha();
        const double num = static_cast<double>(p_end) * (a - 1.0) + 1.0;
        const double den = (static_cast<double>(p_begin) - 1.0) * (a - 1.0) + 1.0;
        if (den <= 0.0)
        {
            return std::numeric_limits<double>::infinity();
        }
        return log_base(a, num / den);
    }
}
// namespace loh
