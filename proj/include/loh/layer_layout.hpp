#ifndef LOH_LAYER_LAYOUT_HPP
#define LOH_LAYER_LAYOUT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace loh
{
    /// Target ratio between the sizes of consecutive layers. alpha == 1
    /// degenerates to unit layers, i.e. a full sort.
    class Rank
    {
    public:
        explicit Rank(double p_alpha);

        double alpha() const noexcept { return m_alpha; }
        bool is_unit() const noexcept { return m_alpha == 1.0; }

    private:
        double m_alpha;
    };

    /// Half-open layer ranges over an array of n elements, stored as the
    /// strictly increasing boundary list b_0 = 0 < b_1 < ... < b_l = n.
    /// Layer i is [b_i, b_{i+1}).
    class LayerLayout
    {
    public:
        explicit LayerLayout(std::vector<std::size_t> p_boundaries);

        std::size_t size() const noexcept { return m_boundaries.back(); }
        std::size_t layer_count() const noexcept { return m_boundaries.size() - 1; }

        std::span<const std::size_t> boundaries() const noexcept { return m_boundaries; }

        /// Boundaries strictly inside (0, n): the positions a LOHify pass must fix.
        std::span<const std::size_t> interior() const noexcept
        {
            return std::span<const std::size_t>(m_boundaries).subspan(1, m_boundaries.size() - 2);
        }

        std::size_t layer_begin(std::size_t p_layer) const { return m_boundaries.at(p_layer); }
        std::size_t layer_end(std::size_t p_layer) const { return m_boundaries.at(p_layer + 1); }
        std::size_t layer_size(std::size_t p_layer) const { return layer_end(p_layer) - layer_begin(p_layer); }

        friend bool operator==(const LayerLayout&, const LayerLayout&) = default;

    private:
        std::vector<std::size_t> m_boundaries;
    };

    /// Canonical layout: boundaries 0, p_0, p_1, ... below n, closed by n,
    /// where p_i = ceil(sum_{j<=i} alpha^j).
    LayerLayout layout_for(std::size_t p_n, Rank p_rank);

    struct LayerCountBounds
    {
        double lower;
        double upper;
    };

    /// (log_a(n(a-1)+1), log_a(n(a-1)+1) + 1). Requires alpha > 1.
    LayerCountBounds layer_count_bounds(std::size_t p_n, Rank p_rank);

    /// ceil(alpha^i), snapped the same way as the pivots.
    std::uint64_t layer_size_bound(Rank p_rank, std::size_t p_layer);

    /// Number of layout boundaries strictly inside (begin, end).
    std::size_t pivot_count_in_range(const LayerLayout& p_layout, std::size_t p_begin, std::size_t p_end);

    /// log_a((end(a-1)+1) / ((begin-1)(a-1)+1)); +infinity when the
    /// denominator is not positive (begin == 0 with alpha >= 2).
    double pivot_count_bound(Rank p_rank, std::size_t p_begin, std::size_t p_end);

    /// Index i of the first adjacent layer pair (i, i+1) with max(L_i) > min(L_{i+1}),
    /// or nullopt if the array is layer-ordered.
    template <typename T, typename Compare = std::less<>>
    std::optional<std::size_t> first_loh_violation(std::span<const T> p_values, const LayerLayout& p_layout,
                                                   Compare p_less = {})
    {
        if (p_values.size() != p_layout.size())
        {
            throw std::invalid_argument("first_loh_violation: layout size does not match array length");
        }
        const std::size_t layers = p_layout.layer_count();
        const T* prev_max = nullptr;
        for (std::size_t i = 0; i < layers; ++i)
        {
            const std::size_t b = p_layout.layer_begin(i);
            const std::size_t e = p_layout.layer_end(i);
            const T* lo = &p_values[b];
            const T* hi = &p_values[b];
            for (std::size_t j = b + 1; j < e; ++j)
            {
                if (p_less(p_values[j], *lo))
                {
                    lo = &p_values[j];
                }
                if (p_less(*hi, p_values[j]))
                {
                    hi = &p_values[j];
                }
            }
            if (prev_max != nullptr && p_less(*lo, *prev_max))
            {
                return i - 1;
            }
            prev_max = hi;
        }
        return std::nullopt;
    }

    template <typename T, typename Compare = std::less<>>
    bool is_loh(std::span<const T> p_values, const LayerLayout& p_layout, Compare p_less = {})
    {
        return !first_loh_violation(p_values, p_layout, p_less).has_value();
    }

    template <typename T, typename Compare = std::less<>>
    bool is_loh(const std::vector<T>& p_values, const LayerLayout& p_layout, Compare p_less = {})
    {
        return is_loh(std::span<const T>(p_values), p_layout, p_less);
    }
}
// namespace loh

#endif // LOH_LAYER_LAYOUT_HPP
