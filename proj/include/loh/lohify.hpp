#ifndef LOH_LOHIFY_HPP
#define LOH_LOHIFY_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "loh/layer_layout.hpp"
#include "loh/rng.hpp"
#include "loh/selection.hpp"

namespace loh
{
    enum class Strategy
    {
        sort,   // full comparison sort
        slwgi,  // select away the layer with the greatest index, last to first
        sdrpih, // select at the median remaining pivot, recurse on both halves
        ppcca,  // select at the pivot closest to the centre of the subarray
        quick   // randomised: partition on random elements towards the minimum
    };

    inline constexpr std::array<Strategy, 5> all_strategies = {Strategy::sort, Strategy::slwgi, Strategy::sdrpih,
                                                               Strategy::ppcca, Strategy::quick};

    /// Upper-case short name: SORT, SLWGI, SDRPIH, PPCCA, QUICK.
    std::string_view strategy_name(Strategy p_kind) noexcept;

    /// Case-insensitive inverse of strategy_name.
    std::optional<Strategy> parse_strategy(std::string_view p_name) noexcept;

    constexpr bool is_deterministic(Strategy p_kind) noexcept { return p_kind != Strategy::quick; }

    struct LohifyStrategy
    {
        Strategy kind = Strategy::ppcca;
        Rank rank{1.0};                     // ignored by QUICK
        std::optional<std::uint64_t> seed;  // QUICK only; absent means 0
    };

    struct LohResult
    {
        LayerLayout layout;
        std::uint64_t comparisons = 0;
        std::chrono::nanoseconds elapsed{0};
        /// Absolute index fixed by each selection (or, for QUICK, each
        /// recorded partition point), in execution order.
        std::vector<std::size_t> trace;
        /// Deepest recursion level that performed a selection (0 if none).
        std::size_t max_depth = 0;
    };

    /// Expected last-layer / second-to-last-layer size ratio of Quick-LOHify,
    /// (2n^2 H_n + 2n H_n - 3n^2 + 7n - 12) / (2n^2 - 2n). Requires n >= 2.
    double expected_quick_alpha(std::size_t p_n);

    /// H_n by direct summation.
    double harmonic_number(std::size_t p_n);

    namespace detail
    {
        class Stopwatch
        {
        public:
            std::chrono::nanoseconds elapsed() const
            {
                return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - m_start);
            }

        private:
            std::chrono::steady_clock::time_point m_start = std::chrono::steady_clock::now();
        };

        template <typename T>
        void require_nonempty(std::span<T> p_values)
        {
            if (p_values.empty())
            {
                throw std::invalid_argument("lohify: empty array");
            }
        }

        template <typename T, typename Compare>
        class PivotSplitter
        {
        public:
            PivotSplitter(std::span<T> p_values, std::span<const std::size_t> p_pivots,
                          InstrumentedComparator<Compare>& p_cmp, std::vector<std::size_t>& p_trace)
                : m_values(p_values)
                , m_pivots(p_pivots)
                , m_cmp(p_cmp)
                , m_trace(p_trace)
            {
            }

            std::size_t max_depth() const { return m_max_depth; }

            void select_at(std::size_t p_begin, std::size_t p_end, std::size_t p_pivot, std::size_t p_depth)
            {
                select_nth(m_values, IndexRange{p_begin, p_end}, p_pivot - p_begin, m_cmp);
                m_trace.push_back(p_pivot);
                m_max_depth = std::max(m_max_depth, p_depth);
            }

            /// Recursion on the positional median of the pivot sublist [first, last).
            void by_median_pivot(std::size_t p_begin, std::size_t p_end, std::size_t p_first, std::size_t p_last,
                                 std::size_t p_depth)
            {
                if (p_first >= p_last)
                {
                    return;
                }
                const std::size_t mid = p_first + (p_last - p_first - 1) / 2;
                const std::size_t pivot = m_pivots[mid];
                select_at(p_begin, p_end, pivot, p_depth);
                by_median_pivot(p_begin, pivot, p_first, mid, p_depth + 1);
                by_median_pivot(pivot + 1, p_end, mid + 1, p_last, p_depth + 1);
            }

            /// Recursion on the pivot nearest the centre of [begin, end); ties go left.
            void by_center_pivot(std::size_t p_begin, std::size_t p_end, std::size_t p_depth)
            {
                if (p_end - p_begin < 2)
                {
                    return;
                }
                const auto first = std::upper_bound(m_pivots.begin(), m_pivots.end(), p_begin);
                const auto last = std::lower_bound(first, m_pivots.end(), p_end);
                if (first == last)
                {
                    return;
                }
                // Distances are doubled so the centre (begin + end) / 2 stays integral.
                const std::size_t twice_center = p_begin + p_end;
                auto distance = [twice_center](std::size_t x) {
                    return 2 * x > twice_center ? 2 * x - twice_center : twice_center - 2 * x;
                };
                auto right = std::lower_bound(first, last, (twice_center + 1) / 2);
                std::size_t pivot;
                if (right == last)
                {
                    pivot = *(last - 1);
                }
                else if (right == first)
                {
                    pivot = *first;
                }
                else
                {
                    const std::size_t left = *(right - 1);
                    pivot = distance(left) <= distance(*right) ? left : *right;
                }
                select_at(p_begin, p_end, pivot, p_depth);
                by_center_pivot(p_begin, pivot, p_depth + 1);
                by_center_pivot(pivot + 1, p_end, p_depth + 1);
            }

        private:
            std::span<T> m_values;
            std::span<const std::size_t> m_pivots;
            InstrumentedComparator<Compare>& m_cmp;
            std::vector<std::size_t>& m_trace;
            std::size_t m_max_depth = 0;
        };
    }
    // namespace detail

    template <typename T, typename Compare>
    LohResult lohify_sort(std::span<T> p_values, Rank p_rank, InstrumentedComparator<Compare>& p_cmp)
    {
        detail::require_nonempty(p_values);
        detail::Stopwatch clock;
        const std::uint64_t before = p_cmp.tally();
        LayerLayout layout = layout_for(p_values.size(), p_rank);
        std::sort(p_values.begin(), p_values.end(), std::ref(p_cmp));
        return {std::move(layout), p_cmp.tally() - before, clock.elapsed(), {}, 0};
    }

    /// Selects the first index of the last layer within the whole array, then
    /// of the layer before within the remaining prefix, and so on down to L_1.
    template <typename T, typename Compare>
    LohResult lohify_slwgi(std::span<T> p_values, Rank p_rank, InstrumentedComparator<Compare>& p_cmp)
    {
        detail::require_nonempty(p_values);
        detail::Stopwatch clock;
        const std::uint64_t before = p_cmp.tally();
        LayerLayout layout = layout_for(p_values.size(), p_rank);
        const auto boundaries = layout.boundaries();
        std::vector<std::size_t> trace;
        trace.reserve(layout.layer_count());
        for (std::size_t j = layout.layer_count() - 1; j >= 1; --j)
        {
            select_nth(p_values, IndexRange{0, boundaries[j + 1]}, boundaries[j], p_cmp);
            trace.push_back(boundaries[j]);
        }
        const std::size_t depth = trace.empty() ? 0 : 1;
        return {std::move(layout), p_cmp.tally() - before, clock.elapsed(), std::move(trace), depth};
    }

    template <typename T, typename Compare>
    LohResult lohify_sdrpih(std::span<T> p_values, Rank p_rank, InstrumentedComparator<Compare>& p_cmp)
    {
        detail::require_nonempty(p_values);
        detail::Stopwatch clock;
        const std::uint64_t before = p_cmp.tally();
        LayerLayout layout = layout_for(p_values.size(), p_rank);
        std::vector<std::size_t> trace;
        detail::PivotSplitter<T, Compare> splitter(p_values, layout.interior(), p_cmp, trace);
        splitter.by_median_pivot(0, p_values.size(), 0, layout.interior().size(), 1);
        const std::size_t depth = splitter.max_depth();
        return {std::move(layout), p_cmp.tally() - before, clock.elapsed(), std::move(trace), depth};
    }

    template <typename T, typename Compare>
    LohResult lohify_ppcca(std::span<T> p_values, Rank p_rank, InstrumentedComparator<Compare>& p_cmp)
    {
        detail::require_nonempty(p_values);
        detail::Stopwatch clock;
        const std::uint64_t before = p_cmp.tally();
        LayerLayout layout = layout_for(p_values.size(), p_rank);
        std::vector<std::size_t> trace;
        detail::PivotSplitter<T, Compare> splitter(p_values, layout.interior(), p_cmp, trace);
        splitter.by_center_pivot(0, p_values.size(), 1);
        const std::size_t depth = splitter.max_depth();
        return {std::move(layout), p_cmp.tally() - before, clock.elapsed(), std::move(trace), depth};
    }

    /// Randomised construction: partition the active prefix around a uniformly
    /// chosen element, record where the elements not below it start, and
    /// continue on the part below it until at most one element remains.
    template <typename T, typename Compare>
    LohResult quick_lohify(std::span<T> p_values, std::uint64_t p_seed, InstrumentedComparator<Compare>& p_cmp)
    {
        using std::swap;
        detail::require_nonempty(p_values);
        detail::Stopwatch clock;
        const std::uint64_t before = p_cmp.tally();
        SeededRng rng(p_seed);
        std::vector<std::size_t> trace;
        std::size_t active = p_values.size();
        while (active > 1)
        {
            const std::size_t pick = static_cast<std::size_t>(rng.uniform_index(active));
            swap(p_values[pick], p_values[active - 1]);
            const std::size_t low_end =
                detail::partition_less(p_values.subspan(0, active - 1), p_values[active - 1], p_cmp);
            swap(p_values[low_end], p_values[active - 1]);
            trace.push_back(low_end);
            active = low_end;
        }
        // Recorded points strictly decrease; only 0 can collide with the outer boundary.
        std::vector<std::size_t> boundaries{0};
        for (auto it = trace.rbegin(); it != trace.rend(); ++it)
        {
            if (*it != 0)
            {
                boundaries.push_back(*it);
            }
        }
        boundaries.push_back(p_values.size());
        const std::size_t depth = trace.empty() ? 0 : 1;
        return {LayerLayout(std::move(boundaries)), p_cmp.tally() - before, clock.elapsed(), std::move(trace), depth};
    }

    template <typename T, typename Compare>
    LohResult lohify(std::span<T> p_values, const LohifyStrategy& p_strategy, InstrumentedComparator<Compare>& p_cmp)
    {
        switch (p_strategy.kind)
        {
        case Strategy::sort:
            return lohify_sort(p_values, p_strategy.rank, p_cmp);
        case Strategy::slwgi:
            return lohify_slwgi(p_values, p_strategy.rank, p_cmp);
        case Strategy::sdrpih:
            return lohify_sdrpih(p_values, p_strategy.rank, p_cmp);
        case Strategy::ppcca:
            return lohify_ppcca(p_values, p_strategy.rank, p_cmp);
        case Strategy::quick:
            return quick_lohify(p_values, p_strategy.seed.value_or(0), p_cmp);
        }
        throw std::invalid_argument("lohify: unknown strategy");
    }
}
// namespace loh

#endif // LOH_LOHIFY_HPP
