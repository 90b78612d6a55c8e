#ifndef LOH_SELECTION_HPP
#define LOH_SELECTION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace loh
{
    /// Strict weak order that counts its own invocations. Algorithms take it
    /// by reference so the tally survives; pass std::ref(cmp) to std algorithms.
    template <typename Compare = std::less<>>
    class InstrumentedComparator
    {
    public:
        InstrumentedComparator() = default;

        explicit InstrumentedComparator(Compare p_order)
            : m_order(std::move(p_order))
        {
        }

        template <typename A, typename B>
        bool operator()(const A& p_lhs, const B& p_rhs)
        {
            ++m_tally;
            return m_order(p_lhs, p_rhs);
        }

        std::uint64_t tally() const noexcept { return m_tally; }
        const Compare& order() const noexcept { return m_order; }

    private:
        Compare m_order{};
        std::uint64_t m_tally = 0;
    };

    struct IndexRange
    {
        std::size_t begin;
        std::size_t end;

        std::size_t size() const noexcept { return end - begin; }
    };

    /// Zones after a three-way partition, relative to the partitioned range:
    /// [0, low_end) < v, [low_end, high_start) == v, [high_start, size) > v.
    struct PartitionResult
    {
        std::size_t low_end;
        std::size_t high_start;

        friend bool operator==(const PartitionResult&, const PartitionResult&) = default;
    };

    namespace detail
    {
        // Ranges shorter than this are insertion-sorted instead of recursed on.
        inline constexpr std::size_t small_range = 10;

        template <typename T>
        std::span<T> checked_subspan(std::span<T> p_values, IndexRange p_range, const char* p_who)
        {
            if (p_range.begin > p_range.end || p_range.end > p_values.size())
            {
                throw std::out_of_range(std::string(p_who) + ": range outside the array");
            }
            return p_values.subspan(p_range.begin, p_range.size());
        }

        /// Moves every element satisfying p_front before every element that
        /// does not. One predicate call per element. Returns the split point.
        template <typename T, typename Pred>
        std::size_t partition_front(std::span<T> p_values, Pred&& p_front)
        {
            using std::swap;
            std::size_t i = 0;
            std::size_t j = p_values.size();
            while (true)
            {
                while (i < j && p_front(p_values[i]))
                {
                    ++i;
                }
                if (i == j)
                {
                    return i;
                }
                // p_values[i] is known to stay behind; never test it again
                do
                {
                    --j;
                } while (j > i && !p_front(p_values[j]));
                if (j == i)
                {
                    return i;
                }
                swap(p_values[i], p_values[j]);
                ++i;
            }
        }

        template <typename T, typename Cmp>
        std::size_t partition_less(std::span<T> p_values, const T& p_pivot, Cmp& p_cmp)
        {
            return partition_front(p_values, [&](const T& x) { return p_cmp(x, p_pivot); });
        }

        template <typename T, typename Cmp>
        void insertion_sort(std::span<T> p_values, Cmp& p_cmp)
        {
            for (std::size_t i = 1; i < p_values.size(); ++i)
            {
                T x = std::move(p_values[i]);
                std::size_t j = i;
                while (j > 0 && p_cmp(x, p_values[j - 1]))
                {
                    p_values[j] = std::move(p_values[j - 1]);
                    --j;
                }
                p_values[j] = std::move(x);
            }
        }

        /// Median of five in six comparisons; swaps it to p_dest.
        template <typename T, typename Cmp>
        void median_of_five_to(T* p_g, T& p_dest, Cmp& p_cmp)
        {
            using std::swap;
            T* a = p_g;
            T* b = p_g + 1;
            T* c = p_g + 2;
            T* d = p_g + 3;
            T* e = p_g + 4;
            if (p_cmp(*b, *a))
            {
                swap(a, b);
            }
            if (p_cmp(*d, *c))
            {
                swap(c, d);
            }
            // a < b, c < d; whichever pair minimum is smaller has three larger
            // elements and cannot be the median.
            if (p_cmp(*c, *a))
            {
                swap(a, c);
                swap(b, d);
            }
            if (p_cmp(*e, *b))
            {
                swap(b, e);
            }
            // Median is the second smallest of {b < e, c < d}.
            T* m;
            if (p_cmp(*b, *c))
            {
                m = p_cmp(*e, *c) ? e : c;
            }
            else
            {
                m = p_cmp(*d, *b) ? d : b;
            }
            swap(*m, p_dest);
        }

        template <typename T, typename Cmp>
        void select_in_place(std::span<T> p_values, std::size_t p_k, Cmp& p_cmp);

        /// Pivot for one selection round: lower median of the group-of-five
        /// medians. Medians are gathered at the front of the range.
        template <typename T, typename Cmp>
        T median_of_medians(std::span<T> p_values, Cmp& p_cmp)
        {
            using std::swap;
            const std::size_t n = p_values.size();
            const std::size_t full = n / 5;
            for (std::size_t g = 0; g < full; ++g)
            {
                median_of_five_to(&p_values[5 * g], p_values[g], p_cmp);
            }
            std::size_t groups = full;
            if (const std::size_t rest = n - 5 * full; rest > 0)
            {
                auto tail = p_values.subspan(5 * full, rest);
                insertion_sort(tail, p_cmp);
                swap(tail[(rest - 1) / 2], p_values[groups]);
                ++groups;
            }
            const std::size_t mid = (groups - 1) / 2;
            select_in_place(p_values.subspan(0, groups), mid, p_cmp);
            return p_values[mid];
        }

        template <typename T, typename Cmp>
        void select_in_place(std::span<T> p_values, std::size_t p_k, Cmp& p_cmp)
        {
            using std::swap;
            std::size_t lo = 0;
            std::size_t hi = p_values.size();
            while (true)
            {
                const std::size_t n = hi - lo;
                if (n < small_range)
                {
                    insertion_sort(p_values.subspan(lo, n), p_cmp);
                    return;
                }
                if (p_k == lo || p_k == hi - 1)
                {
                    // Extreme ranks: one linear scan instead of a partition round.
                    const bool want_min = p_k == lo;
                    std::size_t best = lo;
                    for (std::size_t i = lo + 1; i < hi; ++i)
                    {
                        if (want_min ? p_cmp(p_values[i], p_values[best]) : p_cmp(p_values[best], p_values[i]))
                        {
                            best = i;
                        }
                    }
                    swap(p_values[best], p_values[p_k]);
                    return;
                }

                auto window = p_values.subspan(lo, n);
                const T pivot = median_of_medians(window, p_cmp);
                const std::size_t low_end = lo + partition_less(window, pivot, p_cmp);
                if (p_k < low_end)
                {
                    hi = low_end;
                    continue;
                }
                // The equal band is only split off when the target lies at or above it.
                auto upper = p_values.subspan(low_end, hi - low_end);
                const std::size_t high_start =
                    low_end + partition_front(upper, [&](const T& x) { return !p_cmp(pivot, x); });
                if (p_k < high_start)
                {
                    return;
                }
                lo = high_start;
            }
        }
    }
    // namespace detail

    /// Three-way partition of p_values[range] around p_pivot. At most
    /// 2 * |range| comparisons.
    template <typename T, typename Cmp>
    PartitionResult partition_three_way(std::span<T> p_values, IndexRange p_range, const T& p_pivot, Cmp& p_cmp)
    {
        auto window = detail::checked_subspan(p_values, p_range, "partition_three_way");
        const T pivot = p_pivot;
        const std::size_t low_end = detail::partition_less(window, pivot, p_cmp);
        const std::size_t high_start =
            low_end + detail::partition_front(window.subspan(low_end), [&](const T& x) { return !p_cmp(pivot, x); });
        return {low_end, high_start};
    }

    /// Worst-case linear order-statistic selection (median of medians, groups
    /// of five). On return the k-th smallest of the range sits at range
    /// offset k, with no greater element before it and no smaller one after.
    template <typename T, typename Cmp>
    T select_nth(std::span<T> p_values, IndexRange p_range, std::size_t p_k, Cmp& p_cmp)
    {
        auto window = detail::checked_subspan(p_values, p_range, "select_nth");
        if (p_k >= window.size())
        {
            throw std::out_of_range("select_nth: rank outside the range");
        }
        detail::select_in_place(window, p_k, p_cmp);
        return window[p_k];
    }
}
// namespace loh

#endif // LOH_SELECTION_HPP
