#ifndef LOH_FDR_HPP
#define LOH_FDR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "loh/layer_layout.hpp"
#include "loh/lohify.hpp"

namespace loh
{
    enum class Label : std::uint8_t
    {
        tp,
        fp
    };

    struct ScoredHypothesis
    {
        double score = 0.0;
        Label label = Label::tp;
        std::size_t id = 0; // original position; unique within a dataset
    };

    /// Best-first total order: higher score first, ties by lower id.
    struct BetterFirst
    {
        bool operator()(const ScoredHypothesis& p_lhs, const ScoredHypothesis& p_rhs) const noexcept
        {
            if (p_lhs.score != p_rhs.score)
            {
                return p_lhs.score > p_rhs.score;
            }
            return p_lhs.id < p_rhs.id;
        }
    };

    class FdrQuery
    {
    public:
        explicit FdrQuery(double p_tau);

        double tau() const noexcept { return m_tau; }

    private:
        double m_tau;
    };

    struct FdrAnswer
    {
        /// Largest count k of best-first hypotheses with #FP / k <= tau; 0 if none.
        std::size_t k = 0;
        /// Score of the k-th best hypothesis; absent when k == 0.
        std::optional<double> threshold_score;
        /// #FP / k among the accepted; 0 when k == 0.
        double achieved_fdr = 0.0;
        /// Comparisons spent by the method, for benchmarking.
        std::uint64_t comparisons = 0;
    };

    /// The acceptance predicate shared by every method: fp <= tau * k.
    bool fdr_qualifies(std::size_t p_fp, std::size_t p_k, double p_tau) noexcept;

    /// Sort best-first, then scan.
    FdrAnswer fdr_threshold_by_sort(std::span<const ScoredHypothesis> p_data, FdrQuery p_query);

    /// LOHify best-first and resolve only the layers whose within-layer FDR
    /// bounds leave the answer open. Same (k, threshold_score) as the sort
    /// method; `p_engine` picks the LOHify strategy used at every level.
    FdrAnswer fdr_threshold_by_loh(std::span<const ScoredHypothesis> p_data, FdrQuery p_query, Rank p_rank,
                                   Strategy p_engine = Strategy::ppcca);

    /// Layers at or below this size are sorted and scanned directly.
    inline constexpr std::size_t fdr_sort_cutoff = 32;

    struct FdrBound
    {
        double optimistic;  // the layer's TPs come first
        double pessimistic; // the layer's FPs come first
    };

    /// FDR bounds after accepting the first j = 1..m elements of a layer with
    /// `p_layer_tp` TPs and `p_layer_fp` FPs, preceded by `p_prefix_count`
    /// accepted hypotheses of which `p_prefix_fp` are FPs. Entry j-1 is for j.
    std::vector<FdrBound> layer_fdr_bounds(std::size_t p_prefix_count, std::size_t p_prefix_fp, std::size_t p_layer_tp,
                                           std::size_t p_layer_fp);
}
// namespace loh

#endif // LOH_FDR_HPP
