#include "loh/fdr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace loh
{
    namespace
    {
        using Comparator = InstrumentedComparator<BetterFirst>;

        void validate(std::span<const ScoredHypothesis> p_data)
        {
            if (p_data.empty())
            {
                throw std::invalid_argument("fdr threshold: empty data");
            }
            for (const auto& h : p_data)
            {
                if (!std::isfinite(h.score))
                {
                    throw std::invalid_argument("fdr threshold: non-finite score at id " + std::to_string(h.id));
                }
            }
        }

        std::size_t count_fp(std::span<const ScoredHypothesis> p_items)
        {
            return static_cast<std::size_t>(std::count_if(p_items.begin(), p_items.end(),
                                                           [](const auto& h) { return h.label == Label::fp; }));
        }

        FdrAnswer make_answer(std::size_t p_k, std::size_t p_fp, std::optional<double> p_score,
                              std::uint64_t p_comparisons)
        {
            FdrAnswer answer;
            answer.k = p_k;
            answer.comparisons = p_comparisons;
            if (p_k > 0)
            {
                answer.threshold_score = p_score;
                answer.achieved_fdr = static_cast<double>(p_fp) / static_cast<double>(p_k);
            }
            return answer;
        }

        struct Hit
        {
            std::size_t k;
            std::size_t fp;
            double score;
        };

        // Searches the best-first positions (prefix_count, prefix_count + |items|]
        // for the largest qualifying k, given exact counts for everything before.
        class LayerSolver
        {
        public:
            LayerSolver(double p_tau, Rank p_rank, Strategy p_engine, Comparator& p_cmp)
                : m_tau(p_tau)
                , m_rank(p_rank)
                , m_engine(p_engine)
                , m_cmp(p_cmp)
            {
            }

            std::optional<Hit> solve(std::span<ScoredHypothesis> p_items, std::size_t p_prefix_count,
                                     std::size_t p_prefix_fp)
            {
                if (p_items.size() <= fdr_sort_cutoff)
                {
                    return scan_sorted(p_items, p_prefix_count, p_prefix_fp);
                }

                const LohResult built = lohify(p_items, LohifyStrategy{m_engine, m_rank, std::nullopt}, m_cmp);
                const LayerLayout& layout = built.layout;
                const std::size_t layers = layout.layer_count();

                std::vector<std::size_t> fp_before(layers + 1, 0);
                for (std::size_t i = 0; i < layers; ++i)
                {
                    fp_before[i + 1] =
                        fp_before[i] + count_fp(p_items.subspan(layout.layer_begin(i), layout.layer_size(i)));
                }

                for (std::size_t i = layers; i-- > 0;)
                {
                    const std::size_t size = layout.layer_size(i);
                    const std::size_t fp = fp_before[i + 1] - fp_before[i];
                    const std::size_t tp = size - fp;
                    const std::size_t base_count = p_prefix_count + layout.layer_begin(i);
                    const std::size_t base_fp = p_prefix_fp + fp_before[i];

                    const std::size_t optimistic = last_qualifying(size, base_count, base_fp,
                                                                   [tp](std::size_t j) { return j > tp ? j - tp : 0; });
                    if (optimistic == 0)
                    {
                        continue;
                    }
                    const std::size_t pessimistic =
                        last_qualifying(size, base_count, base_fp, [fp](std::size_t j) { return std::min(j, fp); });

                    auto layer = p_items.subspan(layout.layer_begin(i), size);
                    if (optimistic == pessimistic)
                    {
                        return resolve_at(layer, optimistic, base_count, base_fp);
                    }
                    if (auto hit = solve(layer, base_count, base_fp))
                    {
                        return hit;
                    }
                }
                return std::nullopt;
            }

        private:
            // Largest j in [1, size] whose FP count fp_at(j) qualifies, or 0.
            template <typename FpAt>
            std::size_t last_qualifying(std::size_t p_size, std::size_t p_base_count, std::size_t p_base_fp,
                                        FpAt p_fp_at) const
            {
                for (std::size_t j = p_size; j >= 1; --j)
                {
                    if (fdr_qualifies(p_base_fp + p_fp_at(j), p_base_count + j, m_tau))
                    {
                        return j;
                    }
                }
                return 0;
            }

            std::optional<Hit> scan_sorted(std::span<ScoredHypothesis> p_items, std::size_t p_prefix_count,
                                           std::size_t p_prefix_fp)
            {
                std::sort(p_items.begin(), p_items.end(), std::ref(m_cmp));
                std::optional<Hit> best;
                std::size_t fp = p_prefix_fp;
                for (std::size_t j = 0; j < p_items.size(); ++j)
                {
                    fp += p_items[j].label == Label::fp ? 1 : 0;
                    const std::size_t k = p_prefix_count + j + 1;
                    if (fdr_qualifies(fp, k, m_tau))
                    {
                        best = Hit{k, fp, p_items[j].score};
                    }
                }
                return best;
            }

            // The answer is exactly the j-th best of the layer: bring it into place.
            Hit resolve_at(std::span<ScoredHypothesis> p_layer, std::size_t p_j, std::size_t p_base_count,
                           std::size_t p_base_fp)
            {
                if (p_j == p_layer.size())
                {
                    std::size_t worst = 0;
                    for (std::size_t i = 1; i < p_layer.size(); ++i)
                    {
                        if (m_cmp(p_layer[worst], p_layer[i]))
                        {
                            worst = i;
                        }
                    }
                    return Hit{p_base_count + p_j, p_base_fp + count_fp(p_layer), p_layer[worst].score};
                }
                const ScoredHypothesis nth = select_nth(p_layer, IndexRange{0, p_layer.size()}, p_j - 1, m_cmp);
                return Hit{p_base_count + p_j, p_base_fp + count_fp(p_layer.first(p_j)), nth.score};
            }

            double m_tau;
            Rank m_rank;
            Strategy m_engine;
            Comparator& m_cmp;
        };
    }

    FdrQuery::FdrQuery(double p_tau)
        : m_tau(p_tau)
    {
        if (!(p_tau > 0.0 && p_tau < 1.0))
        {
            throw std::domain_error("fdr tau must lie in (0, 1), got " + std::to_string(p_tau));
        }
    }

    bool fdr_qualifies(std::size_t p_fp, std::size_t p_k, double p_tau) noexcept
    {
        return static_cast<double>(p_fp) <= p_tau * static_cast<double>(p_k);
    }

    FdrAnswer fdr_threshold_by_sort(std::span<const ScoredHypothesis> p_data, FdrQuery p_query)
    {
        validate(p_data);
        std::vector<ScoredHypothesis> items(p_data.begin(), p_data.end());
        Comparator cmp;
        std::sort(items.begin(), items.end(), std::ref(cmp));

        std::size_t best_k = 0;
        std::size_t best_fp = 0;
        std::size_t fp = 0;
        for (std::size_t k = 1; k <= items.size(); ++k)
        {
            fp += items[k - 1].label == Label::fp ? 1 : 0;
            if (fdr_qualifies(fp, k, p_query.tau()))
            {
                best_k = k;
                best_fp = fp;
            }
        }
        std::optional<double> score;
        if (best_k > 0)
        {
            score = items[best_k - 1].score;
        }
        return make_answer(best_k, best_fp, score, cmp.tally());
    }

    FdrAnswer fdr_threshold_by_loh(std::span<const ScoredHypothesis> p_data, FdrQuery p_query, Rank p_rank,
                                   Strategy p_engine)
    {
        validate(p_data);
        std::vector<ScoredHypothesis> items(p_data.begin(), p_data.end());
        Comparator cmp;
        LayerSolver solver(p_query.tau(), p_rank, p_engine, cmp);
        const std::optional<Hit> hit = solver.solve(items, 0, 0);
        if (!hit)
        {
            return make_answer(0, 0, std::nullopt, cmp.tally());
        }
        return make_answer(hit->k, hit->fp, hit->score, cmp.tally());
    }

    std::vector<FdrBound> layer_fdr_bounds(std::size_t p_prefix_count, std::size_t p_prefix_fp, std::size_t p_layer_tp,
                                           std::size_t p_layer_fp)
    {
        const std::size_t size = p_layer_tp + p_layer_fp;
        std::vector<FdrBound> bounds;
        bounds.reserve(size);
        for (std::size_t j = 1; j <= size; ++j)
        {
            const double k = static_cast<double>(p_prefix_count + j);
            const std::size_t low = p_prefix_fp + (j > p_layer_tp ? j - p_layer_tp : 0);
            const std::size_t high = p_prefix_fp + std::min(j, p_layer_fp);
            bounds.push_back({static_cast<double>(low) / k, static_cast<double>(high) / k});
        }
        return bounds;
    }
}
// namespace loh
