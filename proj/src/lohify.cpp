#include "loh/lohify.hpp"

#include <cctype>
#include <string>

namespace loh
{
    std::string_view strategy_name(Strategy p_kind) noexcept
    {
        switch (p_kind)
        {
        case Strategy::sort:
            return "SORT";
        case Strategy::slwgi:
            return "SLWGI";
        case Strategy::sdrpih:
            return "SDRPIH";
        case Strategy::ppcca:
            return "PPCCA";
        case Strategy::quick:
            return "QUICK";
        }
        return "?";
    }

    std::optional<Strategy> parse_strategy(std::string_view p_name) noexcept
    {
        std::string upper(p_name);
        for (char& c : upper)
        {
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        }
        for (Strategy s : all_strategies)
        {
            if (strategy_name(s) == upper)
            {
                return s;
            }
        }
        return std::nullopt;
    }

    double harmonic_number(std::size_t p_n)
    {
        double h = 0.0;
        // Smallest terms first.
        for (std::size_t k = p_n; k >= 1; --k)
        {
            h += 1.0 / static_cast<double>(k);
        }
        return h;
    }

    double expected_quick_alpha(std::size_t p_n)
    {
        if (p_n < 2)
        {
            throw std::domain_error("expected_quick_alpha: n must be at least 2");
        }
        const double n = static_cast<double>(p_n);
        const double h = harmonic_number(p_n);
        return (2.0 * n * n * h + 2.0 * n * h - 3.0 * n * n + 7.0 * n - 12.0) / (2.0 * n * n - 2.0 * n);
    }
}
// namespace loh
