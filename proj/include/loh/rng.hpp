#ifndef LOH_RNG_HPP
#define LOH_RNG_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>

namespace loh
{
    /// Seeded stream with platform-independent output. The engine is
    /// std::mt19937_64, whose sequence the standard fixes; the distributions
    /// are implemented here because the std ones are not portable.
    class SeededRng
    {
    public:
        explicit SeededRng(std::uint64_t p_seed)
            : m_engine(p_seed)
        {
        }

        std::uint64_t next() { return m_engine(); }

        /// Uniform integer in [0, bound), by rejection. bound must be > 0.
        std::uint64_t uniform_index(std::uint64_t p_bound)
        {
            // 2^64 mod bound; draws below it would bias the low residues.
            const std::uint64_t reject_below = (0 - p_bound) % p_bound;
            while (true)
            {
                const std::uint64_t x = m_engine();
                if (x >= reject_below)
                {
                    return x % p_bound;
                }
            }
        }

        /// Uniform double in [0, 1) with 53 random bits.
        double uniform_real() { return static_cast<double>(m_engine() >> 11) * 0x1.0p-53; }

        /// Standard normal via Box-Muller (one value per call).
        double normal()
        {
            double u = 0.0;
            while (u == 0.0)
            {
                u = uniform_real();
            }
            const double v = uniform_real();
            return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
        }

    private:
        std::mt19937_64 m_engine;
    };

    /// SplitMix64 finaliser over a combined key; used to give each
    /// (seed, n, trial) cell its own independent stream.
    constexpr std::uint64_t derive_seed(std::uint64_t p_seed, std::uint64_t p_a, std::uint64_t p_b = 0)
    {
        std::uint64_t z = p_seed;
        for (std::uint64_t part : {p_a, p_b})
        {
            z += 0x9e3779b97f4a7c15ULL + part;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            z ^= z >> 31;
        }
        return z;
    }
}
// namespace loh

#endif // LOH_RNG_HPP
