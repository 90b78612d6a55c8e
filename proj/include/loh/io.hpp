#ifndef LOH_IO_HPP
#define LOH_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "loh/fdr.hpp"
#include "loh/layer_layout.hpp"

namespace loh
{
    /// Unreadable/unwritable file or malformed content.
    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Shortest decimal form that parses back to the same double.
    std::string format_double(double p_value);

    // Values: one decimal number per line.
    std::vector<double> read_values(std::istream& p_in);
    std::vector<double> read_values(const std::filesystem::path& p_path);
    void write_values(std::ostream& p_out, std::span<const double> p_values);
    void write_values(const std::filesystem::path& p_path, std::span<const double> p_values);

    // Layouts: one boundary index per line, 0 first and n last.
    LayerLayout read_layout(std::istream& p_in);
    LayerLayout read_layout(const std::filesystem::path& p_path);
    void write_layout(std::ostream& p_out, const LayerLayout& p_layout);
    void write_layout(const std::filesystem::path& p_path, const LayerLayout& p_layout);

    // Hypotheses: TSV with header "score<TAB>label", label TP or FP. Ids are row numbers from 0.
    std::vector<ScoredHypothesis> read_hypotheses(std::istream& p_in);
    std::vector<ScoredHypothesis> read_hypotheses(const std::filesystem::path& p_path);
    void write_hypotheses(std::ostream& p_out, std::span<const ScoredHypothesis> p_data);
    void write_hypotheses(const std::filesystem::path& p_path, std::span<const ScoredHypothesis> p_data);
}
// namespace loh

#endif // LOH_IO_HPP
