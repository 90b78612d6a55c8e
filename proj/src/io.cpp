#include "loh/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <system_error>

namespace loh
{
    namespace
    {
        std::string_view trim(std::string_view p_s)
        {
            const auto first = p_s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
            {
                return {};
            }
            const auto last = p_s.find_last_not_of(" \t\r");
            return p_s.substr(first, last - first + 1);
        }

        [[noreturn]] void malformed(std::size_t p_line, std::string_view p_what)
        {
            throw IoError("line " + std::to_string(p_line) + ": " + std::string(p_what));
        }

        template <typename N>
        N parse_number(std::string_view p_text, std::size_t p_line)
        {
            N value{};
            const auto [ptr, ec] = std::from_chars(p_text.data(), p_text.data() + p_text.size(), value);
            if (ec != std::errc() || ptr != p_text.data() + p_text.size())
            {
                malformed(p_line, "not a number: '" + std::string(p_text) + "'");
            }
            return value;
        }

        std::ifstream open_in(const std::filesystem::path& p_path)
        {
            std::ifstream in(p_path);
            if (!in)
            {
                throw IoError("cannot open for reading: " + p_path.string());
            }
            return in;
        }

        template <typename Writer>
        void write_file(const std::filesystem::path& p_path, Writer&& p_writer)
        {
            std::ofstream out(p_path);
            if (!out)
            {
                throw IoError("cannot open for writing: " + p_path.string());
            }
            p_writer(out);
            out.flush();
            if (!out)
            {
                throw IoError("write failed: " + p_path.string());
            }
        }
    }

    std::string format_double(double p_value)
    {
        char buf[64];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), p_value);
        return std::string(buf, ptr);
    }

    std::vector<double> read_values(std::istream& p_in)
    {
        std::vector<double> values;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(p_in, line))
        {
            ++line_no;
            const auto text = trim(line);
            if (text.empty())
            {
                continue;
            }
            values.push_back(parse_number<double>(text, line_no));
        }
        return values;
    }

    std::vector<double> read_values(const std::filesystem::path& p_path)
    {
        auto in = open_in(p_path);
        return read_values(in);
    }

    void write_values(std::ostream& p_out, std::span<const double> p_values)
    {
        for (double v : p_values)
        {
            p_out << format_double(v) << '\n';
        }
    }

    void write_values(const std::filesystem::path& p_path, std::span<const double> p_values)
    {
        write_file(p_path, [&](std::ostream& out) { write_values(out, p_values); });
    }

    LayerLayout read_layout(std::istream& p_in)
    {
        std::vector<std::size_t> boundaries;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(p_in, line))
        {
            ++line_no;
            const auto text = trim(line);
            if (text.empty())
            {
                continue;
            }
            boundaries.push_back(parse_number<std::size_t>(text, line_no));
        }
        try
        {
            return LayerLayout(std::move(boundaries));
        }
        catch (const std::invalid_argument& e)
        {
            throw IoError(e.what());
        }
    }

    LayerLayout read_layout(const std::filesystem::path& p_path)
    {
        auto in = open_in(p_path);
        return read_layout(in);
    }

    void write_layout(std::ostream& p_out, const LayerLayout& p_layout)
    {
        for (std::size_t b : p_layout.boundaries())
        {
            p_out << b << '\n';
        }
    }

    void write_layout(const std::filesystem::path& p_path, const LayerLayout& p_layout)
    {
        write_file(p_path, [&](std::ostream& out) { write_layout(out, p_layout); });
    }

    std::vector<ScoredHypothesis> read_hypotheses(std::istream& p_in)
    {
        std::vector<ScoredHypothesis> data;
        std::string line;
        std::size_t line_no = 0;
        bool header = true;
        while (std::getline(p_in, line))
        {
            ++line_no;
            const auto text = trim(line);
            if (text.empty())
            {
                continue;
            }
            if (header)
            {
                if (text != "score\tlabel")
                {
                    malformed(line_no, "expected header 'score<TAB>label'");
                }
                header = false;
                continue;
            }
            const auto tab = text.find('\t');
            if (tab == std::string_view::npos)
            {
                malformed(line_no, "expected two tab-separated fields");
            }
            const auto label = trim(text.substr(tab + 1));
            ScoredHypothesis h;
            h.score = parse_number<double>(trim(text.substr(0, tab)), line_no);
            if (label == "TP")
            {
                h.label = Label::tp;
            }
            else if (label == "FP")
            {
                h.label = Label::fp;
            }
            else
            {
                malformed(line_no, "label must be TP or FP");
            }
            h.id = data.size();
            data.push_back(h);
        }
        if (header)
        {
            throw IoError("hypothesis file has no header");
        }
        return data;
    }

    std::vector<ScoredHypothesis> read_hypotheses(const std::filesystem::path& p_path)
    {
        auto in = open_in(p_path);
        return read_hypotheses(in);
    }

    void write_hypotheses(std::ostream& p_out, std::span<const ScoredHypothesis> p_data)
    {
        p_out << "score\tlabel\n";
        for (const auto& h : p_data)
        {
            p_out << format_double(h.score) << '\t' << (h.label == Label::tp ? "TP" : "FP") << '\n';
        }
    }

    void write_hypotheses(const std::filesystem::path& p_path, std::span<const ScoredHypothesis> p_data)
    {
        write_file(p_path, [&](std::ostream& out) { write_hypotheses(out, p_data); });
    }
}
// namespace loh
