#include <acp/error.hpp>
#include <acp/graph6.hpp>

#include <fstream>
#include <limits>

using std::size_t;
using std::string;
using std::string_view;
using std::to_string;

namespace acp
{
    namespace
    {
        constexpr string_view header = ">>graph6<<";
        constexpr std::uint64_t max_order = (std::uint64_t{1} << 36) - 1;

        auto sextet(string_view line, size_t pos) -> unsigned
        {
            auto c = static_cast<unsigned char>(line[pos]);
            if (c < 63 || c > 126)
                throw FormatError("byte " + to_string(static_cast<unsigned>(c)) + " at offset " + to_string(pos) + " is outside 63..126");
            return c - 63u;
        }

        auto decode_order(string_view line, size_t & pos) -> std::uint64_t
        {
            auto need = [&](size_t count) {
                if (line.size() < pos + count)
                    throw FormatError("truncated size header");
            };
            need(1);
            if (line[pos] != 126)
                return sextet(line, pos++);
            ++pos;
            need(1);
            size_t digits = 3;
            if (line[pos] == 126) {
                ++pos;
                digits = 6;
            }
            need(digits);
            std::uint64_t n = 0;
            for (size_t i = 0; i < digits; ++i)
                n = (n << 6) | sextet(line, pos++);
            return n;
        }

        auto encode_order(std::uint64_t n, string & out) -> void
        {
            auto put = [&](std::uint64_t value, int digits) {
                for (int i = digits - 1; i >= 0; --i)
                    out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 63)));
            };
            if (n <= 62)
                put(n, 1);
            else if (n <= 258047) {
                out.push_back(126);
                put(n, 3);
            }
            else {
                out.push_back(126);
                out.push_back(126);
                put(n, 6);
            }
        }
    }

    auto parse_graph6(string_view line, Graph6Options options, bool * padding_warning) -> Graph
    {
        while (! line.empty() && (line.back() == '\n' || line.back() == '\r'))
            line.remove_suffix(1);
        if (line.starts_with(header))
            line.remove_prefix(header.size());
        if (line.starts_with(">>sparse6<<") || line.starts_with(":"))
            throw FormatError("sparse6 input is not supported (graph6 only)");
        if (line.starts_with(">>digraph6<<") || line.starts_with("&"))
            throw FormatError("digraph6 input is not supported (graph6 only)");
        if (line.empty())
            throw FormatError("empty graph6 line");

        size_t pos = 0;
        auto order = decode_order(line, pos);
        if (order > max_order)
            throw FormatError("graph6 order " + to_string(order) + " too large");
        if (order > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
            throw ResourceError("graph6 order " + to_string(order) + " exceeds supported size");
        auto n = static_cast<int>(order);

        auto bit_count = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n > 0 ? n - 1 : 0) / 2;
        auto byte_count = static_cast<size_t>((bit_count + 5) / 6);
        if (line.size() - pos < byte_count)
            throw FormatError("truncated adjacency section: expected " + to_string(byte_count) + " bytes, found " + to_string(line.size() - pos));
        if (line.size() - pos > byte_count)
            throw FormatError("unexpected trailing data after adjacency section");

        std::vector<Edge> edges;
        std::uint64_t k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k) {
                auto value = sextet(line, pos + static_cast<size_t>(k / 6));
                if ((value >> (5 - k % 6)) & 1u)
                    edges.emplace_back(i, j);
            }
        if (byte_count > 0) {
            auto last = sextet(line, pos + byte_count - 1);
            auto padding_bits = static_cast<unsigned>(byte_count * 6 - bit_count);
            auto mask = (1u << padding_bits) - 1u;
            if (last & mask) {
                if (options.padding == PaddingCheck::strict)
                    throw FormatError("non-zero padding bits in graph6 line");
                if (padding_warning)
                    *padding_warning = true;
            }
        }
        return Graph(n, edges);
    }

    auto write_graph6(const Graph & g) -> string
    {
        string out;
        auto n = g.order();
        encode_order(static_cast<std::uint64_t>(n), out);
        unsigned value = 0;
        int filled = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                value = (value << 1) | (g.adjacent(i, j) ? 1u : 0u);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(63 + value));
                    value = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(static_cast<char>(63 + (value << (6 - filled))));
        return out;
    }

    auto Graph6Reader::next() -> std::optional<Graph6Record>
    {
        string line;
        while (std::getline(_in, line)) {
            ++_line_number;
            while (! line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
                line.pop_back();
            if (line.empty())
                continue;
            Graph6Record record;
            record.line_number = _line_number;
            try {
                record.graph = parse_graph6(line, _options);
            }
            catch (const std::exception & e) {
                record.error = e.what();
            }
            if (line.starts_with(header))
                line.erase(0, header.size());
            record.line = std::move(line);
            return record;
        }
        return std::nullopt;
    }

    auto read_graph6_file(const string & path, Graph6Options options) -> std::vector<Graph6Record>
    {
        std::ifstream in(path);
        if (! in)
            throw std::runtime_error("cannot open " + path);
        Graph6Reader reader(in, options);
        std::vector<Graph6Record> records;
        while (auto r = reader.next())
            records.push_back(std::move(*r));
        return records;
    }
}
