#pragma once

#include <acp/graph.hpp>

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acp
{
    enum class PaddingCheck
    {
        strict,
        lenient
    };

    struct Graph6Options
    {
        PaddingCheck padding = PaddingCheck::strict;
    };

    /// Decodes one graph6 line. A leading ">>graph6<<" and trailing "\r\n" are accepted.
    /// Throws FormatError on bad bytes, truncation, trailing data, or (strict mode) non-zero padding.
    /// In lenient mode non-zero padding is tolerated and reported through *padding_warning.
    auto parse_graph6(std::string_view line, Graph6Options options = {}, bool * padding_warning = nullptr) -> Graph;

    /// Canonical graph6 encoding (no header, no newline).
    auto write_graph6(const Graph & g) -> std::string;

    struct Graph6Record
    {
        std::size_t line_number = 0; // 1-based
        std::string line;
        std::optional<Graph> graph;
        std::string error; // set iff graph is absent
    };

    /// Reads newline-delimited graph6 records; blank lines are skipped and
    /// decoding errors are reported per record rather than thrown.
    class Graph6Reader
    {
    public:
        explicit Graph6Reader(std::istream & in, Graph6Options options = {}) : _in(in), _options(options) {}

        auto next() -> std::optional<Graph6Record>;

    private:
        std::istream & _in;
        Graph6Options _options;
        std::size_t _line_number = 0;
    };

    auto read_graph6_file(const std::string & path, Graph6Options options = {}) -> std::vector<Graph6Record>;
}
