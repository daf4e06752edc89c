#pragma once

#include <acp/graph.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace acp
{
    /// Edge-list text. Two dialects, picked by the first non-comment line:
    ///  - DIMACS: "p edge N M" then "e U V" lines, 1-based, "c" comments;
    ///  - plain: "N M" then M lines "U V", 0-based, "#" comments.
    /// Throws FormatError on malformed text or an edge count that disagrees with the header.
    auto parse_edge_list(std::istream & in) -> Graph;

    struct NamedGraph
    {
        std::string name; // graph6 text, or "path:line" for file input
        Graph graph;
    };

    /// A graph6 string, a file of graph6 lines, or an edge-list file. Arguments naming an
    /// existing file are read as a file; a file is graph6 unless its first line starts with a
    /// digit, 'p' or a comment marker.
    auto read_graph_argument(const std::string & argument) -> std::vector<NamedGraph>;
}
