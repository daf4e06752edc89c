#include <acp/edgelist.hpp>
#include <acp/error.hpp>
#include <acp/graph6.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

using std::string;
using std::to_string;
using std::vector;

namespace acp
{
    namespace
    {
        auto fail(int line_number, const string & message) -> FormatError
        {
            return FormatError("edge list line " + to_string(line_number) + ": " + message);
        }

        auto read_ints(std::istringstream & in, int count, int line_number) -> vector<long long>
        {
            vector<long long> values(static_cast<std::size_t>(count));
            for (auto & v : values)
                if (! (in >> v))
                    throw fail(line_number, "expected " + to_string(count) + " integers");
            string rest;
            if (in >> rest)
                throw fail(line_number, "unexpected trailing text '" + rest + "'");
            return values;
        }
    }

    auto parse_edge_list(std::istream & in) -> Graph
    {
        string line;
        int line_number = 0;
        bool dimacs = false, header = false;
        long long n = 0, m = 0;
        vector<Edge> edges;
        while (std::getline(in, line)) {
            ++line_number;
            std::istringstream tokens(line);
            string first;
            if (! (tokens >> first) || first[0] == '#' || first == "c")
                continue;
            if (! header) {
                header = true;
                if (first == "p") {
                    dimacs = true;
                    string format;
                    if (! (tokens >> format) || (format != "edge" && format != "col"))
                        throw fail(line_number, "expected 'p edge N M'");
                    auto v = read_ints(tokens, 2, line_number);
                    n = v[0], m = v[1];
                }
                else {
                    std::istringstream again(line);
                    auto v = read_ints(again, 2, line_number);
                    n = v[0], m = v[1];
                }
                if (n < 0 || m < 0 || n > 1'000'000)
                    throw fail(line_number, "bad header sizes");
                continue;
            }
            long long u, v;
            if (dimacs) {
                if (first != "e")
                    throw fail(line_number, "expected 'e U V'");
                auto uv = read_ints(tokens, 2, line_number);
                u = uv[0] - 1, v = uv[1] - 1;
            }
            else {
                std::istringstream again(line);
                auto uv = read_ints(again, 2, line_number);
                u = uv[0], v = uv[1];
            }
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw fail(line_number, "vertex out of range");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        if (! header)
            throw FormatError("edge list has no header line");
        if (static_cast<long long>(edges.size()) != m)
            throw FormatError("edge list header announces " + to_string(m) + " edges, found " + to_string(edges.size()));
        try {
            return Graph(static_cast<int>(n), edges);
        }
        catch (const InputError & e) {
            throw FormatError(string("edge list: ") + e.what());
        }
    }

    auto read_graph_argument(const string & argument) -> vector<NamedGraph>
    {
        std::error_code ec;
        if (! std::filesystem::is_regular_file(argument, ec)) {
            try {
                return {{argument, parse_graph6(argument)}};
            }
            catch (const FormatError & e) {
                throw FormatError("'" + argument + "' is neither a file nor a graph6 string: " + e.what());
            }
        }

        std::ifstream file(argument);
        if (! file)
            throw FormatError("cannot open " + argument);
        string first;
        while (std::getline(file, first) && first.find_first_not_of(" \t\r") == string::npos)
            ;
        file.clear();
        file.seekg(0);
        auto lead = first.empty() ? ' ' : first[first.find_first_not_of(" \t")];
        if (std::isdigit(static_cast<unsigned char>(lead)) || lead == 'p' || lead == 'c' || lead == '#')
            return {{argument, parse_edge_list(file)}};

        vector<NamedGraph> graphs;
        Graph6Reader reader(file);
        while (auto record = reader.next()) {
            if (! record->graph)
                throw FormatError(argument + ":" + to_string(record->line_number) + ": " + record->error);
            graphs.push_back({record->line, std::move(*record->graph)});
        }
        return graphs;
    }
}
