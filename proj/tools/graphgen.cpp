// Enumerates non-isomorphic graphs by vertex extension and writes graph6 lines.
//
// Each graph on n vertices is obtained from a graph on n-1 vertices by adding a
// vertex with some neighbourhood; candidates are deduplicated by a canonical
// form (colour refinement, then exhaustive search over orderings inside cells).
// Intended for desk-scale corpora (n <= 9).

#include <acp/graph.hpp>
#include <acp/graph6.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <unordered_set>
#include <vector>

using acp::Edge;
using acp::Graph;
using acp::Vertex;
using std::vector;

namespace
{
    auto refine_colours(const Graph & g) -> vector<int>
    {
        auto n = g.order();
        vector<int> colour(static_cast<std::size_t>(n), 0);
        for (int round = 0; round < n; ++round) {
            std::map<std::pair<int, vector<int>>, int> signatures;
            vector<std::pair<int, vector<int>>> sig(static_cast<std::size_t>(n));
            for (Vertex v = 0; v < n; ++v) {
                vector<int> ns;
                for (auto w : g.neighbours(v))
                    ns.push_back(colour[w]);
                std::sort(ns.begin(), ns.end());
                sig[v] = {colour[v], std::move(ns)};
                signatures.emplace(sig[v], 0);
            }
            int next = 0;
            for (auto & [key, id] : signatures)
                id = next++;
            vector<int> refined(static_cast<std::size_t>(n));
            for (Vertex v = 0; v < n; ++v)
                refined[v] = signatures[sig[v]];
            bool stable = signatures.size() == std::set<int>(colour.begin(), colour.end()).size();
            colour = std::move(refined);
            if (stable)
                break;
        }
        return colour;
    }

    auto code_of(const Graph & g, const vector<Vertex> & order) -> std::uint64_t
    {
        std::uint64_t code = 0;
        auto n = static_cast<int>(order.size());
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
        return code;
    }

    // Maximum code over orderings that list cells in colour order; within a cell every permutation is tried.
    auto canonical(const Graph & g) -> Graph
    {
        auto n = g.order();
        auto colour = refine_colours(g);
        vector<vector<Vertex>> cells;
        for (int c = 0;; ++c) {
            vector<Vertex> cell;
            for (Vertex v = 0; v < n; ++v)
                if (colour[v] == c)
                    cell.push_back(v);
            if (cell.empty())
                break;
            cells.push_back(std::move(cell));
        }
        std::uint64_t best = 0;
        vector<Vertex> best_order;
        auto recurse = [&](auto & self, std::size_t cell_index) -> void {
            if (cell_index == cells.size()) {
                vector<Vertex> order;
                for (auto & c : cells)
                    order.insert(order.end(), c.begin(), c.end());
                auto code = code_of(g, order);
                if (best_order.empty() || code > best) {
                    best = code;
                    best_order = std::move(order);
                }
                return;
            }
            auto & cell = cells[cell_index];
            std::sort(cell.begin(), cell.end());
            do
                self(self, cell_index + 1);
            while (std::next_permutation(cell.begin(), cell.end()));
        };
        recurse(recurse, 0);
        vector<int> position(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            position[best_order[i]] = i;
        vector<Edge> edges;
        for (auto [u, v] : g.edges())
            edges.emplace_back(position[u], position[v]);
        return Graph(n, edges);
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Enumerate non-isomorphic graphs in graph6 format"};
    int min_n = 1, max_n = 7;
    bool connected_only = false;
    app.add_option("--min-n", min_n, "smallest order written")->check(CLI::Range(1, 10));
    app.add_option("--max-n", max_n, "largest order written")->check(CLI::Range(1, 10));
    app.add_flag("-c,--connected", connected_only, "write connected graphs only");
    CLI11_PARSE(app, argc, argv);

    vector<Graph> level{Graph(1)};
    for (int n = 1; n <= max_n; ++n) {
        if (n > 1) {
            std::unordered_set<std::string> seen;
            vector<Graph> next;
            for (auto & g : level) {
                auto edges = g.edges();
                for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                    auto extended = edges;
                    for (Vertex v = 0; v < n - 1; ++v)
                        if ((mask >> v) & 1u)
                            extended.emplace_back(v, n - 1);
                    auto c = canonical(Graph(n, extended));
                    if (seen.insert(acp::write_graph6(c)).second)
                        next.push_back(std::move(c));
                }
            }
            level = std::move(next);
        }
        if (n < min_n)
            continue;
        vector<std::string> lines;
        for (auto & g : level)
            if (! connected_only || acp::is_connected(g))
                lines.push_back(acp::write_graph6(g));
        std::sort(lines.begin(), lines.end());
        for (auto & l : lines)
            std::cout << l << '\n';
    }
}
