#include <acp/error.hpp>
#include <acp/graph.hpp>

#include <algorithm>
#include <numeric>
#include <unordered_map>

using std::size_t;
using std::span;
using std::to_string;
using std::vector;

namespace acp
{
    Graph::Graph(int n) : _n(n)
    {
        if (n < 0)
            throw InputError("vertex count must be non-negative, got " + to_string(n));
        _rows.assign(static_cast<size_t>(n), Bitset(static_cast<size_t>(n)));
        _neighbours.resize(static_cast<size_t>(n));
    }

    Graph::Graph(int n, span<const Edge> edges) : Graph(n)
    {
        for (auto [u, v] : edges)
            add_edge(u, v);
        finish();
    }

    Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n, span<const Edge>(edges.begin(), edges.size())) {}

    auto Graph::add_edge(Vertex u, Vertex v) -> void
    {
        if (u < 0 || v < 0 || u >= _n || v >= _n)
            throw InputError("edge (" + to_string(u) + "," + to_string(v) + ") out of range for n=" + to_string(_n));
        if (u == v)
            throw InputError("self-loop at vertex " + to_string(u));
        if (_rows[u].test(static_cast<size_t>(v)))
            throw InputError("parallel edge (" + to_string(u) + "," + to_string(v) + ")");
        _rows[u].set(static_cast<size_t>(v));
        _rows[v].set(static_cast<size_t>(u));
        _neighbours[u].push_back(v);
        _neighbours[v].push_back(u);
        ++_edge_count;
    }

    auto Graph::finish() -> void
    {
        for (auto & ns : _neighbours)
            std::sort(ns.begin(), ns.end());
    }

    auto Graph::closed_row(Vertex v) const -> Bitset
    {
        auto r = _rows[v];
        r.set(static_cast<size_t>(v));
        return r;
    }

    auto Graph::max_degree() const -> int
    {
        int d = 0;
        for (Vertex v = 0; v < _n; ++v)
            d = std::max(d, degree(v));
        return d;
    }

    auto Graph::min_degree() const -> int
    {
        if (_n == 0)
            return 0;
        int d = _n;
        for (Vertex v = 0; v < _n; ++v)
            d = std::min(d, degree(v));
        return d;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(static_cast<size_t>(_edge_count));
        for (Vertex u = 0; u < _n; ++u)
            for (auto v : _neighbours[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    Labeling::Labeling(vector<int> labels) : _labels(std::move(labels))
    {
        for (auto l : _labels) {
            if (l < 1)
                throw InputError("labels must be positive, got " + to_string(l));
            _k = std::max(_k, l);
        }
    }

    Labeling::Labeling(std::initializer_list<int> labels) : Labeling(vector<int>(labels)) {}

    auto name_of(TwinKind kind) -> std::string
    {
        switch (kind) {
            case TwinKind::singleton: return "singleton";
            case TwinKind::false_twins: return "false_twins";
            case TwinKind::true_twins: return "true_twins";
        }
        return "?";
    }

    auto neighborhood_sum(const Graph & g, const Labeling & f, Vertex v) -> std::int64_t
    {
        if (v < 0 || v >= g.order())
            throw InputError("vertex " + to_string(v) + " out of range for n=" + to_string(g.order()));
        if (f.size() != g.order())
            throw InputError("labeling has " + to_string(f.size()) + " entries, graph has " + to_string(g.order()) + " vertices");
        std::int64_t sum = 0;
        for (auto u : g.neighbours(v))
            sum += f[u];
        return sum;
    }

    auto verify_additive_coloring(const Graph & g, const Labeling & f) -> bool
    {
        if (f.size() != g.order())
            throw InputError("labeling has " + to_string(f.size()) + " entries, graph has " + to_string(g.order()) + " vertices");
        vector<std::int64_t> sums(static_cast<size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v)
            sums[v] = neighborhood_sum(g, f, v);
        for (Vertex u = 0; u < g.order(); ++u)
            for (auto v : g.neighbours(u))
                if (u < v && sums[u] == sums[v])
                    return false;
        return true;
    }

    auto verify_proper_coloring(const Graph & g, span<const int> colours) -> bool
    {
        if (static_cast<int>(colours.size()) != g.order())
            throw InputError("colouring has " + to_string(colours.size()) + " entries, graph has " + to_string(g.order()) + " vertices");
        for (Vertex u = 0; u < g.order(); ++u)
            for (auto v : g.neighbours(u))
                if (colours[u] == colours[v])
                    return false;
        return true;
    }

    namespace
    {
        template <typename KeyOf>
        auto group_by_key(span<const Vertex> among, KeyOf key_of) -> vector<vector<Vertex>>
        {
            std::unordered_map<Bitset, size_t, BitsetHash> index;
            vector<vector<Vertex>> classes;
            for (auto v : among) {
                auto [it, inserted] = index.try_emplace(key_of(v), classes.size());
                if (inserted)
                    classes.emplace_back();
                classes[it->second].push_back(v);
            }
            for (auto & c : classes)
                std::sort(c.begin(), c.end());
            std::sort(classes.begin(), classes.end());
            return classes;
        }

        auto all_vertices(const Graph & g) -> vector<Vertex>
        {
            vector<Vertex> vs(static_cast<size_t>(g.order()));
            std::iota(vs.begin(), vs.end(), 0);
            return vs;
        }
    }

    auto true_twin_classes(const Graph & g) -> vector<vector<Vertex>>
    {
        auto vs = all_vertices(g);
        return group_by_key(vs, [&](Vertex v) { return g.closed_row(v); });
    }

    auto false_twin_classes(const Graph & g, span<const Vertex> among) -> vector<vector<Vertex>>
    {
        return group_by_key(among, [&](Vertex v) { return g.row(v); });
    }

    auto false_twin_classes(const Graph & g) -> vector<vector<Vertex>>
    {
        auto vs = all_vertices(g);
        return false_twin_classes(g, vs);
    }

    auto twin_refined_partition(const Graph & g) -> TwinPartition
    {
        TwinPartition result;
        vector<Vertex> leftovers;
        for (auto & c : true_twin_classes(g)) {
            if (c.size() >= 2)
                result.classes.push_back({TwinKind::true_twins, c});
            else
                leftovers.push_back(c.front());
        }
        for (auto & c : false_twin_classes(g, leftovers))
            result.classes.push_back({c.size() >= 2 ? TwinKind::false_twins : TwinKind::singleton, c});
        std::sort(result.classes.begin(), result.classes.end(),
            [](const TwinClass & a, const TwinClass & b) { return a.vertices.front() < b.vertices.front(); });
        return result;
    }

    auto check_twin_partition(const Graph & g, const TwinPartition & partition) -> void
    {
        vector<int> seen(static_cast<size_t>(g.order()), 0);
        for (auto & c : partition.classes) {
            if (c.vertices.empty())
                throw InputError("empty twin class");
            if (c.kind != TwinKind::singleton && c.vertices.size() < 2)
                throw InputError("twin class with fewer than two vertices");
            if (c.kind == TwinKind::singleton && c.vertices.size() != 1)
                throw InputError("singleton class with " + to_string(c.vertices.size()) + " vertices");
            for (auto v : c.vertices) {
                if (v < 0 || v >= g.order())
                    throw InputError("twin class vertex " + to_string(v) + " out of range");
                if (seen[v]++)
                    throw InputError("vertex " + to_string(v) + " appears in two twin classes");
            }
            auto first = c.vertices.front();
            for (auto v : c.vertices) {
                bool ok = c.kind == TwinKind::true_twins ? g.closed_row(v) == g.closed_row(first) : g.row(v) == g.row(first);
                if (! ok)
                    throw InputError("vertices " + to_string(first) + " and " + to_string(v) + " are not " + name_of(c.kind));
            }
        }
        for (Vertex v = 0; v < g.order(); ++v)
            if (! seen[v])
                throw InputError("vertex " + to_string(v) + " not covered by twin partition");
    }

    auto join(const Graph & g1, const Graph & g2) -> Graph
    {
        auto n1 = g1.order(), n2 = g2.order();
        auto edges = g1.edges();
        for (auto [u, v] : g2.edges())
            edges.emplace_back(u + n1, v + n1);
        for (Vertex u = 0; u < n1; ++u)
            for (Vertex v = 0; v < n2; ++v)
                edges.emplace_back(u, v + n1);
        return Graph(n1 + n2, edges);
    }

    auto disjoint_union(const Graph & g1, const Graph & g2) -> Graph
    {
        auto n1 = g1.order();
        auto edges = g1.edges();
        for (auto [u, v] : g2.edges())
            edges.emplace_back(u + n1, v + n1);
        return Graph(n1 + g2.order(), edges);
    }

    auto induced_subgraph(const Graph & g, span<const Vertex> vertices) -> Graph
    {
        vector<int> position(static_cast<size_t>(g.order()), -1);
        for (size_t i = 0; i < vertices.size(); ++i) {
            auto v = vertices[i];
            if (v < 0 || v >= g.order())
                throw InputError("vertex " + to_string(v) + " out of range");
            if (position[v] != -1)
                throw InputError("vertex " + to_string(v) + " listed twice");
            position[v] = static_cast<int>(i);
        }
        vector<Edge> edges;
        for (auto [u, v] : g.edges())
            if (position[u] != -1 && position[v] != -1)
                edges.emplace_back(position[u], position[v]);
        return Graph(static_cast<int>(vertices.size()), edges);
    }

    auto complement(const Graph & g) -> Graph
    {
        vector<Edge> edges;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (! g.adjacent(u, v))
                    edges.emplace_back(u, v);
        return Graph(g.order(), edges);
    }

    auto connected_components(const Graph & g) -> vector<vector<Vertex>>
    {
        vector<int> component(static_cast<size_t>(g.order()), -1);
        vector<vector<Vertex>> result;
        for (Vertex s = 0; s < g.order(); ++s) {
            if (component[s] != -1)
                continue;
            auto id = static_cast<int>(result.size());
            auto & members = result.emplace_back();
            vector<Vertex> stack{s};
            component[s] = id;
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                members.push_back(v);
                for (auto w : g.neighbours(v))
                    if (component[w] == -1) {
                        component[w] = id;
                        stack.push_back(w);
                    }
            }
            std::sort(members.begin(), members.end());
        }
        return result;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return connected_components(g).size() <= 1;
    }

    auto is_clique(const Graph & g, span<const Vertex> vertices) -> bool
    {
        for (size_t i = 0; i < vertices.size(); ++i)
            for (size_t j = i + 1; j < vertices.size(); ++j)
                if (vertices[i] == vertices[j] || ! g.adjacent(vertices[i], vertices[j]))
                    return false;
        return true;
    }

    auto is_stable(const Graph & g, span<const Vertex> vertices) -> bool
    {
        for (size_t i = 0; i < vertices.size(); ++i)
            for (size_t j = i + 1; j < vertices.size(); ++j)
                if (g.adjacent(vertices[i], vertices[j]))
                    return false;
        return true;
    }

    namespace graphs
    {
        auto complete(int n) -> Graph
        {
            vector<Edge> edges;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    edges.emplace_back(u, v);
            return Graph(n, edges);
        }

        auto path(int n) -> Graph
        {
            vector<Edge> edges;
            for (Vertex v = 0; v + 1 < n; ++v)
                edges.emplace_back(v, v + 1);
            return Graph(n, edges);
        }

        auto cycle(int n) -> Graph
        {
            if (n < 3)
                throw InputError("cycle needs at least 3 vertices, got " + to_string(n));
            vector<Edge> edges;
            for (Vertex v = 0; v < n; ++v)
                edges.emplace_back(v, (v + 1) % n);
            return Graph(n, edges);
        }

        auto star(int leaves) -> Graph
        {
            vector<Edge> edges;
            for (Vertex v = 1; v <= leaves; ++v)
                edges.emplace_back(0, v);
            return Graph(leaves + 1, edges);
        }

        auto complete_bipartite(int a, int b) -> Graph
        {
            return join(Graph(a), Graph(b));
        }

        auto petersen() -> Graph
        {
            vector<Edge> edges;
            for (Vertex i = 0; i < 5; ++i) {
                edges.emplace_back(i, (i + 1) % 5);
                edges.emplace_back(i, i + 5);
                edges.emplace_back(5 + i, 5 + (i + 2) % 5);
            }
            return Graph(10, edges);
        }
    }
}
