#pragma once

#include <acp/bitset.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace acp
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /// Undirected simple graph on vertices 0..n-1. Immutable once built.
    ///
    /// Adjacency is kept twice: as bitset rows (twin detection, containment tests)
    /// and as sorted neighbour lists (sums, iteration). Memory is O(n^2) bits.
    class Graph
    {
    public:
        Graph() = default;

        /// Edgeless graph on n vertices.
        explicit Graph(int n);

        /// Throws InputError on self-loops, parallel edges or endpoints out of range.
        Graph(int n, std::span<const Edge> edges);
        Graph(int n, std::initializer_list<Edge> edges);

        auto order() const -> int { return _n; }
        auto size() const -> int { return _edge_count; }

        auto adjacent(Vertex u, Vertex v) const -> bool { return _rows[u].test(static_cast<std::size_t>(v)); }
        auto degree(Vertex v) const -> int { return static_cast<int>(_neighbours[v].size()); }
        auto neighbours(Vertex v) const -> std::span<const Vertex> { return _neighbours[v]; }
        auto row(Vertex v) const -> const Bitset & { return _rows[v]; }

        /// N[v] as a bitset.
        auto closed_row(Vertex v) const -> Bitset;

        auto max_degree() const -> int;
        auto min_degree() const -> int;

        /// Edges (u, v) with u < v, lexicographically sorted.
        auto edges() const -> std::vector<Edge>;

        auto operator==(const Graph & other) const -> bool { return _n == other._n && _rows == other._rows; }

    private:
        auto add_edge(Vertex u, Vertex v) -> void;
        auto finish() -> void;

        int _n = 0;
        int _edge_count = 0;
        std::vector<Bitset> _rows;
        std::vector<std::vector<Vertex>> _neighbours;
    };

    /// Vertex labels in [1, k]; k is the largest label present.
    class Labeling
    {
    public:
        Labeling() = default;

        /// Throws InputError if any label is below 1.
        explicit Labeling(std::vector<int> labels);
        Labeling(std::initializer_list<int> labels);

        auto size() const -> int { return static_cast<int>(_labels.size()); }
        auto k() const -> int { return _k; }
        auto operator[](Vertex v) const -> int { return _labels[static_cast<std::size_t>(v)]; }
        auto values() const -> std::span<const int> { return _labels; }

        auto operator==(const Labeling &) const -> bool = default;

    private:
        std::vector<int> _labels;
        int _k = 0;
    };

    enum class TwinKind
    {
        singleton,
        false_twins,
        true_twins
    };

    auto name_of(TwinKind kind) -> std::string;

    struct TwinClass
    {
        TwinKind kind;
        std::vector<Vertex> vertices; // ascending
    };

    /// Partition of V into singletons, false-twin classes and true-twin classes.
    struct TwinPartition
    {
        std::vector<TwinClass> classes; // ordered by smallest vertex
    };

    /// f(N(v)). Throws InputError if v is out of range or f is too short.
    auto neighborhood_sum(const Graph & g, const Labeling & f, Vertex v) -> std::int64_t;

    /// True iff f(N(u)) != f(N(v)) on every edge. Throws InputError if |f| != n.
    auto verify_additive_coloring(const Graph & g, const Labeling & f) -> bool;

    /// True iff adjacent vertices receive distinct colours. Throws InputError if |colours| != n.
    auto verify_proper_coloring(const Graph & g, std::span<const int> colours) -> bool;

    /// Maximal classes of N[u] = N[v]; every vertex appears once. Classes ordered by smallest vertex.
    auto true_twin_classes(const Graph & g) -> std::vector<std::vector<Vertex>>;

    /// Maximal classes of N(u) = N(v) among the given vertices.
    auto false_twin_classes(const Graph & g, std::span<const Vertex> among) -> std::vector<std::vector<Vertex>>;
    auto false_twin_classes(const Graph & g) -> std::vector<std::vector<Vertex>>;

    /// True-twin classes first; the leftover singletons are regrouped into false-twin classes.
    auto twin_refined_partition(const Graph & g) -> TwinPartition;

    /// Throws InputError unless the partition covers V once and every class satisfies its twin relation.
    auto check_twin_partition(const Graph & g, const TwinPartition & partition) -> void;

    /// g1 then g2 (shifted by |V(g1)|), plus every edge between the two.
    auto join(const Graph & g1, const Graph & g2) -> Graph;

    auto disjoint_union(const Graph & g1, const Graph & g2) -> Graph;

    auto induced_subgraph(const Graph & g, std::span<const Vertex> vertices) -> Graph;

    auto complement(const Graph & g) -> Graph;

    /// Vertex sets of connected components, each ascending, ordered by smallest vertex.
    auto connected_components(const Graph & g) -> std::vector<std::vector<Vertex>>;

    auto is_connected(const Graph & g) -> bool;

    auto is_clique(const Graph & g, std::span<const Vertex> vertices) -> bool;
    auto is_stable(const Graph & g, std::span<const Vertex> vertices) -> bool;

    namespace graphs
    {
        auto complete(int n) -> Graph;
        auto path(int n) -> Graph;
        auto cycle(int n) -> Graph;
        auto star(int leaves) -> Graph;
        auto complete_bipartite(int a, int b) -> Graph;
        auto petersen() -> Graph;
    }
}
