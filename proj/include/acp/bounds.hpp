#pragma once

#include <acp/graph.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace acp
{
    struct BoundWitness
    {
        std::string name;             // e.g. "true-twins", "clique", "degree", "split"
        int value = 0;
        std::vector<Vertex> vertices; // twin class, clique or split clique when meaningful
        std::string detail;
    };

    struct BoundsReport
    {
        int eta_lower = 1;
        int eta_upper = 1;
        std::vector<BoundWitness> witnesses;
    };

    /// eta(G) = 1 iff every edge joins vertices of different degree.
    auto is_eta_one(const Graph & g) -> bool;

    /// A largest true-twin class (smallest vertex first on ties).
    auto largest_true_twin_class(const Graph & g) -> std::vector<Vertex>;

    /// Size of the largest true-twin class; 1 on graphs without twins, 0 on the empty graph.
    auto twin_lower_bound(const Graph & g) -> int;

    /// ceil((d1 + 1) / (d2 - |Q| + 2)), d1 and d2 the smallest and largest degree inside Q.
    /// Throws InputError if Q is empty or not a clique.
    auto clique_lower_bound(const Graph & g, std::span<const Vertex> clique) -> int;

    /// The weaker ceil(|Q| / (n - |Q| + 1)) on the same clique.
    auto relaxed_clique_lower_bound(const Graph & g, std::span<const Vertex> clique) -> int;

    struct CliqueBound
    {
        int value = 0;
        std::vector<Vertex> clique;
    };

    /// Best clique bound over every clique when n <= exhaustive_limit, otherwise over
    /// greedily grown cliques (and all their prefixes). Ties prefer larger, then
    /// lexicographically smaller cliques.
    auto best_clique_lower_bound(const Graph & g, int exhaustive_limit = 16) -> CliqueBound;

    /// Delta^2 - Delta + 1 for Delta >= 2; 2 when Delta = 1 (a matching needs two labels); 1 when edgeless.
    auto degree_upper_bound(const Graph & g) -> int;

    struct SplitPartition
    {
        std::vector<Vertex> clique; // ascending
        std::vector<Vertex> stable; // ascending
    };

    /// Split partition with a maximum (hence maximal) clique, or nullopt if g is not split.
    /// Among maximum cliques whose complement is stable, the lexicographically smallest is chosen.
    auto split_recognize(const Graph & g) -> std::optional<SplitPartition>;

    /// Throws InputError unless (Q, S) partitions V, Q is a maximal clique and S is stable.
    auto check_split_partition(const Graph & g, const SplitPartition & partition) -> void;

    /// One clique vertex per distinct degree inside Q (the first in ascending vertex order).
    auto distinct_degree_subset(const Graph & g, std::span<const Vertex> clique) -> std::vector<Vertex>;

    /// |Q| - |T| + 1 with T a largest subset of Q with pairwise distinct degrees.
    auto split_upper_bound(const Graph & g, const SplitPartition & partition) -> int;

    /// Additive (|Q| - |T| + 1)-coloring: the clique vertices outside T get 1, 2, ..., |Q| - |T|
    /// in ascending order; T and every stable vertex get |Q| - |T| + 1.
    auto split_labeling(const Graph & g, const SplitPartition & partition) -> Labeling;

    /// Backward recursion s_r = |V_r|, s_i = max(1 + s_{i+1}, |V_i|). Parts must be non-increasing.
    auto multipartite_sequence(std::span<const int> parts) -> std::vector<int>;

    /// max_i ceil(s_i / |V_i|) for a complete multipartite graph with non-increasing part sizes.
    /// Throws InputError on empty, non-positive or unsorted input.
    auto multipartite_eta(std::span<const int> parts) -> int;

    /// Aggregate: lower from twins, cliques and the eta = 1 characterization; upper from the
    /// degree bound, the split bound and cheaply recognised families (complete graphs, cycles).
    auto combined_bounds(const Graph & g) -> BoundsReport;
}
