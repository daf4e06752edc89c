#pragma once

#include <acp/graph.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace acp
{
    enum class SolveStatus
    {
        solved,
        upper_bound_exceeded, // no additive coloring with k <= ub: the supplied ub is not an upper bound
        budget_exceeded
    };

    auto name_of(SolveStatus status) -> const char *;

    struct SolveStats
    {
        std::uint64_t nodes = 0;
        std::chrono::duration<double> elapsed{0};
    };

    struct EtaSearchOptions
    {
        bool twin_symmetry = true;
        std::uint64_t node_budget = 10'000'000;
    };

    struct EtaResult
    {
        SolveStatus status = SolveStatus::solved;
        int value = 0;         // eta when solved
        Labeling certificate;  // additive coloring with certificate.k() == value when solved
        SolveStats stats;
    };

    enum class Feasibility
    {
        feasible,
        infeasible,
        budget_exceeded
    };

    /// Depth-first search for an additive coloring with labels in [1, k].
    ///
    /// Vertices are labeled in descending degree order (ties by id). A branch is cut as
    /// soon as some edge has both neighbourhoods fully labeled with equal sums. With
    /// twin_symmetry, labels are non-decreasing along each false-twin class and strictly
    /// increasing along each true-twin class of the twin-refined partition.
    /// Node counts accumulate into stats.
    auto find_additive_coloring(const Graph & g, int k, const EtaSearchOptions & options, SolveStats & stats,
        std::optional<Labeling> & found) -> Feasibility;

    /// Least k in [lb, ub] admitting an additive k-coloring, trying k = lb, lb + 1, ...
    /// Throws InputError unless 1 <= lb <= ub.
    auto eta_exact(const Graph & g, int lb, int ub, const EtaSearchOptions & options = {}) -> EtaResult;

    /// eta_exact with lb from combined_bounds and ub = Delta^2 - Delta + 1 (see degree_upper_bound).
    auto eta_exact(const Graph & g, const EtaSearchOptions & options = {}) -> EtaResult;

    struct Coloring
    {
        int colours = 0;
        std::vector<int> colour; // colour[v] in [1, colours]
    };

    /// Greedy DSATUR: repeatedly colour the vertex of largest saturation (ties: degree, then id)
    /// with the smallest free colour.
    auto dsatur(const Graph & g) -> Coloring;

    struct ChromaticOptions
    {
        int max_order = 16;
    };

    struct ChromaticResult
    {
        int value = 0;
        Coloring certificate;
        SolveStats stats;
    };

    /// Exact chromatic number by DSATUR-ordered branch and bound: the DSATUR colouring is the
    /// initial incumbent, a greedy clique gives the lower bound, and a new colour is only
    /// opened as the next unused one. Throws ResourceError when n > options.max_order.
    auto chromatic_exact(const Graph & g, const ChromaticOptions & options = {}) -> ChromaticResult;
}
