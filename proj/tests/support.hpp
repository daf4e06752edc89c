#pragma once

// Test-only oracles and helpers. Nothing here calls the search code under test.

#include <acp/graph.hpp>
#include <acp/graph6.hpp>
#include <acp/milp.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#ifndef ACP_TEST_DATA
#define ACP_TEST_DATA "tests/data"
#endif

namespace acp_test
{
    using namespace acp;

    inline auto data_path(const std::string & name) -> std::string
    {
        return std::string(ACP_TEST_DATA) + "/" + name;
    }

    inline auto corpus(const std::string & name, int max_n = 1 << 30) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        for (auto & r : read_graph6_file(data_path(name)))
            if (r.graph && r.graph->order() <= max_n)
                out.push_back(*r.graph);
        return out;
    }

    inline auto random_graph(int n, double p, std::mt19937 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    /// Vertex v of g becomes perm[v].
    inline auto relabel(const Graph & g, const std::vector<int> & perm) -> Graph
    {
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            edges.emplace_back(perm[u], perm[v]);
        return Graph(g.order(), edges);
    }

    /// Advances f through [1,k]^n; false after the last tuple.
    inline auto next_tuple(std::vector<int> & f, int k) -> bool
    {
        for (auto & x : f) {
            if (x < k) {
                ++x;
                return true;
            }
            x = 1;
        }
        return false;
    }

    inline auto sums_distinct_on_edges(const Graph & g, const std::vector<int> & f) -> bool
    {
        std::vector<long long> s(f.size(), 0);
        for (auto [u, v] : g.edges()) {
            s[u] += f[v];
            s[v] += f[u];
        }
        for (auto [u, v] : g.edges())
            if (s[u] == s[v])
                return false;
        return true;
    }

    /// Least k with some f in [1,k]^n distinct on every edge; plain enumeration.
    inline auto brute_force_eta(const Graph & g) -> int
    {
        for (int k = 1;; ++k) {
            std::vector<int> f(static_cast<std::size_t>(g.order()), 1);
            do
                if (sums_distinct_on_edges(g, f))
                    return k;
            while (next_tuple(f, k));
        }
    }

    inline auto brute_force_has_coloring(const Graph & g, int k) -> bool
    {
        std::vector<int> f(static_cast<std::size_t>(g.order()), 1);
        do
            if (sums_distinct_on_edges(g, f))
                return true;
        while (next_tuple(f, k));
        return false;
    }

    /// Generic integer feasibility by depth-first enumeration over the model's non-eliminated
    /// variables in index order, pruning a row as soon as its attainable range misses the rhs.
    /// Variables without an upper bound are capped at cap.
    class ModelEnumerator
    {
    public:
        ModelEnumerator(const MilpModel & model, long long cap) : _model(model), _cap(cap)
        {
            _value.assign(model.variables.size(), 0);
            _assigned.assign(model.variables.size(), false);
            _rows_of.resize(model.variables.size());
            for (std::size_t r = 0; r < model.constraints.size(); ++r)
                for (auto & t : model.constraints[r].terms)
                    _rows_of[t.variable].push_back(static_cast<int>(r));
            for (std::size_t i = 0; i < model.variables.size(); ++i)
                if (! model.eliminated[i])
                    _order.push_back(static_cast<int>(i));
        }

        /// Fixes variable i to value before the search (it is then skipped).
        auto fix(int i, long long value) -> void
        {
            _value[i] = value;
            _assigned[i] = true;
        }

        auto feasible() -> bool
        {
            for (std::size_t r = 0; r < _model.constraints.size(); ++r)
                if (! row_possible(static_cast<int>(r)))
                    return false;
            return search(0);
        }

    private:
        auto upper(int i) const -> long long
        {
            auto u = _model.variables[i].upper;
            return std::min(u, _cap);
        }

        auto row_possible(int r) const -> bool
        {
            auto & c = _model.constraints[r];
            long long lo = 0, hi = 0;
            for (auto & t : c.terms) {
                if (_assigned[t.variable]) {
                    lo += t.coefficient * _value[t.variable];
                    hi += t.coefficient * _value[t.variable];
                    continue;
                }
                auto a = t.coefficient * _model.variables[t.variable].lower;
                auto b = t.coefficient * upper(t.variable);
                lo += std::min(a, b);
                hi += std::max(a, b);
            }
            switch (c.relation) {
                case Relation::less_equal: return lo <= c.rhs;
                case Relation::greater_equal: return hi >= c.rhs;
                case Relation::equal: return lo <= c.rhs && c.rhs <= hi;
            }
            return false;
        }

        auto search(std::size_t depth) -> bool
        {
            while (depth < _order.size() && _assigned[_order[depth]])
                ++depth;
            if (depth == _order.size())
                return true;
            auto i = _order[depth];
            for (auto x = _model.variables[i].lower; x <= upper(i); ++x) {
                _value[i] = x;
                _assigned[i] = true;
                bool ok = std::all_of(_rows_of[i].begin(), _rows_of[i].end(), [&](int r) { return row_possible(r); });
                if (ok && search(depth + 1))
                    return true;
                _assigned[i] = false;
            }
            return false;
        }

        const MilpModel & _model;
        long long _cap;
        std::vector<long long> _value;
        std::vector<bool> _assigned;
        std::vector<std::vector<int>> _rows_of;
        std::vector<int> _order;
    };

    /// Minimum objective (the k variable) over integral feasible points, by enumeration.
    inline auto enumerate_optimum(const MilpModel & model) -> std::optional<long long>
    {
        for (long long k = 1; k <= model.upper_bound; ++k) {
            ModelEnumerator e(model, model.upper_bound);
            e.fix(model.k_index(), k);
            if (e.feasible())
                return k;
        }
        return std::nullopt;
    }

    /// Does the labeling f extend to a feasible point of the model?
    inline auto extends(const MilpModel & model, const std::vector<int> & f) -> bool
    {
        ModelEnumerator e(model, model.upper_bound);
        for (std::size_t v = 0; v < f.size(); ++v)
            e.fix(model.label_index(static_cast<Vertex>(v)), f[v]);
        return e.feasible();
    }
}
