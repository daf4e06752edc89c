#include <acp/bounds.hpp>
#include <acp/error.hpp>
#include <acp/solver.hpp>

#include <algorithm>
#include <stdexcept>

using std::size_t;
using std::to_string;
using std::vector;

namespace acp
{
    auto name_of(SolveStatus status) -> const char *
    {
        switch (status) {
            case SolveStatus::solved: return "solved";
            case SolveStatus::upper_bound_exceeded: return "upper-bound-exceeded";
            case SolveStatus::budget_exceeded: return "budget-exceeded";
        }
        return "?";
    }

    namespace
    {
        class AdditiveSearch
        {
        public:
            AdditiveSearch(const Graph & g, int k, const EtaSearchOptions & options, SolveStats & stats) :
                _g(g), _k(k), _budget(options.node_budget), _stats(stats)
            {
                auto n = static_cast<size_t>(g.order());
                _order.resize(n);
                for (Vertex v = 0; v < g.order(); ++v)
                    _order[v] = v;
                std::stable_sort(_order.begin(), _order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

                _label.assign(n, 0);
                _partial.assign(n, 0);
                _unlabeled.resize(n);
                for (Vertex v = 0; v < g.order(); ++v)
                    _unlabeled[v] = g.degree(v);

                _class_of.assign(n, -1);
                _class_pos.assign(n, 0);
                if (options.twin_symmetry) {
                    for (auto & c : twin_refined_partition(g).classes) {
                        if (c.kind == TwinKind::singleton)
                            continue;
                        auto id = static_cast<int>(_classes.size());
                        _classes.push_back(c.vertices);
                        _strict.push_back(c.kind == TwinKind::true_twins);
                        for (size_t i = 0; i < c.vertices.size(); ++i) {
                            _class_of[c.vertices[i]] = id;
                            _class_pos[c.vertices[i]] = static_cast<int>(i);
                        }
                    }
                }
            }

            auto run(std::optional<Labeling> & found) -> Feasibility
            {
                auto r = search(0);
                if (r == Feasibility::feasible)
                    found = Labeling(_label);
                return r;
            }

        private:
            auto symmetry_allows(Vertex x, int c) const -> bool
            {
                auto id = _class_of[x];
                if (id < 0)
                    return true;
                auto pos = _class_pos[x];
                auto strict = _strict[id];
                for (auto y : _classes[id]) {
                    auto l = _label[y];
                    if (l == 0 || y == x)
                        continue;
                    if (_class_pos[y] < pos ? (strict ? l >= c : l > c) : (strict ? l <= c : l < c))
                        return false;
                }
                return true;
            }

            auto pinned(Vertex v) const -> bool
            {
                return _unlabeled[v] == 0 || _k == 1;
            }

            auto pinned_value(Vertex v) const -> long long
            {
                return _partial[v] + _unlabeled[v];
            }

            auto conflict_around(Vertex x) const -> bool
            {
                for (auto y : _g.neighbours(x)) {
                    if (! pinned(y))
                        continue;
                    for (auto z : _g.neighbours(y))
                        if (pinned(z) && pinned_value(y) == pinned_value(z))
                            return true;
                }
                return false;
            }

            auto search(size_t depth) -> Feasibility
            {
                if (depth == _order.size())
                    return Feasibility::feasible;
                auto x = _order[depth];
                for (int c = 1; c <= _k; ++c) {
                    if (_stats.nodes >= _budget)
                        return Feasibility::budget_exceeded;
                    ++_stats.nodes;
                    if (! symmetry_allows(x, c))
                        continue;
                    _label[x] = c;
                    for (auto y : _g.neighbours(x)) {
                        _partial[y] += c;
                        --_unlabeled[y];
                    }
                    auto r = conflict_around(x) ? Feasibility::infeasible : search(depth + 1);
                    if (r == Feasibility::feasible)
                        return r;
                    for (auto y : _g.neighbours(x)) {
                        _partial[y] -= c;
                        ++_unlabeled[y];
                    }
                    _label[x] = 0;
                    if (r == Feasibility::budget_exceeded)
                        return r;
                }
                return Feasibility::infeasible;
            }

            const Graph & _g;
            int _k;
            std::uint64_t _budget;
            SolveStats & _stats;
            vector<Vertex> _order;
            vector<int> _label;
            vector<long long> _partial;
            vector<int> _unlabeled;
            vector<int> _class_of, _class_pos;
            vector<vector<Vertex>> _classes;
            vector<bool> _strict;
        };
    }

    auto find_additive_coloring(const Graph & g, int k, const EtaSearchOptions & options, SolveStats & stats,
        std::optional<Labeling> & found) -> Feasibility
    {
        if (k < 1)
            throw InputError("label count must be at least 1, got " + to_string(k));
        auto start = std::chrono::steady_clock::now();
        AdditiveSearch search(g, k, options, stats);
        auto r = search.run(found);
        stats.elapsed += std::chrono::steady_clock::now() - start;
        return r;
    }

    auto eta_exact(const Graph & g, int lb, int ub, const EtaSearchOptions & options) -> EtaResult
    {
        if (lb < 1 || lb > ub)
            throw InputError("need 1 <= lb <= ub, got lb=" + to_string(lb) + " ub=" + to_string(ub));
        EtaResult result;
        for (int k = lb; k <= ub; ++k) {
            std::optional<Labeling> found;
            auto r = find_additive_coloring(g, k, options, result.stats, found);
            if (r == Feasibility::budget_exceeded) {
                result.status = SolveStatus::budget_exceeded;
                return result;
            }
            if (r == Feasibility::feasible) {
                if (! verify_additive_coloring(g, *found))
                    throw std::logic_error("additive search returned an invalid labeling");
                result.value = k;
                result.certificate = std::move(*found);
                return result;
            }
        }
        result.status = SolveStatus::upper_bound_exceeded;
        return result;
    }

    auto eta_exact(const Graph & g, const EtaSearchOptions & options) -> EtaResult
    {
        auto bounds = combined_bounds(g);
        auto ub = std::max(degree_upper_bound(g), bounds.eta_lower);
        return eta_exact(g, bounds.eta_lower, ub, options);
    }

    auto dsatur(const Graph & g) -> Coloring
    {
        auto n = g.order();
        Coloring result;
        result.colour.assign(static_cast<size_t>(n), 0);
        vector<vector<char>> seen(static_cast<size_t>(n), vector<char>(static_cast<size_t>(n) + 2, 0));
        vector<int> saturation(static_cast<size_t>(n), 0);
        for (int step = 0; step < n; ++step) {
            Vertex best = -1;
            for (Vertex v = 0; v < n; ++v) {
                if (result.colour[v])
                    continue;
                if (best == -1 || saturation[v] > saturation[best] || (saturation[v] == saturation[best] && g.degree(v) > g.degree(best)))
                    best = v;
            }
            int c = 1;
            while (seen[best][c])
                ++c;
            result.colour[best] = c;
            result.colours = std::max(result.colours, c);
            for (auto w : g.neighbours(best))
                if (! seen[w][c]) {
                    seen[w][c] = 1;
                    ++saturation[w];
                }
        }
        return result;
    }

    namespace
    {
        class ChromaticSearch
        {
        public:
            ChromaticSearch(const Graph & g, Coloring incumbent, int lower, SolveStats & stats) :
                _g(g), _best(std::move(incumbent)), _lower(lower), _stats(stats)
            {
                auto n = static_cast<size_t>(g.order());
                _colour.assign(n, 0);
                _count.assign(n, vector<int>(n + 2, 0));
                _saturation.assign(n, 0);
            }

            auto run() -> Coloring
            {
                if (_best.colours > _lower)
                    search(0, 0);
                return _best;
            }

        private:
            auto search(int coloured, int used) -> void
            {
                if (_best.colours <= _lower)
                    return;
                if (coloured == _g.order()) {
                    _best.colours = used;
                    _best.colour = _colour;
                    return;
                }
                Vertex x = -1;
                for (Vertex v = 0; v < _g.order(); ++v) {
                    if (_colour[v])
                        continue;
                    if (x == -1 || _saturation[v] > _saturation[x] || (_saturation[v] == _saturation[x] && _g.degree(v) > _g.degree(x)))
                        x = v;
                }
                auto limit = std::min(used + 1, _best.colours - 1);
                for (int c = 1; c <= limit; ++c) {
                    if (_count[x][c])
                        continue;
                    ++_stats.nodes;
                    _colour[x] = c;
                    for (auto w : _g.neighbours(x))
                        if (_count[w][c]++ == 0)
                            ++_saturation[w];
                    search(coloured + 1, std::max(used, c));
                    for (auto w : _g.neighbours(x))
                        if (--_count[w][c] == 0)
                            --_saturation[w];
                    _colour[x] = 0;
                    if (_best.colours <= _lower)
                        return;
                    limit = std::min(limit, _best.colours - 1);
                }
            }

            const Graph & _g;
            Coloring _best;
            int _lower;
            SolveStats & _stats;
            vector<int> _colour;
            vector<vector<int>> _count;
            vector<int> _saturation;
        };

        auto greedy_clique_size(const Graph & g) -> int
        {
            int best = g.order() > 0 ? 1 : 0;
            for (Vertex start = 0; start < g.order(); ++start) {
                vector<Vertex> candidates(g.neighbours(start).begin(), g.neighbours(start).end());
                int size = 1;
                while (! candidates.empty()) {
                    auto pick = *std::max_element(candidates.begin(), candidates.end(),
                        [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a > b); });
                    ++size;
                    std::erase_if(candidates, [&](Vertex w) { return w == pick || ! g.adjacent(w, pick); });
                }
                best = std::max(best, size);
            }
            return best;
        }
    }

    auto chromatic_exact(const Graph & g, const ChromaticOptions & options) -> ChromaticResult
    {
        if (g.order() > options.max_order)
            throw ResourceError("exact chromatic number limited to n <= " + to_string(options.max_order) + " (n=" + to_string(g.order()) + "); use dsatur");
        auto start = std::chrono::steady_clock::now();
        ChromaticResult result;
        auto colouring = ChromaticSearch(g, dsatur(g), greedy_clique_size(g), result.stats).run();
        result.stats.elapsed = std::chrono::steady_clock::now() - start;
        if (! verify_proper_coloring(g, colouring.colour))
            throw std::logic_error("chromatic search returned an improper colouring");
        result.value = colouring.colours;
        result.certificate = std::move(colouring);
        return result;
    }
}
