#include <acp/bounds.hpp>
#include <acp/error.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

using std::size_t;
using std::span;
using std::to_string;
using std::vector;

namespace acp
{
    namespace
    {
        auto ceil_div(long long a, long long b) -> long long
        {
            return (a + b - 1) / b;
        }

        auto evaluate_clique(int size, int d1, int d2) -> int
        {
            return static_cast<int>(ceil_div(d1 + 1, d2 - size + 2));
        }

        auto better(const CliqueBound & candidate, const CliqueBound & incumbent) -> bool
        {
            if (candidate.value != incumbent.value)
                return candidate.value > incumbent.value;
            if (candidate.clique.size() != incumbent.clique.size())
                return candidate.clique.size() > incumbent.clique.size();
            return candidate.clique < incumbent.clique;
        }

        struct CliqueEnumerator
        {
            const Graph & g;
            CliqueBound best;
            vector<Vertex> current;

            auto visit(const vector<Vertex> & candidates, int d1, int d2) -> void
            {
                if (! current.empty()) {
                    CliqueBound here{evaluate_clique(static_cast<int>(current.size()), d1, d2), current};
                    if (best.clique.empty() || better(here, best))
                        best = std::move(here);
                }
                for (size_t i = 0; i < candidates.size(); ++i) {
                    auto v = candidates[i];
                    vector<Vertex> next;
                    for (size_t j = i + 1; j < candidates.size(); ++j)
                        if (g.adjacent(v, candidates[j]))
                            next.push_back(candidates[j]);
                    current.push_back(v);
                    visit(next, std::min(d1, g.degree(v)), std::max(d2, g.degree(v)));
                    current.pop_back();
                }
            }
        };
    }

    auto is_eta_one(const Graph & g) -> bool
    {
        for (auto [u, v] : g.edges())
            if (g.degree(u) == g.degree(v))
                return false;
        return true;
    }

    auto largest_true_twin_class(const Graph & g) -> vector<Vertex>
    {
        vector<Vertex> best;
        for (auto & c : true_twin_classes(g))
            if (c.size() > best.size())
                best = c;
        return best;
    }

    auto twin_lower_bound(const Graph & g) -> int
    {
        return static_cast<int>(largest_true_twin_class(g).size());
    }

    auto clique_lower_bound(const Graph & g, span<const Vertex> clique) -> int
    {
        if (clique.empty())
            throw InputError("clique bound needs a non-empty clique");
        for (auto v : clique)
            if (v < 0 || v >= g.order())
                throw InputError("clique vertex " + to_string(v) + " out of range");
        if (! is_clique(g, clique))
            throw InputError("vertex set is not a clique");
        int d1 = g.order(), d2 = 0;
        for (auto v : clique) {
            d1 = std::min(d1, g.degree(v));
            d2 = std::max(d2, g.degree(v));
        }
        return evaluate_clique(static_cast<int>(clique.size()), d1, d2);
    }

    auto relaxed_clique_lower_bound(const Graph & g, span<const Vertex> clique) -> int
    {
        if (clique.empty())
            throw InputError("clique bound needs a non-empty clique");
        if (! is_clique(g, clique))
            throw InputError("vertex set is not a clique");
        auto q = static_cast<long long>(clique.size());
        return static_cast<int>(ceil_div(q, g.order() - q + 1));
    }

    auto best_clique_lower_bound(const Graph & g, int exhaustive_limit) -> CliqueBound
    {
        if (g.order() == 0)
            return {1, {}};

        if (g.order() <= exhaustive_limit) {
            CliqueEnumerator e{g, {}, {}};
            vector<Vertex> all(static_cast<size_t>(g.order()));
            for (Vertex v = 0; v < g.order(); ++v)
                all[v] = v;
            e.visit(all, g.order(), 0);
            std::sort(e.best.clique.begin(), e.best.clique.end());
            return e.best;
        }

        CliqueBound best;
        for (Vertex start = 0; start < g.order(); ++start) {
            vector<Vertex> clique{start};
            vector<Vertex> candidates(g.neighbours(start).begin(), g.neighbours(start).end());
            int d1 = g.degree(start), d2 = g.degree(start);
            while (true) {
                CliqueBound here{evaluate_clique(static_cast<int>(clique.size()), d1, d2), clique};
                std::sort(here.clique.begin(), here.clique.end());
                if (best.clique.empty() || better(here, best))
                    best = std::move(here);
                if (candidates.empty())
                    break;
                auto pick = *std::max_element(candidates.begin(), candidates.end(),
                    [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a > b); });
                clique.push_back(pick);
                d1 = std::min(d1, g.degree(pick));
                d2 = std::max(d2, g.degree(pick));
                std::erase_if(candidates, [&](Vertex w) { return w == pick || ! g.adjacent(w, pick); });
            }
        }
        return best;
    }

    auto degree_upper_bound(const Graph & g) -> int
    {
        auto delta = g.max_degree();
        if (delta == 0)
            return 1;
        if (delta == 1)
            return 2;
        return delta * delta - delta + 1;
    }

    auto check_split_partition(const Graph & g, const SplitPartition & partition) -> void
    {
        vector<int> seen(static_cast<size_t>(g.order()), 0);
        for (auto part : {&partition.clique, &partition.stable})
            for (auto v : *part) {
                if (v < 0 || v >= g.order())
                    throw InputError("split partition vertex " + to_string(v) + " out of range");
                if (seen[v]++)
                    throw InputError("vertex " + to_string(v) + " appears twice in split partition");
            }
        for (Vertex v = 0; v < g.order(); ++v)
            if (! seen[v])
                throw InputError("vertex " + to_string(v) + " missing from split partition");
        if (! is_clique(g, partition.clique))
            throw InputError("split partition: Q is not a clique");
        if (! is_stable(g, partition.stable))
            throw InputError("split partition: S is not stable");
        for (auto v : partition.stable) {
            bool dominates = std::all_of(partition.clique.begin(), partition.clique.end(), [&](Vertex u) { return g.adjacent(u, v); });
            if (dominates)
                throw InputError("split partition: Q is not maximal (vertex " + to_string(v) + " extends it)");
        }
    }

    auto split_recognize(const Graph & g) -> std::optional<SplitPartition>
    {
        auto n = g.order();
        if (n == 0)
            return SplitPartition{};

        vector<Vertex> by_degree(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            by_degree[v] = v;
        std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

        int m = 0;
        for (int i = 1; i <= n; ++i)
            if (g.degree(by_degree[i - 1]) >= i - 1)
                m = i;
        long long head = 0, tail = 0;
        for (int i = 0; i < n; ++i)
            (i < m ? head : tail) += g.degree(by_degree[i]);
        if (head != static_cast<long long>(m) * (m - 1) + tail)
            return std::nullopt;

        vector<Vertex> base(by_degree.begin(), by_degree.begin() + m);
        std::sort(base.begin(), base.end());

        auto complement_of = [&](const vector<Vertex> & clique) {
            vector<int> in(static_cast<size_t>(n), 0);
            for (auto v : clique)
                in[v] = 1;
            vector<Vertex> rest;
            for (Vertex v = 0; v < n; ++v)
                if (! in[v])
                    rest.push_back(v);
            return rest;
        };

        // Any other maximum clique swaps one vertex of base for a stable vertex seeing all the others.
        auto best = base;
        for (auto s : complement_of(base)) {
            vector<Vertex> missed;
            for (auto u : base)
                if (! g.adjacent(u, s))
                    missed.push_back(u);
            if (missed.size() != 1)
                continue;
            auto candidate = base;
            std::erase(candidate, missed.front());
            candidate.push_back(s);
            std::sort(candidate.begin(), candidate.end());
            auto rest = complement_of(candidate);
            if (is_stable(g, rest) && candidate < best)
                best = std::move(candidate);
        }
        SplitPartition result{best, complement_of(best)};
        check_split_partition(g, result);
        return result;
    }

    auto distinct_degree_subset(const Graph & g, span<const Vertex> clique) -> vector<Vertex>
    {
        vector<Vertex> sorted(clique.begin(), clique.end());
        std::sort(sorted.begin(), sorted.end());
        vector<Vertex> result;
        vector<int> degrees_seen;
        for (auto v : sorted)
            if (std::find(degrees_seen.begin(), degrees_seen.end(), g.degree(v)) == degrees_seen.end()) {
                degrees_seen.push_back(g.degree(v));
                result.push_back(v);
            }
        return result;
    }

    auto split_upper_bound(const Graph & g, const SplitPartition & partition) -> int
    {
        check_split_partition(g, partition);
        if (partition.clique.empty())
            return 1;
        auto t = distinct_degree_subset(g, partition.clique).size();
        return static_cast<int>(partition.clique.size() - t + 1);
    }

    auto split_labeling(const Graph & g, const SplitPartition & partition) -> Labeling
    {
        check_split_partition(g, partition);
        auto top = split_upper_bound(g, partition);
        auto t = distinct_degree_subset(g, partition.clique);
        vector<int> labels(static_cast<size_t>(g.order()), top);
        int next = 1;
        vector<Vertex> clique(partition.clique.begin(), partition.clique.end());
        std::sort(clique.begin(), clique.end());
        for (auto u : clique)
            if (std::find(t.begin(), t.end(), u) == t.end())
                labels[u] = next++;
        return Labeling(std::move(labels));
    }

    auto multipartite_sequence(span<const int> parts) -> vector<int>
    {
        if (parts.empty())
            throw InputError("complete multipartite graph needs at least one part");
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1)
                throw InputError("part sizes must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw InputError("part sizes must be sorted non-increasing");
        }
        auto r = parts.size();
        vector<int> s(r);
        s[r - 1] = parts[r - 1];
        for (size_t i = r - 1; i-- > 0;)
            s[i] = std::max(1 + s[i + 1], parts[i]);
        return s;
    }

    auto multipartite_eta(span<const int> parts) -> int
    {
        auto s = multipartite_sequence(parts);
        long long eta = 0;
        for (size_t i = 0; i < parts.size(); ++i)
            eta = std::max(eta, ceil_div(s[i], parts[i]));
        if (eta > static_cast<long long>(parts.size()))
            throw std::logic_error("multipartite eta exceeds the number of parts");
        return static_cast<int>(eta);
    }

    namespace
    {
        // Complete graphs and cycles; returns 0 when nothing is recognised.
        auto recognised_family_eta(const Graph & g, std::string & name) -> int
        {
            auto n = g.order();
            if (n >= 1 && g.size() == n * (n - 1) / 2) {
                name = "complete K_" + to_string(n);
                return n;
            }
            if (n >= 4 && g.size() == n && g.min_degree() == 2 && g.max_degree() == 2 && is_connected(g)) {
                name = "cycle C_" + to_string(n);
                return n % 2 == 0 ? 2 : 3;
            }
            return 0;
        }
    }

    auto combined_bounds(const Graph & g) -> BoundsReport
    {
        BoundsReport report;
        if (g.size() == 0) {
            report.witnesses.push_back({"edgeless", 1, {}, "no edge to distinguish"});
            return report;
        }
        if (is_eta_one(g)) {
            report.witnesses.push_back({"degree-distinct", 1, {}, "every edge joins vertices of different degree"});
            return report;
        }

        report.eta_lower = 2;
        report.witnesses.push_back({"equal-degree-edge", 2, {}, "some edge joins vertices of equal degree"});
        auto twins = largest_true_twin_class(g);
        if (twins.size() >= 2) {
            report.witnesses.push_back({"true-twins", static_cast<int>(twins.size()), twins, "pairwise true twins need distinct labels"});
            report.eta_lower = std::max(report.eta_lower, static_cast<int>(twins.size()));
        }
        auto clique = best_clique_lower_bound(g);
        report.witnesses.push_back({"clique", clique.value, clique.clique, "ceil((d1+1)/(d2-|Q|+2))"});
        report.eta_lower = std::max(report.eta_lower, clique.value);

        report.eta_upper = degree_upper_bound(g);
        report.witnesses.push_back({"degree", report.eta_upper, {}, "Delta^2-Delta+1 with Delta=" + to_string(g.max_degree())});
        if (auto split = split_recognize(g)) {
            auto b = split_upper_bound(g, *split);
            report.witnesses.push_back({"split", b, split->clique, "|Q|-|T|+1"});
            report.eta_upper = std::min(report.eta_upper, b);
        }
        std::string family;
        if (auto f = recognised_family_eta(g, family)) {
            report.witnesses.push_back({"family", f, {}, family});
            report.eta_upper = std::min(report.eta_upper, f);
        }
        if (report.eta_lower > report.eta_upper)
            throw std::logic_error("inconsistent bounds: lower " + to_string(report.eta_lower) + " > upper " + to_string(report.eta_upper));
        return report;
    }
}
