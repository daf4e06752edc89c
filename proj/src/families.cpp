#include <acp/bounds.hpp>
#include <acp/error.hpp>
#include <acp/families.hpp>
#include <acp/solver.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

using std::size_t;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace acp
{
    namespace
    {
        template <typename... Fs>
        struct Overloaded : Fs...
        {
            using Fs::operator()...;
        };
        template <typename... Fs>
        Overloaded(Fs...) -> Overloaded<Fs...>;

        auto require(bool condition, const string & message) -> void
        {
            if (! condition)
                throw InputError(message);
        }

        auto ceil_div(int a, int b) -> int
        {
            return (a + b - 1) / b;
        }

        auto parse_ints(string_view text, const string & whole) -> vector<int>
        {
            vector<int> values;
            while (true) {
                auto comma = text.find(',');
                auto piece = text.substr(0, comma);
                int value = 0;
                auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
                if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
                    throw FormatError("bad integer '" + string(piece) + "' in family spec '" + whole + "'");
                values.push_back(value);
                if (comma == string_view::npos)
                    break;
                text.remove_prefix(comma + 1);
            }
            return values;
        }

        auto join_csv(const vector<int> & values) -> string
        {
            string out;
            for (size_t i = 0; i < values.size(); ++i)
                out += (i ? "," : "") + to_string(values[i]);
            return out;
        }

        // Renumbers g's vertices: vertex v of g becomes position[v].
        auto edges_between(int offset_a, int count_a, int offset_b, int count_b) -> vector<Edge>
        {
            vector<Edge> edges;
            for (int i = 0; i < count_a; ++i)
                for (int j = 0; j < count_b; ++j)
                    edges.emplace_back(offset_a + i, offset_b + j);
            return edges;
        }

        auto clique_edges(int offset, int count) -> vector<Edge>
        {
            vector<Edge> edges;
            for (int i = 0; i < count; ++i)
                for (int j = i + 1; j < count; ++j)
                    edges.emplace_back(offset + i, offset + j);
            return edges;
        }

        auto sun(int m, bool clique_base, bool hub) -> Graph
        {
            vector<Edge> edges;
            if (clique_base)
                edges = clique_edges(0, m);
            else
                for (int i = 0; i < m; ++i)
                    edges.emplace_back(i, (i + 1) % m);
            for (int i = 0; i < m; ++i) {
                edges.emplace_back(i, m + i);
                edges.emplace_back(i, m + (i + m - 1) % m);
            }
            if (hub)
                for (int i = 0; i < m; ++i)
                    edges.emplace_back(i, 2 * m);
            return Graph(2 * m + (hub ? 1 : 0), edges);
        }

        auto spider(int q, bool thick) -> Graph
        {
            auto edges = clique_edges(0, q);
            for (int i = 0; i < q; ++i)
                for (int j = 0; j < q; ++j)
                    if ((i == j) != thick)
                        edges.emplace_back(i, q + j);
            return Graph(2 * q, edges);
        }

        auto biregular(int a, int b, int du) -> Graph
        {
            vector<Edge> edges;
            for (int i = 0; i < a; ++i)
                for (int t = 0; t < du; ++t)
                    edges.emplace_back(i, a + (i * du + t) % b);
            return Graph(a + b, edges);
        }

        struct Built
        {
            Labeling labeling;
            Provenance provenance;
        };

        auto build(const FamilySpec & spec) -> Built;

        auto solver_labeling(const FamilySpec & spec) -> Labeling
        {
            auto g = generate(spec);
            auto eta = eta_formula(spec);
            auto result = eta_exact(g, eta, eta);
            if (result.status != SolveStatus::solved)
                throw std::logic_error("exact solver found no additive " + to_string(eta) + "-coloring of " + spec_string(spec));
            return result.certificate;
        }

        // Inner labeling, then 1..q on the complete part.
        auto join_labeling(const Labeling & inner, int q) -> Labeling
        {
            vector<int> labels(inner.values().begin(), inner.values().end());
            for (int i = 1; i <= q; ++i)
                labels.push_back(i);
            return Labeling(std::move(labels));
        }

        auto odd_cycle_labeling(int n) -> Labeling
        {
            // f(v_1) = 2, f(v_2) = f(v_4) = f(v_5) = 1, f(v_3) = 3, then 1 on even and 3 on odd indices.
            vector<int> labels(static_cast<size_t>(n));
            for (int i = 1; i <= n; ++i) {
                int l;
                switch (i) {
                    case 1: l = 2; break;
                    case 3: l = 3; break;
                    case 2: case 4: case 5: l = 1; break;
                    default: l = i % 2 == 0 ? 1 : 3; break;
                }
                labels[i - 1] = l;
            }
            return Labeling(std::move(labels));
        }

        // U labeled 2, V labeled 1: f(N(u)) = d(u) < 2 d(v) = f(N(v)).
        auto bipartite_labeling(const Graph & g, const vector<bool> & in_u) -> Labeling
        {
            vector<int> labels(static_cast<size_t>(g.order()));
            for (Vertex v = 0; v < g.order(); ++v)
                labels[v] = in_u[v] ? 2 : 1;
            return Labeling(std::move(labels));
        }

        auto cycle_labeling(int n) -> Labeling
        {
            if (n % 2 == 1)
                return odd_cycle_labeling(n);
            vector<bool> in_u(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                in_u[i] = i % 2 == 0;
            return bipartite_labeling(graphs::cycle(n), in_u);
        }

        auto thin_spider_labeling(int q) -> Labeling
        {
            vector<int> labels(static_cast<size_t>(2 * q));
            auto u = [&](int i) -> int & { return labels[i - 1]; };
            auto v = [&](int i) -> int & { return labels[q + i - 1]; };
            if (q == 2) {
                u(1) = u(2) = v(1) = 1;
                v(2) = 2;
                return Labeling(std::move(labels));
            }
            auto r = ceil_div(q + 1, 2);
            for (int i = 1; i <= r; ++i) {
                u(i) = r - i + 1;
                v(i) = 1;
            }
            for (int i = r + 1; i <= q; ++i) {
                u(i) = q - i + 1;
                v(i) = (q + 1) / 2;
            }
            return Labeling(std::move(labels));
        }

        auto thick_spider_labeling(int q) -> Labeling
        {
            vector<int> labels(static_cast<size_t>(2 * q));
            auto u = [&](int i) -> int & { return labels[i - 1]; };
            auto v = [&](int i) -> int & { return labels[q + i - 1]; };
            if (q == 2) {
                // The order-2 thick spider is the thin one with v_1 and v_2 exchanged.
                u(1) = u(2) = v(2) = 1;
                v(1) = 2;
                return Labeling(std::move(labels));
            }
            auto r = ceil_div(q + 1, 2);
            for (int i = 1; i <= r; ++i) {
                u(i) = i;
                v(i) = 1;
            }
            for (int i = r + 1; i <= q; ++i) {
                u(i) = r;
                v(i) = i - r + 1;
            }
            return Labeling(std::move(labels));
        }

        auto cycle_sun_labels(int m) -> vector<int>
        {
            vector<int> labels(static_cast<size_t>(2 * m), 1);
            for (int i = 1; i <= m; ++i)
                labels[i - 1] = i % 2 == 1 ? 2 : 1;
            if (m % 2 == 1)
                labels[m] = 2; // v_1
            return labels;
        }

        auto wheel_sun_labeling(int m) -> Labeling
        {
            if (m == 5) {
                // u_1..u_5, v_1..v_5, w
                return Labeling{1, 1, 2, 1, 2, 2, 2, 2, 1, 1, 2};
            }
            auto labels = cycle_sun_labels(m);
            labels.push_back(1);
            return Labeling(std::move(labels));
        }

        auto complete_sun_labeling(int m) -> Labeling
        {
            auto r = ceil_div(m + 2, 3);
            auto half = m / 2;
            auto perm = [&](int j) {
                if (j == 1)
                    return 1;
                return j % 2 == 0 ? j / 2 + 1 : m - (j - 3) / 2;
            };
            auto inverse = [&](int i) {
                if (i == 1)
                    return 1;
                return i <= half + 1 ? 2 * (i - 1) : 3 + 2 * (m - i);
            };
            auto pm = perm(m);
            vector<int> labels(static_cast<size_t>(2 * m));
            for (int i = 1; i <= m; ++i) {
                labels[i - 1] = (m % 3 == 2 && i == pm) ? r : inverse(i) / 3 + 1;
                int fv;
                if (i == 1 || i >= half + 2)
                    fv = r + 1 - ceil_div(inverse(i), 3);
                else if (m % 6 == 2 && i == pm)
                    fv = 2;
                else
                    fv = r + 1 - ceil_div(inverse(i) + 2, 3);
                labels[m + i - 1] = fv;
            }
            return Labeling(std::move(labels));
        }

        auto windmill_labeling(int n, int m) -> Labeling
        {
            vector<int> labels;
            for (int c = 0; c < m; ++c)
                for (int i = 1; i <= n - 1; ++i)
                    labels.push_back(i);
            return join_labeling(Labeling(std::move(labels)), 1);
        }

        auto build(const FamilySpec & spec) -> Built
        {
            validate(spec);
            using P = Provenance;
            return std::visit(Overloaded{
                [&](const family::Path &) { return Built{solver_labeling(spec), P::solver_fallback}; },
                [&](const family::Cycle & c) { return Built{cycle_labeling(c.n), P::construction}; },
                [&](const family::Complete & c) {
                    vector<int> labels(static_cast<size_t>(c.n));
                    std::iota(labels.begin(), labels.end(), 1);
                    return Built{Labeling(std::move(labels)), P::construction};
                },
                [&](const family::CompleteSplit &) {
                    auto g = generate(spec);
                    auto split = split_recognize(g);
                    if (! split)
                        throw std::logic_error("complete split not recognised as split");
                    return Built{split_labeling(g, *split), P::construction};
                },
                [&](const family::Fan & f) {
                    return Built{join_labeling(solver_labeling(FamilySpec{family::Path{f.n + 1}}), 1), P::solver_fallback};
                },
                [&](const family::Wheel & w) { return Built{join_labeling(cycle_labeling(w.n), 1), P::construction}; },
                [&](const family::Windmill & w) { return Built{windmill_labeling(w.n, w.m), P::construction}; },
                [&](const family::ThinSpider & s) { return Built{thin_spider_labeling(s.q), P::construction}; },
                [&](const family::ThickSpider & s) { return Built{thick_spider_labeling(s.q), P::construction}; },
                [&](const family::CycleSun & s) { return Built{Labeling(cycle_sun_labels(s.m)), P::construction}; },
                [&](const family::WheelSun & s) { return Built{wheel_sun_labeling(s.m), P::construction}; },
                [&](const family::CompleteSun & s) { return Built{complete_sun_labeling(s.m), P::construction}; },
                [&](const family::CompleteMultipartite &) { return Built{solver_labeling(spec), P::solver_fallback}; },
                [&](const family::Biregular & b) {
                    auto g = generate(spec);
                    if (b.du != b.a * b.du / b.b)
                        return Built{Labeling(vector<int>(static_cast<size_t>(g.order()), 1)), P::construction};
                    vector<bool> in_u(static_cast<size_t>(g.order()), false);
                    for (int i = 0; i < b.a; ++i)
                        in_u[i] = true;
                    return Built{bipartite_labeling(g, in_u), P::construction};
                },
                [&](const family::JoinWithComplete & j) {
                    auto inner = build(*j.inner);
                    return Built{join_labeling(inner.labeling, j.q), inner.provenance};
                },
            }, spec.kind);
        }

        auto witness_for(const FamilySpec & spec) -> string
        {
            return std::visit(Overloaded{
                [](const family::Path & p) -> string { return p.n == 3 || p.n == 1 ? "degree-distinct edges" : "edge with equal end degrees"; },
                [](const family::Cycle & c) -> string { return c.n % 2 ? "odd cycle admits no additive 2-coloring" : "regular graph with an edge"; },
                [](const family::Complete &) -> string { return "true twins: all vertices"; },
                [](const family::CompleteSplit &) -> string { return "true twins: the clique"; },
                [](const family::Fan &) -> string { return "edge with equal end degrees"; },
                [](const family::Wheel & w) -> string { return w.n % 2 ? "inner odd cycle" : "edge with equal end degrees"; },
                [](const family::Windmill &) -> string { return "true twins: one blade minus the hub"; },
                [](const family::ThinSpider &) -> string { return "clique bound on the spider clique"; },
                [](const family::ThickSpider & s) -> string { return s.q == 2 ? "edge with equal end degrees" : "pigeonhole on clique neighbourhood sums"; },
                [](const family::CycleSun &) -> string { return "edge with equal end degrees"; },
                [](const family::WheelSun &) -> string { return "edge with equal end degrees"; },
                [](const family::CompleteSun &) -> string { return "clique bound on the sun clique"; },
                [](const family::CompleteMultipartite &) -> string { return "monotone orientation recursion"; },
                [](const family::Biregular & b) -> string { return b.a == b.b ? "regular graph with an edge" : "degree-distinct edges"; },
                [](const family::JoinWithComplete &) -> string { return "true twins in K_q, inner eta"; },
            }, spec.kind);
        }
    }

    auto name_of(Provenance p) -> const char *
    {
        return p == Provenance::construction ? "construction" : "solver-fallback";
    }

    auto parse_family_spec(string_view text) -> FamilySpec
    {
        string whole(text);
        auto colon = text.find(':');
        if (colon == string_view::npos)
            throw FormatError("family spec '" + whole + "' must look like name:params");
        auto name = text.substr(0, colon);
        auto rest = text.substr(colon + 1);

        if (name == "join") {
            auto second = rest.find(':');
            if (second == string_view::npos)
                throw FormatError("join spec '" + whole + "' must look like join:q:inner");
            auto q = parse_ints(rest.substr(0, second), whole);
            if (q.size() != 1)
                throw FormatError("join spec '" + whole + "' needs a single q");
            auto inner = std::make_shared<const FamilySpec>(parse_family_spec(rest.substr(second + 1)));
            FamilySpec spec{family::JoinWithComplete{inner, q.front()}};
            validate(spec);
            return spec;
        }

        auto p = parse_ints(rest, whole);
        auto arity = [&](size_t n) {
            if (p.size() != n)
                throw FormatError("family '" + string(name) + "' takes " + to_string(n) + " parameter(s) in '" + whole + "'");
        };
        FamilySpec spec;
        if (name == "path") { arity(1); spec.kind = family::Path{p[0]}; }
        else if (name == "cycle") { arity(1); spec.kind = family::Cycle{p[0]}; }
        else if (name == "complete") { arity(1); spec.kind = family::Complete{p[0]}; }
        else if (name == "complete-split") { arity(2); spec.kind = family::CompleteSplit{p[0], p[1]}; }
        else if (name == "fan") { arity(1); spec.kind = family::Fan{p[0]}; }
        else if (name == "wheel") { arity(1); spec.kind = family::Wheel{p[0]}; }
        else if (name == "windmill") { arity(2); spec.kind = family::Windmill{p[0], p[1]}; }
        else if (name == "thin-spider") { arity(1); spec.kind = family::ThinSpider{p[0]}; }
        else if (name == "thick-spider") { arity(1); spec.kind = family::ThickSpider{p[0]}; }
        else if (name == "cycle-sun") { arity(1); spec.kind = family::CycleSun{p[0]}; }
        else if (name == "wheel-sun") { arity(1); spec.kind = family::WheelSun{p[0]}; }
        else if (name == "complete-sun") { arity(1); spec.kind = family::CompleteSun{p[0]}; }
        else if (name == "multipartite") { spec.kind = family::CompleteMultipartite{p}; }
        else if (name == "bipartite") { arity(3); spec.kind = family::Biregular{p[0], p[1], p[2]}; }
        else
            throw FormatError("unknown family '" + string(name) + "'");
        validate(spec);
        return spec;
    }

    auto spec_string(const FamilySpec & spec) -> string
    {
        return std::visit(Overloaded{
            [](const family::Path & f) { return "path:" + std::to_string(f.n); },
            [](const family::Cycle & f) { return "cycle:" + std::to_string(f.n); },
            [](const family::Complete & f) { return "complete:" + std::to_string(f.n); },
            [](const family::CompleteSplit & f) { return "complete-split:" + std::to_string(f.clique) + "," + std::to_string(f.stable); },
            [](const family::Fan & f) { return "fan:" + std::to_string(f.n); },
            [](const family::Wheel & f) { return "wheel:" + std::to_string(f.n); },
            [](const family::Windmill & f) { return "windmill:" + std::to_string(f.n) + "," + std::to_string(f.m); },
            [](const family::ThinSpider & f) { return "thin-spider:" + std::to_string(f.q); },
            [](const family::ThickSpider & f) { return "thick-spider:" + std::to_string(f.q); },
            [](const family::CycleSun & f) { return "cycle-sun:" + std::to_string(f.m); },
            [](const family::WheelSun & f) { return "wheel-sun:" + std::to_string(f.m); },
            [](const family::CompleteSun & f) { return "complete-sun:" + std::to_string(f.m); },
            [](const family::CompleteMultipartite & f) { return "multipartite:" + join_csv(f.parts); },
            [](const family::Biregular & f) { return "bipartite:" + join_csv({f.a, f.b, f.du}); },
            [](const family::JoinWithComplete & f) { return "join:" + std::to_string(f.q) + ":" + spec_string(*f.inner); },
        }, spec.kind);
    }

    auto validate(const FamilySpec & spec) -> void
    {
        std::visit(Overloaded{
            [](const family::Path & f) { require(f.n >= 1, "path needs n >= 1"); },
            [](const family::Cycle & f) { require(f.n >= 4, "cycle needs n >= 4"); },
            [](const family::Complete & f) { require(f.n >= 1, "complete graph needs n >= 1"); },
            [](const family::CompleteSplit & f) { require(f.clique >= 1 && f.stable >= 2, "complete split needs |Q'| >= 1 and |S'| >= 2"); },
            [](const family::Fan & f) { require(f.n >= 3, "fan needs n >= 3"); },
            [](const family::Wheel & f) { require(f.n >= 4, "wheel needs n >= 4"); },
            [](const family::Windmill & f) { require(f.n >= 3 && f.m >= 2, "windmill needs n >= 3 and m >= 2"); },
            [](const family::ThinSpider & f) { require(f.q >= 2, "spider needs q >= 2"); },
            [](const family::ThickSpider & f) { require(f.q >= 2, "spider needs q >= 2"); },
            [](const family::CycleSun & f) { require(f.m >= 4, "cycle sun needs m >= 4"); },
            [](const family::WheelSun & f) { require(f.m >= 4, "wheel sun needs m >= 4"); },
            [](const family::CompleteSun & f) { require(f.m >= 3, "complete sun needs m >= 3"); },
            [](const family::CompleteMultipartite & f) {
                require(! f.parts.empty(), "multipartite needs at least one part");
                for (size_t i = 0; i < f.parts.size(); ++i) {
                    require(f.parts[i] >= 1, "multipartite part sizes must be positive");
                    require(i == 0 || f.parts[i] <= f.parts[i - 1], "multipartite part sizes must be sorted non-increasing");
                }
            },
            [](const family::Biregular & f) {
                require(f.a >= 1 && f.b >= 1 && f.du >= 1 && f.du <= f.b, "bipartite needs a, b >= 1 and 1 <= du <= b");
                require((f.a * f.du) % f.b == 0, "bipartite needs b to divide a * du");
                auto dv = f.a * f.du / f.b;
                require(f.du < 2 * dv, "bipartite needs du < 2 dv");
            },
            [](const family::JoinWithComplete & f) {
                require(f.inner != nullptr, "join needs an inner family");
                validate(*f.inner);
                auto g = generate(*f.inner);
                require(f.q >= 1 && f.q <= g.order() - g.max_degree() - 1,
                    "join with K_q needs 1 <= q <= n - Delta - 1 = " + std::to_string(g.order() - g.max_degree() - 1));
            },
        }, spec.kind);
    }

    auto family_order(const FamilySpec & spec) -> int
    {
        return std::visit(Overloaded{
            [](const family::Path & f) { return f.n; },
            [](const family::Cycle & f) { return f.n; },
            [](const family::Complete & f) { return f.n; },
            [](const family::CompleteSplit & f) { return f.clique + f.stable; },
            [](const family::Fan & f) { return f.n + 2; },
            [](const family::Wheel & f) { return f.n + 1; },
            [](const family::Windmill & f) { return f.m * (f.n - 1) + 1; },
            [](const family::ThinSpider & f) { return 2 * f.q; },
            [](const family::ThickSpider & f) { return 2 * f.q; },
            [](const family::CycleSun & f) { return 2 * f.m; },
            [](const family::WheelSun & f) { return 2 * f.m + 1; },
            [](const family::CompleteSun & f) { return 2 * f.m; },
            [](const family::CompleteMultipartite & f) { return std::accumulate(f.parts.begin(), f.parts.end(), 0); },
            [](const family::Biregular & f) { return f.a + f.b; },
            [](const family::JoinWithComplete & f) { return family_order(*f.inner) + f.q; },
        }, spec.kind);
    }

    auto generate(const FamilySpec & spec) -> Graph
    {
        validate(spec);
        return std::visit(Overloaded{
            [](const family::Path & f) { return graphs::path(f.n); },
            [](const family::Cycle & f) { return graphs::cycle(f.n); },
            [](const family::Complete & f) { return graphs::complete(f.n); },
            [](const family::CompleteSplit & f) { return join(graphs::complete(f.clique), Graph(f.stable)); },
            [](const family::Fan & f) { return join(graphs::path(f.n + 1), graphs::complete(1)); },
            [](const family::Wheel & f) { return join(graphs::cycle(f.n), graphs::complete(1)); },
            [](const family::Windmill & f) {
                vector<Edge> edges;
                for (int c = 0; c < f.m; ++c) {
                    auto blade = clique_edges(c * (f.n - 1), f.n - 1);
                    edges.insert(edges.end(), blade.begin(), blade.end());
                }
                return join(Graph(f.m * (f.n - 1), edges), graphs::complete(1));
            },
            [](const family::ThinSpider & f) { return spider(f.q, false); },
            [](const family::ThickSpider & f) { return spider(f.q, true); },
            [](const family::CycleSun & f) { return sun(f.m, false, false); },
            [](const family::WheelSun & f) { return sun(f.m, false, true); },
            [](const family::CompleteSun & f) { return sun(f.m, true, false); },
            [](const family::CompleteMultipartite & f) {
                vector<Edge> edges;
                int offset_a = 0;
                for (size_t i = 0; i < f.parts.size(); ++i) {
                    int offset_b = offset_a + f.parts[i];
                    for (size_t j = i + 1; j < f.parts.size(); ++j) {
                        auto cross = edges_between(offset_a, f.parts[i], offset_b, f.parts[j]);
                        edges.insert(edges.end(), cross.begin(), cross.end());
                        offset_b += f.parts[j];
                    }
                    offset_a += f.parts[i];
                }
                return Graph(offset_a, edges);
            },
            [](const family::Biregular & f) { return biregular(f.a, f.b, f.du); },
            [](const family::JoinWithComplete & f) { return join(generate(*f.inner), graphs::complete(f.q)); },
        }, spec.kind);
    }

    auto eta_of_join_with_complete(int inner_eta, int inner_n, int inner_max_degree, int q) -> int
    {
        if (q < 1 || q > inner_n - inner_max_degree - 1)
            throw PreconditionError("eta(G v K_q) = max(eta(G), q) needs 1 <= q <= n - Delta - 1 = " + to_string(inner_n - inner_max_degree - 1)
                + ", got q=" + to_string(q));
        return std::max(inner_eta, q);
    }

    auto eta_formula(const FamilySpec & spec) -> int
    {
        validate(spec);
        return std::visit(Overloaded{
            [](const family::Path & f) { return f.n == 1 || f.n == 3 ? 1 : 2; },
            [](const family::Cycle & f) { return f.n % 2 == 0 ? 2 : 3; },
            [](const family::Complete & f) { return f.n; },
            [](const family::CompleteSplit & f) { return f.clique; },
            [](const family::Fan &) { return 2; },
            [](const family::Wheel & f) { return f.n % 2 == 0 ? 2 : 3; },
            [](const family::Windmill & f) { return f.n - 1; },
            [](const family::ThinSpider & f) { return ceil_div(f.q + 1, 2); },
            [](const family::ThickSpider & f) { return ceil_div(f.q + 1, 2); },
            [](const family::CycleSun &) { return 2; },
            [](const family::WheelSun &) { return 2; },
            [](const family::CompleteSun & f) { return ceil_div(f.m + 2, 3); },
            [](const family::CompleteMultipartite & f) { return multipartite_eta(f.parts); },
            [](const family::Biregular & f) { return f.du == f.a * f.du / f.b ? 2 : 1; },
            [](const family::JoinWithComplete & f) {
                auto g = generate(*f.inner);
                return eta_of_join_with_complete(eta_formula(*f.inner), g.order(), g.max_degree(), f.q);
            },
        }, spec.kind);
    }

    auto construct_labeling(const FamilySpec & spec) -> Labeling
    {
        auto built = build(spec);
        auto g = generate(spec);
        auto eta = eta_formula(spec);
        if (built.labeling.size() != g.order() || ! verify_additive_coloring(g, built.labeling) || built.labeling.k() != eta)
            throw std::logic_error("labeling for " + spec_string(spec) + " failed verification (k=" + std::to_string(built.labeling.k())
                + ", eta=" + std::to_string(eta) + ")");
        return built.labeling;
    }

    auto certify(const FamilySpec & spec) -> EtaCertificate
    {
        auto built = build(spec);
        EtaCertificate cert{spec, eta_formula(spec), std::nullopt, built.provenance, witness_for(spec)};
        auto g = generate(spec);
        if (! verify_additive_coloring(g, built.labeling) || built.labeling.k() != cert.eta)
            throw std::logic_error("labeling for " + spec_string(spec) + " failed verification");
        cert.labeling = std::move(built.labeling);
        return cert;
    }
}
