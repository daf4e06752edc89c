#include <acp/error.hpp>
#include <acp/milp.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace acp
{
    namespace
    {
        constexpr long long unbounded = std::numeric_limits<long long>::max();

        auto label_name(Vertex v) -> string
        {
            return "f_v" + to_string(v + 1);
        }

        auto z_name(Vertex u, Vertex v) -> string
        {
            return "z_" + to_string(u + 1) + "_" + to_string(v + 1);
        }

        auto mentions(const Constraint & c, const vector<bool> & eliminated) -> bool
        {
            return std::any_of(c.terms.begin(), c.terms.end(), [&](const Term & t) { return eliminated[t.variable]; });
        }
    }

    auto MilpModel::z_index(Vertex u, Vertex v) const -> std::optional<int>
    {
        auto it = z_lookup.find(static_cast<long long>(u) * vertex_count + v);
        if (it == z_lookup.end())
            return std::nullopt;
        return it->second;
    }

    auto MilpModel::active_variable_count(VariableKind kind) const -> int
    {
        int count = 0;
        for (size_t i = 0; i < variables.size(); ++i)
            if (! eliminated[i] && variables[i].kind == kind)
                ++count;
        return count;
    }

    auto MilpModel::count_constraints_with_prefix(std::string_view prefix) const -> int
    {
        return static_cast<int>(std::count_if(constraints.begin(), constraints.end(),
            [&](const Constraint & c) { return c.name.starts_with(prefix); }));
    }

    auto big_m(const Graph & g, Vertex u, Vertex v, long long upper_bound) -> long long
    {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || ! g.adjacent(u, v))
            throw InputError("big-M is defined on edges only, (" + to_string(u) + "," + to_string(v) + ") is not one");
        auto only_u = static_cast<long long>(g.row(u).count_difference(g.row(v)));
        auto only_v = static_cast<long long>(g.row(v).count_difference(g.row(u)));
        return 1 + only_u * upper_bound - only_v;
    }

    auto build_model(const Graph & g, long long upper_bound, MilpOptions options) -> MilpModel
    {
        if (upper_bound < 1)
            throw InputError("the label upper bound must be at least 1, got " + to_string(upper_bound));
        if (g.size() == 0)
            throw InputError("the formulation needs a graph with at least one edge");

        MilpModel model;
        model.vertex_count = g.order();
        model.upper_bound = upper_bound;
        model.variables.push_back({"k", VariableKind::integer, 1, unbounded});
        for (Vertex v = 0; v < g.order(); ++v)
            model.variables.push_back({label_name(v), VariableKind::integer, 1, upper_bound});
        for (auto [u, v] : g.edges())
            for (auto [a, b] : {Edge{u, v}, Edge{v, u}}) {
                model.z_slots.push_back({{a, b}, static_cast<int>(model.variables.size())});
                model.z_lookup[static_cast<long long>(a) * g.order() + b] = static_cast<int>(model.variables.size());
                model.variables.push_back({z_name(a, b), VariableKind::binary, 0, 1});
            }
        model.eliminated.assign(model.variables.size(), false);
        model.objective = {{model.k_index(), 1}};

        for (auto & [e, z] : model.z_slots) {
            auto [u, v] = e;
            Constraint row{"c_" + z_name(u, v), {}, Relation::less_equal, 0};
            for (auto x : g.neighbours(u))
                if (! g.adjacent(v, x))
                    row.terms.push_back({model.label_index(x), 1});
            for (auto y : g.neighbours(v))
                if (! g.adjacent(u, y))
                    row.terms.push_back({model.label_index(y), -1});
            auto m = big_m(g, u, v, upper_bound);
            row.terms.push_back({z, m});
            row.rhs = m - 1;
            model.constraints.push_back(std::move(row));
        }
        for (auto [u, v] : g.edges())
            model.constraints.push_back({"p_" + to_string(u + 1) + "_" + to_string(v + 1),
                {{*model.z_index(u, v), 1}, {*model.z_index(v, u), 1}}, Relation::equal, 1});
        for (Vertex v = 0; v < g.order(); ++v)
            model.constraints.push_back({"l_" + to_string(v + 1), {{model.label_index(v), 1}, {model.k_index(), -1}}, Relation::less_equal, 0});

        if (options.valid_inequalities)
            add_valid_inequalities(model, g);
        if (options.twin_symmetry)
            add_twin_symmetry_breaking(model, g, twin_refined_partition(g));
        return model;
    }

    auto add_valid_inequalities(MilpModel & model, const Graph & g) -> int
    {
        int added = 0;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = 0; v < g.order(); ++v) {
                if (u == v || g.adjacent(u, v))
                    continue;
                if (! g.row(u).is_subset_of(g.row(v)) || g.row(u) == g.row(v))
                    continue;
                for (auto w : g.neighbours(u)) {
                    auto vw = model.z_index(v, w), wu = model.z_index(w, u);
                    if (! vw || ! wu || model.eliminated[*vw] || model.eliminated[*wu])
                        continue;
                    model.constraints.push_back({"v_" + to_string(u + 1) + "_" + to_string(v + 1) + "_" + to_string(w + 1),
                        {{*vw, 1}, {*wu, 1}}, Relation::less_equal, 1});
                    ++added;
                }
            }
        return added;
    }

    auto add_twin_symmetry_breaking(MilpModel & model, const Graph & g, const TwinPartition & partition) -> SymmetrySummary
    {
        check_twin_partition(g, partition);
        if (model.vertex_count != g.order())
            throw InputError("model and graph disagree on the vertex count");

        SymmetrySummary summary;
        auto eliminate = [&](Vertex a, Vertex b) {
            auto z = model.z_index(a, b);
            if (z && ! model.eliminated[*z]) {
                model.eliminated[*z] = true;
                ++summary.eliminated_variables;
            }
        };

        for (auto & c : partition.classes) {
            if (c.kind == TwinKind::singleton)
                continue;
            auto & vs = c.vertices;
            auto gap = c.kind == TwinKind::true_twins ? -1 : 0;
            for (size_t i = 0; i + 1 < vs.size(); ++i) {
                model.constraints.push_back({"s_" + to_string(vs[i] + 1) + "_" + to_string(vs[i + 1] + 1),
                    {{model.label_index(vs[i]), 1}, {model.label_index(vs[i + 1]), -1}}, Relation::less_equal, gap});
                ++summary.chain_rows;
            }
            if (c.kind == TwinKind::false_twins) {
                for (size_t i = 1; i < vs.size(); ++i)
                    for (auto u : g.neighbours(vs.front())) {
                        eliminate(u, vs[i]);
                        eliminate(vs[i], u);
                    }
            }
            else {
                for (size_t i = 1; i < vs.size(); ++i)
                    for (size_t j = 1; j < vs.size(); ++j)
                        if (i != j)
                            eliminate(vs[i], vs[j]);
            }
        }

        auto before = model.constraints.size();
        std::erase_if(model.constraints, [&](const Constraint & c) { return mentions(c, model.eliminated); });
        summary.removed_rows = static_cast<int>(before - model.constraints.size());
        return summary;
    }

    namespace
    {
        class LineWrapper
        {
        public:
            explicit LineWrapper(std::ostringstream & out) : _out(out) {}

            auto put(const string & token) -> void
            {
                if (_width > 0 && _width + token.size() + 1 > 200) {
                    _out << "\n   ";
                    _width = 3;
                }
                _out << ' ' << token;
                _width += token.size() + 1;
            }

            auto reset(size_t width) -> void { _width = width; }

        private:
            std::ostringstream & _out;
            size_t _width = 0;
        };

        auto write_terms(LineWrapper & w, const MilpModel & model, const vector<Term> & terms) -> void
        {
            bool first = true;
            for (auto & t : terms) {
                auto magnitude = t.coefficient < 0 ? -t.coefficient : t.coefficient;
                string sign = t.coefficient < 0 ? "-" : (first ? "" : "+");
                string token = sign;
                if (! token.empty())
                    token += ' ';
                if (magnitude != 1)
                    token += to_string(magnitude) + ' ';
                token += model.variables[t.variable].name;
                w.put(token);
                first = false;
            }
        }
    }

    auto write_lp(const MilpModel & model) -> string
    {
        std::ostringstream out;
        LineWrapper w(out);
        out << "\\ additive coloring model: " << model.vertex_count << " vertices, UB = " << model.upper_bound << "\n";
        out << "Minimize\n obj:";
        w.reset(5);
        write_terms(w, model, model.objective);
        out << "\nSubject To\n";
        for (auto & c : model.constraints) {
            out << ' ' << c.name << ':';
            w.reset(c.name.size() + 2);
            write_terms(w, model, c.terms);
            auto op = c.relation == Relation::less_equal ? "<=" : c.relation == Relation::equal ? "=" : ">=";
            w.put(string(op) + ' ' + to_string(c.rhs));
            out << '\n';
        }
        out << "Bounds\n";
        for (size_t i = 0; i < model.variables.size(); ++i) {
            auto & v = model.variables[i];
            if (model.eliminated[i] || v.kind == VariableKind::binary)
                continue;
            if (v.upper == unbounded)
                out << ' ' << v.name << " >= " << v.lower << '\n';
            else
                out << ' ' << v.lower << " <= " << v.name << " <= " << v.upper << '\n';
        }
        for (auto [section, kind] : {std::pair{"Generals", VariableKind::integer}, std::pair{"Binaries", VariableKind::binary}}) {
            out << section << '\n';
            w.reset(0);
            bool any = false;
            for (size_t i = 0; i < model.variables.size(); ++i)
                if (! model.eliminated[i] && model.variables[i].kind == kind) {
                    w.put(model.variables[i].name);
                    any = true;
                }
            if (any)
                out << '\n';
        }
        out << "End\n";
        return out.str();
    }

    auto is_feasible(const MilpModel & model, std::span<const long long> values) -> bool
    {
        if (values.size() != model.variables.size())
            throw InputError("assignment has " + to_string(values.size()) + " values, model has " + to_string(model.variables.size()) + " variables");
        for (size_t i = 0; i < values.size(); ++i) {
            if (model.eliminated[i])
                continue;
            auto & v = model.variables[i];
            if (values[i] < v.lower || values[i] > v.upper)
                return false;
        }
        for (auto & c : model.constraints) {
            long long lhs = 0;
            for (auto & t : c.terms)
                lhs += t.coefficient * values[t.variable];
            bool ok = c.relation == Relation::less_equal ? lhs <= c.rhs : c.relation == Relation::equal ? lhs == c.rhs : lhs >= c.rhs;
            if (! ok)
                return false;
        }
        return true;
    }
}
