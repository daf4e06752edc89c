#pragma once

#include <acp/graph.hpp>

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace acp
{
    enum class VariableKind
    {
        integer,
        binary
    };

    enum class Relation
    {
        less_equal,
        equal,
        greater_equal
    };

    struct Variable
    {
        std::string name;
        VariableKind kind;
        long long lower;
        long long upper;
    };

    struct Term
    {
        int variable;
        long long coefficient;
    };

    struct Constraint
    {
        std::string name;
        std::vector<Term> terms;
        Relation relation;
        long long rhs;
    };

    /// Integer program for the additive coloring problem over a fixed graph.
    ///
    /// Variable layout: 0 is k, 1..n are f(v) for v = 0..n-1, then one binary z(u,v) per
    /// ordered edge, listed per edge (u < v) as z(u,v), z(v,u). Eliminated variables keep
    /// their slot but no surviving constraint refers to them.
    struct MilpModel
    {
        int vertex_count = 0;
        long long upper_bound = 0;
        std::vector<Variable> variables;
        std::vector<Term> objective; // minimized
        std::vector<Constraint> constraints;
        std::vector<bool> eliminated;

        auto k_index() const -> int { return 0; }
        auto label_index(Vertex v) const -> int { return 1 + v; }

        /// Index of z(u,v), or nullopt if (u,v) is not an edge.
        auto z_index(Vertex u, Vertex v) const -> std::optional<int>;

        auto active_variable_count(VariableKind kind) const -> int;
        auto count_constraints_with_prefix(std::string_view prefix) const -> int;

        std::vector<std::pair<Edge, int>> z_slots; // (ordered edge, variable index), build order
        std::unordered_map<long long, int> z_lookup; // u * n + v -> variable index
    };

    struct MilpOptions
    {
        bool valid_inequalities = false;
        bool twin_symmetry = false;
    };

    /// 1 + |N(u) \ N(v)| * UB - |N(v) \ N(u)|. Throws InputError unless (u,v) is an edge.
    auto big_m(const Graph & g, Vertex u, Vertex v, long long upper_bound) -> long long;

    /// Base formulation: per ordered edge a big-M row "c_z_u_v", per edge a pairing row
    /// "p_u_v", per vertex a link row "l_v" (f(v) <= k); then the requested extensions.
    /// Throws InputError if upper_bound < 1 or g has no edge.
    auto build_model(const Graph & g, long long upper_bound, MilpOptions options = {}) -> MilpModel;

    /// z(v,w) + z(w,u) <= 1 for u, v non-adjacent, w in N(u) and N(u) a proper subset of N(v).
    /// Returns the number of rows added.
    auto add_valid_inequalities(MilpModel & model, const Graph & g) -> int;

    struct SymmetrySummary
    {
        int chain_rows = 0;
        int eliminated_variables = 0;
        int removed_rows = 0;
    };

    /// Chains f(v_i) <= f(v_{i+1}) on false-twin classes and f(v_i) <= f(v_{i+1}) - 1 on
    /// true-twin classes, then eliminates z(u,v_i), z(v_i,u) (false twins, i >= 2, u in N(v_1))
    /// and z(v_i,v_j) (true twins, i, j >= 2) together with every row mentioning them.
    /// Throws InputError if the partition does not match g.
    auto add_twin_symmetry_breaking(MilpModel & model, const Graph & g, const TwinPartition & partition) -> SymmetrySummary;

    /// CPLEX LP text: Minimize / Subject To / Bounds / Generals / Binaries / End.
    /// Names are 1-based ("f_v1", "z_1_2"); rows in build order, variables by index.
    auto write_lp(const MilpModel & model) -> std::string;

    /// True iff the full assignment (indexed like model.variables; eliminated slots ignored)
    /// satisfies every bound and every constraint.
    auto is_feasible(const MilpModel & model, std::span<const long long> values) -> bool;
}
