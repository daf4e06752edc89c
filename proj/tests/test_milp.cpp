#include "support.hpp"

#include <acp/bounds.hpp>
#include <acp/error.hpp>
#include <acp/milp.hpp>
#include <acp/solver.hpp>

#include <doctest.h>

using namespace acp;
using namespace acp_test;

namespace
{
    auto find_row(const MilpModel & m, const std::string & name) -> const Constraint *
    {
        for (auto & c : m.constraints)
            if (c.name == name)
                return &c;
        return nullptr;
    }
}

TEST_CASE("big-M values")
{
    auto p3 = graphs::path(3);
    CHECK(big_m(p3, 0, 1, 2) == 1);
    CHECK(big_m(graphs::complete(2), 0, 1, 2) == 2);
    // Adjacent vertices never share an open neighbourhood; literally N(0)\N(1) = {1}, N(1)\N(0) = {0}.
    CHECK(big_m(graphs::complete(3), 0, 1, 5) == 5);
    CHECK_THROWS_AS(big_m(p3, 0, 2, 2), InputError);
    CHECK_THROWS_AS(big_m(p3, 0, 7, 2), InputError);
}

TEST_CASE("enumeration oracle on a hand-written model")
{
    // min k s.t. f1 - f2 >= 1, f <= k, 1 <= f <= 3: optimum 2.
    MilpModel m;
    m.vertex_count = 2;
    m.upper_bound = 3;
    m.variables = {{"k", VariableKind::integer, 1, 1LL << 40}, {"a", VariableKind::integer, 1, 3}, {"b", VariableKind::integer, 1, 3}};
    m.eliminated.assign(3, false);
    m.objective = {{0, 1}};
    m.constraints = {{"d", {{1, 1}, {2, -1}}, Relation::greater_equal, 1}, {"l1", {{1, 1}, {0, -1}}, Relation::less_equal, 0},
        {"l2", {{2, 1}, {0, -1}}, Relation::less_equal, 0}};
    CHECK(enumerate_optimum(m) == 2);
    m.constraints[0].rhs = 3;
    CHECK_FALSE(enumerate_optimum(m));
}

TEST_CASE("base model structure for K_2")
{
    auto m = build_model(graphs::complete(2), 2);
    CHECK(m.active_variable_count(VariableKind::integer) == 3);
    CHECK(m.active_variable_count(VariableKind::binary) == 2);
    CHECK(m.count_constraints_with_prefix("c_z_") == 2);
    CHECK(m.count_constraints_with_prefix("p_") == 1);
    CHECK(m.count_constraints_with_prefix("l_") == 2);
    CHECK(m.constraints.size() == 5);
    CHECK(enumerate_optimum(m) == 2);

    auto row = find_row(m, "c_z_1_2");
    REQUIRE(row);
    CHECK(row->rhs == 1);
    CHECK(row->relation == Relation::less_equal);
}

TEST_CASE("base model optimum on small graphs")
{
    CHECK(enumerate_optimum(build_model(graphs::cycle(5), 3)) == 3);
    CHECK(enumerate_optimum(build_model(graphs::path(3), 2)) == 1);
    CHECK_THROWS_AS(build_model(graphs::path(3), 0), InputError);
    CHECK_THROWS_AS(build_model(Graph(3), 2), InputError);
}

TEST_CASE("model size formulas")
{
    auto g = graphs::petersen();
    auto m = build_model(g, 3);
    CHECK(m.active_variable_count(VariableKind::integer) == g.order() + 1);
    CHECK(m.active_variable_count(VariableKind::binary) == 2 * g.size());
    CHECK(m.count_constraints_with_prefix("c_z_") == 2 * g.size());
    CHECK(m.count_constraints_with_prefix("p_") == g.size());
    CHECK(m.count_constraints_with_prefix("l_") == g.order());
}

TEST_CASE("valid inequalities")
{
    auto star = build_model(graphs::star(3), 2);
    CHECK(add_valid_inequalities(star, graphs::star(3)) == 0);

    auto p4 = graphs::path(4);
    auto m = build_model(p4, 2);
    // (u, v, w) = (0, 2, 1) and (3, 1, 2)
    CHECK(add_valid_inequalities(m, p4) == 2);
    CHECK(find_row(m, "v_1_3_2"));
    CHECK(find_row(m, "v_4_2_3"));

    auto k5 = build_model(graphs::complete(5), 5);
    CHECK(add_valid_inequalities(k5, graphs::complete(5)) == 0);
}

TEST_CASE("twin symmetry breaking")
{
    auto k3 = graphs::complete(3);
    auto m = build_model(k3, 3);
    auto s = add_twin_symmetry_breaking(m, k3, twin_refined_partition(k3));
    CHECK(s.chain_rows == 2);
    CHECK(s.eliminated_variables == 2);
    CHECK(s.removed_rows == 3); // both big-M rows and the pairing row of {v2, v3}
    auto chain = find_row(m, "s_1_2");
    REQUIRE(chain);
    CHECK(chain->rhs == -1);
    CHECK(find_row(m, "s_2_3"));
    CHECK_FALSE(find_row(m, "c_z_2_3"));
    CHECK_FALSE(find_row(m, "p_2_3"));
    CHECK(enumerate_optimum(m) == 3);

    auto star = graphs::star(3);
    auto ms = build_model(star, 2);
    auto ss = add_twin_symmetry_breaking(ms, star, twin_refined_partition(star));
    CHECK(ss.chain_rows == 2);
    CHECK(ss.eliminated_variables == 4);
    CHECK(ss.removed_rows == 6);
    CHECK(find_row(ms, "s_2_3")->rhs == 0);
    CHECK(find_row(ms, "c_z_1_2"));
    CHECK_FALSE(find_row(ms, "c_z_1_3"));
    CHECK(enumerate_optimum(ms) == 1);

    auto p4 = graphs::path(4);
    auto mp = build_model(p4, 2);
    auto before = mp.constraints.size();
    auto sp = add_twin_symmetry_breaking(mp, p4, twin_refined_partition(p4));
    CHECK(sp.chain_rows == 0);
    CHECK(sp.eliminated_variables == 0);
    CHECK(mp.constraints.size() == before);

    auto k4 = build_model(graphs::complete(4), 4, MilpOptions{false, true});
    CHECK(k4.active_variable_count(VariableKind::binary) == 6);
    CHECK(std::count(k4.eliminated.begin(), k4.eliminated.end(), true) == 6);

    auto c5 = graphs::cycle(5);
    CHECK(build_model(c5, 3, MilpOptions{false, true}).active_variable_count(VariableKind::binary) ==
        build_model(c5, 3).active_variable_count(VariableKind::binary));

    TwinPartition wrong{{{TwinKind::true_twins, {0, 1}}, {TwinKind::singleton, {2}}, {TwinKind::singleton, {3}}}};
    CHECK_THROWS_AS(add_twin_symmetry_breaking(mp, p4, wrong), InputError);
}

TEST_CASE("no surviving row mentions an eliminated variable")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_graph(3 + trial % 6, trial % 2 ? 0.8 : 0.3, rng);
        if (g.size() == 0)
            continue;
        auto m = build_model(g, 3, MilpOptions{true, true});
        for (auto & c : m.constraints)
            for (auto & t : c.terms)
                CHECK_FALSE(m.eliminated[t.variable]);
    }
}

TEST_CASE("LP text")
{
    auto text = write_lp(build_model(graphs::complete(2), 2));
    CHECK(text.find("Minimize\n obj: k\n") != std::string::npos);
    CHECK(text.find(" c_z_1_2: f_v2 - f_v1 + 2 z_1_2 <= 1\n") != std::string::npos);
    CHECK(text.find(" p_1_2: z_1_2 + z_2_1 = 1\n") != std::string::npos);
    CHECK(text.find(" l_1: f_v1 - k <= 0\n") != std::string::npos);
    CHECK(text.find("Bounds\n k >= 1\n 1 <= f_v1 <= 2\n") != std::string::npos);
    CHECK(text.find("Generals\n k f_v1 f_v2\n") != std::string::npos);
    CHECK(text.find("Binaries\n z_1_2 z_2_1\n") != std::string::npos);
    CHECK(text.ends_with("End\n"));

    auto big = write_lp(build_model(graphs::complete(9), 9, MilpOptions{true, true}));
    std::size_t start = 0;
    while (start < big.size()) {
        auto end = big.find('\n', start);
        CHECK(end - start <= 200);
        start = end + 1;
    }
    CHECK(big == write_lp(build_model(graphs::complete(9), 9, MilpOptions{true, true})));
}

TEST_CASE("assignment checker")
{
    auto m = build_model(graphs::complete(2), 2);
    // k, f_v1, f_v2, z_1_2, z_2_1
    // f(N(v1)) = 2 > f(N(v2)) = 1, so z_2_1 = 1
    std::vector<long long> good{2, 1, 2, 0, 1};
    CHECK(is_feasible(m, good));
    std::vector<long long> equal{2, 1, 1, 0, 1};
    CHECK_FALSE(is_feasible(m, equal));
    std::vector<long long> short_k{1, 1, 2, 0, 1};
    std::vector<long long> flipped{2, 1, 2, 1, 0};
    CHECK_FALSE(is_feasible(m, flipped));
    CHECK_FALSE(is_feasible(m, short_k));
    CHECK_THROWS_AS(is_feasible(m, std::vector<long long>{1}), InputError);
}

TEST_CASE("property: valid inequalities hold on every additive coloring with induced orientation")
{
    for (auto & g : corpus("connected_up_to_7.g6", 6)) {
        if (g.size() == 0)
            continue;
        auto m = build_model(g, 3, MilpOptions{true, false});
        std::vector<int> f(static_cast<std::size_t>(g.order()), 1);
        do {
            if (! sums_distinct_on_edges(g, f))
                continue;
            std::vector<long long> x(m.variables.size(), 0);
            x[m.k_index()] = 3;
            std::vector<long long> s(f.size(), 0);
            for (Vertex v = 0; v < g.order(); ++v) {
                x[m.label_index(v)] = f[v];
                for (auto w : g.neighbours(v))
                    s[v] += f[w];
            }
            for (auto & [e, z] : m.z_slots)
                x[z] = s[e.first] < s[e.second] ? 1 : 0;
            CHECK(is_feasible(m, x));
        } while (next_tuple(f, 3));
    }
}

TEST_CASE("property: every variant has optimum eta on connected graphs up to 5 vertices")
{
    for (auto & g : corpus("connected_up_to_7.g6", 5)) {
        if (g.size() == 0)
            continue;
        auto eta = eta_exact(g).value;
        auto ub = combined_bounds(g).eta_upper;
        for (bool valid : {false, true})
            for (bool symmetry : {false, true})
                CHECK(enumerate_optimum(build_model(g, ub, MilpOptions{valid, symmetry})) == eta);
    }
}
