#include "support.hpp"

#include <acp/edgelist.hpp>
#include <acp/error.hpp>
#include <acp/sweep.hpp>

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace acp;
using namespace acp_test;

namespace
{
    auto sweep_text(const std::string & text, SweepOptions options, std::vector<SweepRecord> * out = nullptr) -> SweepSummary
    {
        std::istringstream in(text);
        return run_sweep(in, options, [&](const SweepRecord & r) {
            if (out)
                out->push_back(r);
        });
    }
}

TEST_CASE("components are solved separately")
{
    auto g = disjoint_union(graphs::complete(3), graphs::complete(2));
    auto r = solve_eta(g, {}, true);
    CHECK(r.status == SolveStatus::solved);
    CHECK(r.value == 3);
    REQUIRE(r.certificate);
    CHECK(verify_additive_coloring(g, *r.certificate));

    auto cycle = solve_eta(graphs::cycle(5));
    CHECK(cycle.value == 3);
    CHECK(cycle.source == EtaSource::solver);
    auto complete = solve_eta(graphs::complete(5));
    CHECK(complete.source == EtaSource::formula);
    CHECK_FALSE(complete.certificate);
    CHECK(solve_eta(graphs::complete(5), {}, true).certificate);
}

TEST_CASE("a single complete graph")
{
    std::vector<SweepRecord> records;
    auto s = sweep_text("Bw\n", {}, &records);
    REQUIRE(records.size() == 1);
    CHECK(records[0].eta == 3);
    CHECK(records[0].chi == 3);
    CHECK(records[0].status == ConjectureStatus::holds);
    CHECK(format_record(records[0]) == "graph6=Bw n=3 m=3 eta=3 chi=3 eta_source=formula chi_source=exact status=holds");
    CHECK(s.holds == 1);
    CHECK(s.max_gap == 0);
}

TEST_CASE("corrupt lines are flagged and the sweep continues")
{
    std::vector<SweepRecord> records;
    auto s = sweep_text("A_\nB\x01\n\nDhc\n", {}, &records);
    REQUIRE(records.size() == 3);
    CHECK(records[1].status == ConjectureStatus::parse_error);
    CHECK(records[1].line_number == 2);
    CHECK(format_record(records[1]).starts_with("line=2 status=parse-error"));
    CHECK(records[2].line_number == 4);
    CHECK(records[2].eta == 3);
    CHECK(s.parse_errors == 1);
    CHECK(s.holds == 2);
}

TEST_CASE("graphs above the order limit are skipped")
{
    auto s = sweep_text("A_\nDhc\nBw\n", SweepOptions{3});
    CHECK(s.skipped == 1);
    CHECK(s.holds == 2);
}

TEST_CASE("budget exhaustion is reported, never counted as holding")
{
    SweepOptions tight;
    tight.node_budget = 1;
    auto s = sweep_text("Dhc\n", tight);
    CHECK(s.budget_exceeded == 1);
    CHECK(s.holds == 0);
    CHECK(s.budget_exceeded_lines == std::vector<std::size_t>{1});

    SweepOptions no_exact_chi;
    no_exact_chi.chromatic_max_order = 4;
    CHECK(sweep_text("Dhc\n", no_exact_chi).budget_exceeded == 1);
}

TEST_CASE("violation records carry both certificates")
{
    // Forge a record the way the sweep reports one.
    SweepRecord r;
    r.line = "A_";
    r.n = 2;
    r.m = 1;
    r.eta = 2;
    r.chi = 1;
    r.eta_solved = true;
    r.status = ConjectureStatus::violation;
    r.eta_certificate = Labeling{1, 2};
    r.chi_certificate = Coloring{1, {1, 1}};
    CHECK(format_record(r) == "graph6=A_ n=2 m=1 eta=2 chi=1 eta_source=solver chi_source=exact status=VIOLATION eta_labeling=1,2 chi_colouring=1,1");
}

TEST_CASE("audit selection is deterministic and roughly one percent")
{
    int selected = 0;
    for (auto & r : read_graph6_file(data_path("connected_8.g6")))
        selected += selected_for_audit(r.line, 10) ? 1 : 0;
    CHECK(selected > 50);
    CHECK(selected < 200);
    CHECK(selected_for_audit("Bw", 1000));
    CHECK_FALSE(selected_for_audit("Bw", 0));
}

TEST_CASE("aggregates do not depend on the worker count")
{
    std::ifstream file(data_path("connected_up_to_7.g6"));
    std::stringstream text;
    text << file.rdbuf();
    SweepOptions one, four;
    four.workers = 4;
    four.audit_per_mille = one.audit_per_mille = 100;
    std::vector<SweepRecord> a, b;
    auto sa = sweep_text(text.str(), one, &a);
    auto sb = sweep_text(text.str(), four, &b);
    CHECK(sa.same_aggregates(sb));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(format_record(a[i]) == format_record(b[i]));
    CHECK(sa.violations == 0);
    CHECK(sa.audit_failures == 0);
    CHECK(sa.audited > 0);
    CHECK(sa.holds == 996);
    CHECK_THROWS_AS(sweep_text("Bw\n", SweepOptions{0, 0}), InputError);
}

TEST_CASE("edge lists")
{
    std::istringstream plain("# triangle and an edge\n5 4\n0 1\n1 2\n0 2\n3 4\n");
    CHECK(parse_edge_list(plain) == disjoint_union(graphs::complete(3), graphs::complete(2)));
    std::istringstream dimacs("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(parse_edge_list(dimacs) == graphs::path(3));

    for (auto bad : {"", "3 2\n0 1\n", "3 1\n0 3\n", "3 1\n0 0\n", "p edge 3 1\nx 1 2\n", "3 1\n0 1 2\n", "p cnf 3 1\n"}) {
        std::istringstream in(bad);
        CHECK_THROWS_AS(parse_edge_list(in), FormatError);
    }

    auto graphs = read_graph_argument("Bw");
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0].graph == graphs::complete(3));
    CHECK_THROWS_AS(read_graph_argument("B"), FormatError);
    CHECK(read_graph_argument(data_path("all_up_to_5.g6")).size() == 52);
}
