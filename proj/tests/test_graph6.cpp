#include "support.hpp"

#include <acp/error.hpp>
#include <acp/graph6.hpp>

#include <doctest.h>

#include <sstream>

using namespace acp;
using namespace acp_test;

TEST_CASE("graph6 decoding of hand-packed strings")
{
    CHECK(parse_graph6("A_") == graphs::complete(2));
    CHECK(parse_graph6("Bw") == graphs::complete(3));
    auto empty = parse_graph6("A?");
    CHECK(empty.order() == 2);
    CHECK(empty.size() == 0);
    CHECK(parse_graph6(">>graph6<<Bw") == graphs::complete(3));
    CHECK(parse_graph6("Bw\r\n") == graphs::complete(3));
}

TEST_CASE("graph6 encoding")
{
    CHECK(write_graph6(graphs::complete(2)) == "A_");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(graphs::complete(3)) == "Bw");
    CHECK(write_graph6(Graph(0)) == "?");
}

TEST_CASE("graph6 bit order follows the upper triangle column by column")
{
    // bits (0,1),(0,2),(1,2): only (0,2) set -> 010000 -> 63+16
    CHECK(parse_graph6("BO") == Graph(3, {{0, 2}}));
    // only (1,2) -> 001000 -> 63+8
    CHECK(parse_graph6("BG") == Graph(3, {{1, 2}}));
}

TEST_CASE("graph6 errors")
{
    CHECK_THROWS_AS(parse_graph6(""), FormatError);
    CHECK_THROWS_AS(parse_graph6("B"), FormatError);            // truncated
    CHECK_THROWS_AS(parse_graph6("Bww"), FormatError);          // trailing data
    CHECK_THROWS_AS(parse_graph6("B\x7f"), FormatError);        // byte outside 63..126
    CHECK_THROWS_AS(parse_graph6("B "), FormatError);
    CHECK_THROWS_AS(parse_graph6(":Bw"), FormatError);          // sparse6
    CHECK_THROWS_AS(parse_graph6("&Bw"), FormatError);          // digraph6
    CHECK_THROWS_AS(parse_graph6(">>sparse6<<:A_"), FormatError);

    // K_2 with a padding bit set: 1 + 00001 -> 63+33
    CHECK_THROWS_AS(parse_graph6("A`"), FormatError);
    bool warned = false;
    auto g = parse_graph6("A`", Graph6Options{PaddingCheck::lenient}, &warned);
    CHECK(warned);
    CHECK(g == graphs::complete(2));
}

TEST_CASE("graph6 long size headers")
{
    auto g = graphs::cycle(70);
    auto text = write_graph6(g);
    CHECK(text[0] == '~');
    CHECK(text.size() == 4 + (70 * 69 / 2 + 5) / 6);
    CHECK(parse_graph6(text) == g);

    // 8-byte form of n = 2: "~~" then 36 bits of size.
    CHECK(parse_graph6("~~?????A_") == graphs::complete(2));
}

TEST_CASE("graph6 reader isolates bad lines")
{
    std::istringstream in("Bw\n\nnot graph6\nA_\n");
    Graph6Reader reader(in);
    std::vector<Graph6Record> records;
    while (auto r = reader.next())
        records.push_back(*r);
    REQUIRE(records.size() == 3);
    CHECK(records[0].graph);
    CHECK(records[0].line_number == 1);
    CHECK_FALSE(records[1].graph);
    CHECK(records[1].line_number == 3);
    CHECK_FALSE(records[1].error.empty());
    CHECK(records[2].graph == graphs::complete(2));
}

TEST_CASE("corpus counts per order")
{
    std::vector<int> counts(9, 0);
    for (auto & g : corpus("connected_up_to_7.g6")) {
        CHECK(is_connected(g));
        ++counts[g.order()];
    }
    CHECK(counts == std::vector<int>{0, 1, 1, 2, 6, 21, 112, 853, 0});
    CHECK(corpus("connected_8.g6").size() == 11117);
    CHECK(corpus("all_up_to_5.g6").size() == 52);
}

TEST_CASE("property: random graphs survive write then parse")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        auto g = random_graph(trial % 11, 0.5, rng);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
}
