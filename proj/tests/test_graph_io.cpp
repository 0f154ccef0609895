#include "primebound/graph_io.hpp"

#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace primebound;
using testutil::data_file;
using testutil::demo_graph;
using testutil::path_graph;
using testutil::random_graph;

namespace {

int parse_error_line(const std::string& text) {
    try {
        parse_edge_list(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3");
    REQUIRE(g == path_graph(4));

    // comments, blank lines, stray whitespace
    Graph h = parse_edge_list("# a path\n\n  4 3\n0 1 # first edge\n1 2\n\n2 3\n");
    REQUIRE(h == path_graph(4));

    // duplicate edge lines collapse onto one edge
    Graph d = parse_edge_list("3 2\n0 1\n0 1");
    REQUIRE(d.edge_count() == 1);

    Graph empty = parse_edge_list("3 0");
    REQUIRE(empty.size() == 3);
    REQUIRE(empty.edge_count() == 0);
}

TEST_CASE("edge list names directive") {
    Graph g = parse_edge_list("2 1\n# names: left right\n0 1");
    REQUIRE(g.names() == std::vector<std::string>{"left", "right"});

    REQUIRE(parse_error_line("# names: a b\n2 1\n0 1") == 1);   // before header
    REQUIRE(parse_error_line("2 1\n# names: only\n0 1") == 2);  // wrong count
    REQUIRE(parse_error_line("2 1\n# names: a b\n# names: a b\n0 1") == 3);
}

TEST_CASE("edge list errors carry line numbers") {
    REQUIRE(parse_error_line("") == 1);                    // missing header
    REQUIRE(parse_error_line("x 3\n0 1") == 1);            // malformed header
    REQUIRE(parse_error_line("4\n0 1") == 1);              // header needs two ints
    REQUIRE(parse_error_line("2 1\n0 0") == 2);            // self-loop
    REQUIRE(parse_error_line("2 1\n0 2") == 2);            // id out of range
    REQUIRE(parse_error_line("2 1\n0 -1") == 2);           // negative id
    REQUIRE(parse_error_line("2 1\n0 1\n1 0") == 3);       // extra edge line
    REQUIRE(parse_error_line("3 2\n0 1") == 2);            // missing edges
    REQUIRE(parse_error_line("2 1\n0 1 2") == 2);          // three tokens
    REQUIRE(parse_error_line("-1 0") == 1);                // negative count
}

TEST_CASE("graph6 parsing") {
    Graph k2 = parse_graph6("A_");
    REQUIRE(k2.size() == 2);
    REQUIRE(k2.has_edge(0, 1));

    REQUIRE(parse_graph6("Ch") == path_graph(4));
    REQUIRE(parse_graph6(">>graph6<<Ch") == path_graph(4));
    REQUIRE(parse_graph6("  Ch\n") == path_graph(4));

    Graph trivial = parse_graph6("@");
    REQUIRE(trivial.size() == 1);
}

TEST_CASE("graph6 errors") {
    REQUIRE_THROWS_AS(parse_graph6(""), ParseError);
    REQUIRE_THROWS_AS(parse_graph6("~??"), ParseError);   // multi-byte size
    REQUIRE_THROWS_AS(parse_graph6("C"), ParseError);     // truncated
    REQUIRE_THROWS_AS(parse_graph6("Chh"), ParseError);   // trailing data
    REQUIRE_THROWS_AS(parse_graph6("C\x21"), ParseError); // data byte below offset
}

TEST_CASE("graph6 writing") {
    REQUIRE(write_graph6(path_graph(4)) == "Ch");
    Graph k2(2);
    k2.add_edge(0, 1);
    REQUIRE(write_graph6(k2) == "A_");
    REQUIRE(write_graph6(Graph(0)) == "?");
    REQUIRE_THROWS_AS(write_graph6(Graph(63)), std::invalid_argument);
}

TEST_CASE("round trips through both formats") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, trial % 13);
        REQUIRE(parse_edge_list(write_edge_list(g)) == g);
        REQUIRE(parse_graph6(write_graph6(g)) == g);
    }

    Graph named = demo_graph();
    Graph back = parse_edge_list(write_edge_list(named));
    REQUIRE(back == named);
    REQUIRE(back.names() == named.names());
}

TEST_CASE("edge list writing is deterministic and sorted") {
    Graph g(3);
    g.add_edge(2, 1);
    g.add_edge(1, 0);
    REQUIRE(write_edge_list(g) == "3 2\n0 1\n1 2\n");
}

TEST_CASE("format sniffing") {
    REQUIRE(sniff_format("4 3\n0 1\n1 2\n2 3") == GraphFormat::edge_list);
    REQUIRE(sniff_format("# comment first\n4 3\n0 1\n1 2\n2 3") ==
            GraphFormat::edge_list);
    REQUIRE(sniff_format("Ch") == GraphFormat::graph6);
    REQUIRE(sniff_format(">>graph6<<Ch") == GraphFormat::graph6);

    REQUIRE(parse_graph("Ch") == path_graph(4));
    REQUIRE(parse_graph("4 3\n0 1\n1 2\n2 3") == path_graph(4));
    REQUIRE(parse_graph("Ch", GraphFormat::graph6) == path_graph(4));
    REQUIRE_THROWS_AS(parse_graph("Ch", GraphFormat::edge_list), ParseError);
}

TEST_CASE("reading graph files") {
    Graph demo = read_graph_file(data_file("demo.txt"));
    REQUIRE(demo == demo_graph());
    REQUIRE(demo.names() == demo_graph().names());

    REQUIRE(read_graph_file(data_file("p4.txt")) == path_graph(4));
    REQUIRE(read_graph_file(data_file("p4.g6")) == path_graph(4));
    REQUIRE(read_graph_file(data_file("empty4.txt")) == Graph(4));

    REQUIRE_THROWS_AS(read_graph_file(data_file("missing.txt")), std::runtime_error);
    REQUIRE_THROWS_AS(read_graph_file(data_file("malformed.txt")), ParseError);
}
