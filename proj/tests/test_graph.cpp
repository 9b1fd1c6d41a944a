#include "fixtures.hpp"
#include "oracles.hpp"

#include "forkfree/graph.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace forkfree;

TEST_CASE("from_edges builds small graphs")
{
    const Graph c5 = fixtures::cycle(5);
    CHECK(c5.order() == 5);
    CHECK(c5.size() == 5);
    for (int v = 0; v < 5; ++v)
        CHECK(c5.degree(v) == 2);

    const Graph k1 = Graph::from_edges(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    CHECK(fixtures::claw().degree_sequence() == std::vector<int>{3, 1, 1, 1});
}

TEST_CASE("from_edges rejects bad input")
{
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 0}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(65, {}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(-1, {}), InputError);
    CHECK(Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}}).size() == 1);
}

TEST_CASE("from_rows checks symmetry and loops")
{
    CHECK_THROWS_AS(Graph::from_rows({0b10, 0b00}), InputError);
    CHECK_THROWS_AS(Graph::from_rows({0b1}), InputError);
    CHECK_THROWS_AS(Graph::from_rows({0b100, 0b0}), InputError);
    CHECK(Graph::from_rows({0b10, 0b01}) == fixtures::path(2));
}

TEST_CASE("vertex sets")
{
    const VertexSet s{1, 3, 5};
    CHECK(s.size() == 3);
    CHECK(s.first() == 1);
    CHECK(s.to_vector() == std::vector<int>{1, 3, 5});
    CHECK(s.with(0).first() == 0);
    CHECK(s.without(1) == VertexSet{3, 5});
    CHECK((s - VertexSet{3}) == VertexSet{1, 5});
    CHECK(VertexSet::range(64).size() == 64);
    CHECK(VertexSet{}.empty());
    std::ostringstream os;
    os << s;
    CHECK(os.str() == "{1,3,5}");
}

TEST_CASE("induced subgraphs")
{
    const Graph c5 = fixtures::cycle(5);
    const Subgraph p3 = induced_subgraph(c5, {0, 1, 2});
    CHECK(p3.graph == fixtures::path(3));
    CHECK(p3.original == std::vector<int>{0, 1, 2});
    CHECK(p3.to_host(VertexSet{0, 2}) == VertexSet{0, 2});

    CHECK(induced_subgraph(c5, {}).graph.order() == 0);

    const Graph para = fixtures::parachute(5);
    CHECK(induced_subgraph(para, VertexSet::range(5)).graph == c5);

    CHECK_THROWS_AS(induced_subgraph(c5, VertexSet{7}), InputError);
}

TEST_CASE("complement")
{
    CHECK(complement(fixtures::complete(4)) == fixtures::edgeless(4));
    CHECK(oracle::isomorphic(complement(fixtures::cycle(5)), fixtures::cycle(5)));
    for (int n = 0; n <= 6; ++n)
        for (const Graph& g : fixtures::all_labelled(n))
            REQUIRE(complement(complement(g)) == g);
}

TEST_CASE("neighbourhoods")
{
    const Graph w5 = fixtures::wheel(5);
    CHECK(w5.neighbors(5) == VertexSet::range(5));
    CHECK(w5.non_neighbors(5).empty());

    const Graph b = fixtures::balloon(5);
    CHECK(b.neighbors(6).size() == 1);

    const Graph g = disjoint_union(fixtures::path(2), fixtures::edgeless(1));
    CHECK(g.neighbors(2).empty());
    CHECK(g.non_neighbors(2) == VertexSet{0, 1});
    CHECK(g.closed_neighbors(0) == VertexSet{0, 1});
}

TEST_CASE("complete and anticomplete")
{
    const Graph p = fixtures::parachute(5);
    CHECK(is_complete_to(p, VertexSet{5}, VertexSet::range(5)));
    CHECK(is_anticomplete_to(p, VertexSet{6}, VertexSet::range(5)));
    CHECK_FALSE(is_complete_to(p, VertexSet{6}, VertexSet::range(5)));
    CHECK(is_complete_to(p, VertexSet{}, VertexSet::range(5)));
    CHECK(is_anticomplete_to(p, VertexSet{}, VertexSet::range(5)));
    CHECK_THROWS_AS(is_complete_to(p, VertexSet{0, 1}, VertexSet{1, 2}), InputError);
    CHECK(is_clique(p, VertexSet{0, 1, 5}));
    CHECK(is_stable(p, VertexSet{0, 2, 6}));
}

TEST_CASE("relabel, union and join")
{
    const Graph p3 = fixtures::path(3);
    const Graph r = relabel(p3, {1, 0, 2});
    CHECK(r.adjacent(0, 1));
    CHECK(r.adjacent(0, 2));
    CHECK_FALSE(r.adjacent(1, 2));
    CHECK_THROWS_AS(relabel(p3, {0, 0, 1}), InputError);
    CHECK_THROWS_AS(relabel(p3, {0, 1}), InputError);

    CHECK(join(fixtures::edgeless(1), fixtures::cycle(5)) == relabel(fixtures::wheel(5), {5, 0, 1, 2, 3, 4}));
    CHECK(disjoint_union(fixtures::paw(), fixtures::edgeless(1)) == fixtures::co_dart());
}

TEST_CASE("delete_vertex")
{
    CHECK(delete_vertex(fixtures::cycle(5), 4) == fixtures::path(4));
    CHECK_THROWS_AS(delete_vertex(fixtures::cycle(5), 5), InputError);
}

TEST_CASE("graph6 encoding")
{
    CHECK(to_graph6(Graph{}) == "?");
    CHECK(parse_graph6("@") == fixtures::edgeless(1));
    CHECK(to_graph6(fixtures::cycle(5)) == "Dhc");
    CHECK(parse_graph6("Dhc") == fixtures::cycle(5));
    CHECK(to_graph6(fixtures::complete(4)) == "C~");
    CHECK(to_graph6(fixtures::petersen()) == "IheA@GUAo");

    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : fixtures::all_labelled(n)) {
            const std::string s = to_graph6(g);
            REQUIRE(parse_graph6(s) == g);
            REQUIRE(to_graph6(parse_graph6(s)) == s);
        }
}

TEST_CASE("graph6 header for large orders")
{
    const Graph big = fixtures::cycle(63);
    const std::string s = to_graph6(big);
    CHECK(s.substr(0, 4) == "~??~");
    CHECK(parse_graph6(s) == big);
    CHECK(parse_graph6(to_graph6(fixtures::path(64))) == fixtures::path(64));
}

TEST_CASE("graph6 errors")
{
    CHECK_THROWS_AS(parse_graph6(""), InputError);
    CHECK_THROWS_AS(parse_graph6("Dh"), InputError);
    CHECK_THROWS_AS(parse_graph6("Dhcc"), InputError);
    CHECK_THROWS_AS(parse_graph6("D\x01" "c"), InputError);
    CHECK_THROWS_AS(parse_graph6("Dhd"), InputError);  // nonzero padding bit
    CHECK_THROWS_AS(parse_graph6("~??~"), InputError);
}

TEST_CASE("sparse6 decoding")
{
    // Example from the format description: 7 vertices.
    const Graph g = parse_sparse6(":Fa@x^");
    CHECK(g.order() == 7);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {5, 6}});
    CHECK(parse_graph_line(":Fa@x^") == g);
    CHECK(parse_graph_line("Dhc") == fixtures::cycle(5));
    CHECK_THROWS_AS(parse_sparse6("Fa@x^"), InputError);
}

TEST_CASE("edge lists and dot")
{
    const Graph c5 = fixtures::cycle(5);
    CHECK(parse_edge_list(to_edge_list(c5)) == c5);
    CHECK(parse_edge_list("# comment\n3\n0 1\n\n1 2 # tail\n") == fixtures::path(3));
    CHECK_THROWS_AS(parse_edge_list(""), InputError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 5\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("3\n0\n"), InputError);

    const std::string dot = to_dot(fixtures::path(2), VertexSet{1});
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 [") != std::string::npos);
}

TEST_CASE("random graphs survive a round trip")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<>(0, 40)(rng);
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0)
                    e.emplace_back(i, j);
        const Graph g = Graph::from_edges(n, e);
        REQUIRE(parse_graph6(to_graph6(g)) == g);
        REQUIRE(parse_edge_list(to_edge_list(g)) == g);
        REQUIRE(g.size() == static_cast<int>(g.edges().size()));
    }
}
