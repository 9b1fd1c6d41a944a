#include "fixtures.hpp"
#include "oracles.hpp"

#include "forkfree/harness.hpp"
#include "forkfree/perfection.hpp"

#include <doctest.h>

using namespace forkfree;

TEST_CASE("clique numbers")
{
    CHECK(clique_number(fixtures::cycle(5)).omega == 2);
    const CliqueResult w5 = clique_number(fixtures::wheel(5));
    CHECK(w5.omega == 3);
    CHECK(is_clique(fixtures::wheel(5), w5.clique));
    CHECK(w5.clique.contains(5));
    CHECK(clique_number(fixtures::complete(7)).omega == 7);
    CHECK(clique_number(Graph{}).omega == 0);
    CHECK(clique_number(fixtures::edgeless(4)).omega == 1);
    CHECK(clique_number_within(fixtures::wheel(5), VertexSet::range(5)).omega == 2);
    CHECK(maximum_cliques(fixtures::wheel(5), VertexSet::range(6)).size() == 5);
    CHECK(maximum_cliques(fixtures::cycle(5), VertexSet::range(5)).size() == 5);
}

TEST_CASE("chromatic numbers")
{
    CHECK(chromatic_number(fixtures::cycle(5)).chi == 3);
    CHECK(chromatic_number(fixtures::petersen()).chi == 3);
    CHECK(oracle::chromatic_number(fixtures::petersen()) == 3);
    CHECK(chromatic_number(fixtures::edgeless(6)).chi == 1);
    CHECK(chromatic_number(Graph{}).chi == 0);
    CHECK(chromatic_number(fixtures::wheel(5)).chi == 4);
    CHECK(chromatic_number(fixtures::grotzsch()).chi == 4);
    CHECK(chromatic_number(fixtures::antihole(7)).chi == 4);

    const ChromaticResult r = chromatic_number(fixtures::wheel(7));
    CHECK(r.chi == 4);
    CHECK(r.coloring.color[0] == 0);
    CHECK(r.coloring.palette == 4);
    for (auto [u, v] : fixtures::wheel(7).edges())
        CHECK(r.coloring.color[u] != r.coloring.color[v]);

    Coloring c;
    CHECK(k_colorable(fixtures::cycle(5), 3, &c));
    CHECK(c.palette <= 3);
    CHECK_FALSE(k_colorable(fixtures::cycle(5), 2));
}

TEST_CASE("clique and chromatic numbers agree with brute force")
{
    GraphCatalog catalog;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : catalog.tier(n)) {
            REQUIRE(clique_number(g).omega == oracle::clique_number(g));
            REQUIRE(chromatic_number(g).chi == oracle::chromatic_number(g));
        }
}

TEST_CASE("structural perfection")
{
    CHECK(is_perfect_structural(fixtures::complete_bipartite(3, 4)));
    CHECK(is_perfect_structural(fixtures::path(4)));
    CHECK_FALSE(is_perfect_structural(fixtures::cycle(5)));
    CHECK_FALSE(is_perfect_structural(fixtures::antihole(7)));
    CHECK(is_perfect_structural(fixtures::cycle(6)));
    CHECK(is_perfect_structural(Graph{}));
    CHECK(is_perfect_structural_within(fixtures::wheel(5), VertexSet{0, 1, 2, 3, 5}));
}

TEST_CASE("definitional perfection")
{
    CHECK(is_perfect_definitional(fixtures::path(4)));
    CHECK_FALSE(is_perfect_definitional(fixtures::cycle(5)));
    CHECK_FALSE(is_perfect_definitional(fixtures::antihole(7)));
    CHECK(is_perfect_definitional(fixtures::complete_bipartite(3, 3)));
    CHECK_THROWS_AS(is_perfect_definitional(fixtures::grotzsch()), InputError);

    PerfectionCatalog catalog;
    GraphCatalog graphs;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : graphs.tier(n)) {
            const bool def = is_perfect_definitional(g, catalog);
            REQUIRE(def == oracle::perfect(g));
            REQUIRE(def == is_perfect_structural(g));
        }
}

TEST_CASE("perfect graphs per order")
{
    const int expected[] = {0, 1, 2, 4, 11, 33, 148, 906};
    GraphCatalog graphs;
    for (int n = 1; n <= 7; ++n) {
        int perfect = 0;
        for (const Graph& g : graphs.tier(n))
            perfect += is_perfect_structural(g);
        CHECK(perfect == expected[n]);
    }
}
