#include "fixtures.hpp"
#include "oracles.hpp"

#include "forkfree/canonical.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace forkfree;

namespace {

std::vector<int> shuffled(int n, std::mt19937& rng)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("relabelled copies share a key")
{
    const Graph c5 = fixtures::cycle(5);
    CHECK(canonical_key(c5) == canonical_key(relabel(c5, {2, 4, 1, 3, 0})));
    CHECK(canonical_key(c5) != canonical_key(fixtures::path(5)));
    CHECK(isomorphic(c5, complement(c5)));
    CHECK_FALSE(isomorphic(fixtures::claw(), fixtures::paw()));
}

TEST_CASE("canonical form is a relabelling of the input")
{
    const Graph g = fixtures::parachute(5);
    const CanonicalForm form = canonical_form(g);
    CHECK(form.graph == relabel(g, form.labelling));
    CHECK(to_graph6(form.graph) == canonical_key(g).bytes());
}

TEST_CASE("distinct keys over labelled graphs")
{
    const int expected[] = {1, 1, 2, 4, 11, 34};
    for (int n = 0; n <= 5; ++n) {
        std::set<CanonicalKey> keys;
        for (const Graph& g : fixtures::all_labelled(n))
            keys.insert(canonical_key(g));
        CHECK(static_cast<int>(keys.size()) == expected[n]);
    }
}

TEST_CASE("keys agree with the permutation oracle")
{
    for (int n = 1; n <= 5; ++n) {
        const auto graphs = fixtures::all_labelled(n);
        std::mt19937 rng(n);
        for (int trial = 0; trial < 300; ++trial) {
            const Graph& a = graphs[rng() % graphs.size()];
            const Graph& b = graphs[rng() % graphs.size()];
            REQUIRE((canonical_key(a) == canonical_key(b)) == oracle::isomorphic(a, b));
        }
    }
}

TEST_CASE("key is invariant under random relabelling")
{
    std::mt19937 rng(11);
    const std::vector<Graph> samples = {fixtures::petersen(), fixtures::grotzsch(), fixtures::wheel(7),
                                        fixtures::line_graph_k4(), fixtures::complete_bipartite(3, 4),
                                        fixtures::balloon(7), fixtures::antihole(7), fixtures::edgeless(12),
                                        fixtures::complete(12)};
    for (const Graph& g : samples) {
        const CanonicalKey key = canonical_key(g);
        for (int trial = 0; trial < 100; ++trial)
            REQUIRE(canonical_key(relabel(g, shuffled(g.order(), rng))) == key);
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % kCanonicalLimit);
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2)
                    e.emplace_back(i, j);
        const Graph g = Graph::from_edges(n, e);
        REQUIRE(canonical_key(relabel(g, shuffled(n, rng))) == canonical_key(g));
    }
}

TEST_CASE("canonical labelling rejects large graphs")
{
    CHECK_THROWS_AS(canonical_key(fixtures::cycle(kCanonicalLimit + 1)), InputError);
    CHECK(canonical_key(Graph{}).bytes() == "?");
}
