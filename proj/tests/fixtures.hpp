// Hand-built graphs shared by the tests. Vertex orders follow the pattern
// templates: hole first, then the extra vertices.
#ifndef FORKFREE_TEST_FIXTURES_HPP
#define FORKFREE_TEST_FIXTURES_HPP

#include "forkfree/graph.hpp"

#include <vector>

namespace fixtures {

using forkfree::Edge;
using forkfree::Graph;

inline Graph edgeless(int n) { return Graph::from_edges(n, {}); }

inline Graph complete(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

inline Graph path(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline std::vector<Edge> cycle_edges(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return e;
}

inline Graph cycle(int n) { return Graph::from_edges(n, cycle_edges(n)); }

inline Graph complete_bipartite(int a, int b)
{
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, e);
}

inline Graph claw() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline Graph fork() { return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}); }
inline Graph paw() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }
inline Graph co_dart() { return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }
inline Graph bull() { return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}); }
inline Graph gem()
{
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
}
inline Graph dart()
{
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}});
}
inline Graph three_p1() { return edgeless(3); }

// Hole 0..i-1 and hub i.
inline Graph wheel(int i)
{
    auto e = cycle_edges(i);
    for (int v = 0; v < i; ++v)
        e.emplace_back(v, i);
    return Graph::from_edges(i + 1, e);
}

// Hole 0..i-1, center i seeing 0 and 1, leaf i+1 seeing only the center.
inline Graph balloon(int i)
{
    auto e = cycle_edges(i);
    e.insert(e.end(), {{0, i}, {1, i}, {i, i + 1}});
    return Graph::from_edges(i + 2, e);
}

// Hole 0..i-1, apex i complete to the hole, pendant i+1 seeing only the apex.
inline Graph parachute(int i)
{
    auto e = cycle_edges(i);
    for (int v = 0; v < i; ++v)
        e.emplace_back(v, i);
    e.emplace_back(i, i + 1);
    return Graph::from_edges(i + 2, e);
}

inline Graph petersen()
{
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, e);
}

// Line graph of K4: vertices are the six edges of K4.
inline Graph line_graph_k4()
{
    const std::vector<Edge> k4 = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<Edge> e;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            auto [a, b] = k4[i];
            auto [c, d] = k4[j];
            if (a == c || a == d || b == c || b == d)
                e.emplace_back(i, j);
        }
    return Graph::from_edges(6, e);
}

inline Graph antihole(int n) { return forkfree::complement(cycle(n)); }

// Mycielskian of C5: rim 0..4, shadows 5..9, hub 10.
inline Graph grotzsch()
{
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        const int j = (i + 1) % 5;
        e.insert(e.end(), {{i, j}, {5 + i, j}, {5 + j, i}, {5 + i, 10}});
    }
    return Graph::from_edges(11, e);
}

// Every labelled graph on n vertices, in edge-mask order.
inline std::vector<Graph> all_labelled(int n)
{
    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            slots.emplace_back(i, j);
    std::vector<Graph> out;
    for (unsigned long mask = 0; mask < (1UL << slots.size()); ++mask) {
        std::vector<Edge> e;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (mask >> s & 1)
                e.push_back(slots[s]);
        out.push_back(Graph::from_edges(n, e));
    }
    return out;
}

}  // namespace fixtures

#endif
