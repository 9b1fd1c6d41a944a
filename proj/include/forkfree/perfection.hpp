#ifndef FORKFREE_PERFECTION_HPP
#define FORKFREE_PERFECTION_HPP

#include "forkfree/graph.hpp"
#include "forkfree/memo.hpp"

#include <vector>

namespace forkfree {

/// color[v] in [0, palette). Proper when adjacent vertices differ.
struct Coloring {
    std::vector<int> color;
    int palette = 0;

    bool operator==(const Coloring&) const = default;
};

struct CliqueResult {
    int omega = 0;
    VertexSet clique;
};

/// Exact maximum clique by branch and bound with a greedy-colouring bound.
CliqueResult clique_number(const Graph& g);
CliqueResult clique_number_within(const Graph& g, VertexSet within);

/// Every clique of size omega(g[within]).
std::vector<VertexSet> maximum_cliques(const Graph& g, VertexSet within);

struct ChromaticResult {
    int chi = 0;
    Coloring coloring;
};

/// Exact chromatic number. Colours are renumbered by first use in vertex
/// order, so vertex 0 always gets colour 0.
ChromaticResult chromatic_number(const Graph& g);

/// Decides k-colourability; fills `out` on success.
bool k_colorable(const Graph& g, int k, Coloring* out = nullptr);

/// Perfect iff there is no odd hole and no odd antihole.
bool is_perfect_structural(const Graph& g);
bool is_perfect_structural_within(const Graph& g, VertexSet within);

/// Largest order accepted by the definitional test.
inline constexpr int kDefinitionalLimit = 10;

using PerfectionCatalog = KeyedMemo<bool>;

/// chi(H) == omega(H) for every induced subgraph H, evaluated by deleting
/// one vertex at a time and memoised per isomorphism class.
bool is_perfect_definitional(const Graph& g, PerfectionCatalog& catalog);
bool is_perfect_definitional(const Graph& g);

}  // namespace forkfree

#endif
