#ifndef FORKFREE_SIMPLICIAL_HPP
#define FORKFREE_SIMPLICIAL_HPP

#include "forkfree/graph.hpp"

#include <optional>
#include <vector>

namespace forkfree {

/// Disjoint cliques whose union is the covered set. Only non-empty parts
/// are stored, so a cover of the empty set has no parts.
struct CliqueCover {
    std::vector<VertexSet> parts;

    VertexSet covered() const;
    bool operator==(const CliqueCover&) const = default;
};

/// Partition of `s` into at most k cliques of g, i.e. a k-colouring of the
/// complement of g[s]. Vertices are placed in increasing order into the
/// lowest part that works, so the first cover found is the
/// lexicographically least assignment.
std::optional<CliqueCover> union_of_k_cliques(const Graph& g, VertexSet s, int k);

/// Cover of N(v) by at most k cliques, if v is k-simplicial.
std::optional<CliqueCover> is_k_simplicial(const Graph& g, int v, int k);

struct SimplicialVertex {
    int vertex = -1;
    CliqueCover cover;
};

/// Least vertex whose neighbourhood is a union of at most `k` cliques.
/// `k` defaults to three (trisimplicial).
std::optional<SimplicialVertex> find_k_simplicial(const Graph& g, int k);
std::optional<SimplicialVertex> find_trisimplicial(const Graph& g);

/// All vertices that are trisimplicial.
VertexSet trisimplicial_vertices(const Graph& g);

/// Re-checks a cover against the graph: disjoint cliques covering exactly `s`.
bool validate_cover(const Graph& g, VertexSet s, const CliqueCover& cover, int k);

}  // namespace forkfree

#endif
