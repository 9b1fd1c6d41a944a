#include "forkfree/simplicial.hpp"

namespace forkfree {

VertexSet CliqueCover::covered() const
{
    VertexSet all;
    for (auto p : parts)
        all |= p;
    return all;
}

namespace {

// Assign vertices in order; a vertex may join part j only if it is adjacent
// to everything already there. New parts open one at a time.
bool place(const Graph& g, const std::vector<int>& order, std::size_t i, int k,
           std::vector<VertexSet>& parts)
{
    if (i == order.size())
        return true;
    const int v = order[i];
    const VertexSet nv = g.neighbors(v);
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (!parts[j].is_subset_of(nv))
            continue;
        parts[j] = parts[j].with(v);
        if (place(g, order, i + 1, k, parts))
            return true;
        parts[j] = parts[j].without(v);
    }
    if (static_cast<int>(parts.size()) < k) {
        parts.push_back(VertexSet::single(v));
        if (place(g, order, i + 1, k, parts))
            return true;
        parts.pop_back();
    }
    return false;
}

}  // namespace

std::optional<CliqueCover> union_of_k_cliques(const Graph& g, VertexSet s, int k)
{
    check_subset(g, s);
    if (k < 1)
        throw InputError("clique cover needs k >= 1");
    std::vector<VertexSet> parts;
    if (!place(g, s.to_vector(), 0, k, parts))
        return std::nullopt;
    return CliqueCover{std::move(parts)};
}

std::optional<CliqueCover> is_k_simplicial(const Graph& g, int v, int k)
{
    check_vertex(g, v);
    return union_of_k_cliques(g, g.neighbors(v), k);
}

std::optional<SimplicialVertex> find_k_simplicial(const Graph& g, int k)
{
    for (int v = 0; v < g.order(); ++v)
        if (auto cover = is_k_simplicial(g, v, k))
            return SimplicialVertex{v, std::move(*cover)};
    return std::nullopt;
}

std::optional<SimplicialVertex> find_trisimplicial(const Graph& g)
{
    return find_k_simplicial(g, 3);
}

VertexSet trisimplicial_vertices(const Graph& g)
{
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (is_k_simplicial(g, v, 3))
            out = out.with(v);
    return out;
}

bool validate_cover(const Graph& g, VertexSet s, const CliqueCover& cover, int k)
{
    if (static_cast<int>(cover.parts.size()) > k)
        return false;
    VertexSet seen;
    for (auto p : cover.parts) {
        if (p.intersects(seen) || !p.is_subset_of(g.vertices()) || !is_clique(g, p))
            return false;
        seen |= p;
    }
    return seen == s;
}

}  // namespace forkfree
