#include "forkfree/perfection.hpp"

#include "forkfree/canonical.hpp"
#include "forkfree/patterns.hpp"

#include <algorithm>

namespace forkfree {

namespace {

class MaxClique {
public:
    explicit MaxClique(const Graph& g) : g_(g) {}

    CliqueResult run(VertexSet within)
    {
        expand(VertexSet(), within);
        return {best_.size(), best_};
    }

private:
    // Greedy colouring of `p`; returns vertices in colour order with their
    // colour numbers (1-based), the bound used for pruning.
    void colour_sort(VertexSet p, std::vector<int>& order, std::vector<int>& bound) const
    {
        int colour = 0;
        VertexSet left = p;
        while (!left.empty()) {
            ++colour;
            VertexSet avail = left;
            while (!avail.empty()) {
                const int v = avail.first();
                avail = avail - g_.neighbors(v).with(v);
                left = left.without(v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
    }

    void expand(VertexSet current, VertexSet p)
    {
        if (p.empty()) {
            if (current.size() > best_.size())
                best_ = current;
            return;
        }
        std::vector<int> order;
        std::vector<int> bound;
        colour_sort(p, order, bound);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (current.size() + bound[i] <= best_.size())
                return;
            const int v = order[i];
            expand(current.with(v), p & g_.neighbors(v));
            p = p.without(v);
        }
    }

    const Graph& g_;
    VertexSet best_;
};

void cliques_of_size(const Graph& g, VertexSet current, VertexSet candidates, int target,
                     std::vector<VertexSet>& out)
{
    if (current.size() == target) {
        out.push_back(current);
        return;
    }
    if (current.size() + candidates.size() < target)
        return;
    for (int v : candidates) {
        candidates = candidates.without(v);
        cliques_of_size(g, current.with(v), candidates & g.neighbors(v), target, out);
        if (current.size() + 1 + candidates.size() < target)
            return;
    }
}

// DSATUR-ordered backtracking for a fixed number of colours.
class Colourer {
public:
    Colourer(const Graph& g, int k) : g_(g), k_(k), colour_(g.order(), -1) {}

    bool run() { return step(0, 0); }
    const std::vector<int>& colours() const { return colour_; }

private:
    int pick() const
    {
        int best = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (colour_[v] >= 0)
                continue;
            const int sat = std::popcount(neighbour_colours(v));
            int deg = 0;
            for (int u : g_.neighbors(v))
                deg += colour_[u] < 0;
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    std::uint64_t neighbour_colours(int v) const
    {
        std::uint64_t mask = 0;
        for (int u : g_.neighbors(v))
            if (colour_[u] >= 0)
                mask |= std::uint64_t{1} << colour_[u];
        return mask;
    }

    bool step(int coloured, int used)
    {
        if (coloured == g_.order())
            return true;
        const int v = pick();
        const std::uint64_t blocked = neighbour_colours(v);
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if ((blocked >> c) & 1U)
                continue;
            colour_[v] = c;
            if (step(coloured + 1, std::max(used, c + 1)))
                return true;
        }
        colour_[v] = -1;
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> colour_;
};

Coloring normalised(std::vector<int> colours)
{
    std::vector<int> rename(colours.size() + 1, -1);
    int next = 0;
    for (auto& c : colours) {
        if (rename[c] < 0)
            rename[c] = next++;
        c = rename[c];
    }
    return {std::move(colours), next};
}

Coloring greedy_dsatur(const Graph& g)
{
    // DSATUR with an unbounded palette never backtracks.
    Colourer c(g, g.order());
    c.run();
    return normalised(c.colours());
}

}  // namespace

CliqueResult clique_number(const Graph& g)
{
    return clique_number_within(g, g.vertices());
}

CliqueResult clique_number_within(const Graph& g, VertexSet within)
{
    check_subset(g, within);
    return MaxClique(g).run(within);
}

std::vector<VertexSet> maximum_cliques(const Graph& g, VertexSet within)
{
    const int omega = clique_number_within(g, within).omega;
    std::vector<VertexSet> out;
    cliques_of_size(g, VertexSet(), within, omega, out);
    return out;
}

bool k_colorable(const Graph& g, int k, Coloring* out)
{
    if (g.order() == 0) {
        if (out)
            *out = {};
        return true;
    }
    if (k < 1)
        return false;
    Colourer c(g, std::min(k, kMaxVertices));
    if (!c.run())
        return false;
    if (out)
        *out = normalised(c.colours());
    return true;
}

ChromaticResult chromatic_number(const Graph& g)
{
    if (g.order() == 0)
        return {0, {}};
    Coloring best = greedy_dsatur(g);
    const int lower = std::max(1, clique_number(g).omega);
    for (int k = lower; k < best.palette; ++k) {
        Coloring c;
        if (k_colorable(g, k, &c))
            return {k, std::move(c)};
    }
    return {best.palette, std::move(best)};
}

bool is_perfect_structural_within(const Graph& g, VertexSet within)
{
    check_subset(g, within);
    return !has_odd_hole_within(g, within) && !has_odd_antihole_within(g, within);
}

bool is_perfect_structural(const Graph& g)
{
    return is_perfect_structural_within(g, g.vertices());
}

bool is_perfect_definitional(const Graph& g, PerfectionCatalog& catalog)
{
    if (g.order() > kDefinitionalLimit)
        throw InputError("definitional perfection test is limited to " +
                         std::to_string(kDefinitionalLimit) + " vertices");
    const CanonicalKey key = canonical_key(g);
    if (auto hit = catalog.find(key))
        return *hit;
    bool perfect = chromatic_number(g).chi == clique_number(g).omega;
    for (int v = 0; perfect && v < g.order(); ++v)
        perfect = is_perfect_definitional(delete_vertex(g, v), catalog);
    catalog.insert(key, perfect);
    return perfect;
}

bool is_perfect_definitional(const Graph& g)
{
    PerfectionCatalog catalog;
    return is_perfect_definitional(g, catalog);
}

}  // namespace forkfree
