#include "forkfree/coloring.hpp"

#include "forkfree/divisibility.hpp"
#include "forkfree/patterns.hpp"
#include "forkfree/simplicial.hpp"

#include <algorithm>

namespace forkfree {

int binom_bound(int omega)
{
    if (omega < 0)
        throw InputError("clique number must be non-negative");
    return omega * (omega + 1) / 2;
}

std::string to_string(ColoringStep::Kind kind)
{
    switch (kind) {
    case ColoringStep::Kind::BaseCase: return "base-case";
    case ColoringStep::Kind::Division: return "perfect-division";
    case ColoringStep::Kind::Elimination: return "trisimplicial-elimination";
    }
    return "?";
}

namespace {

constexpr int kUncoloured = -1;

// Exact colouring of g[scope], written into `raw` shifted by `offset`.
int colour_exactly(const Graph& g, VertexSet scope, int offset, std::vector<int>& raw)
{
    const Subgraph sub = induced_subgraph(g, scope);
    const ChromaticResult chi = chromatic_number(sub.graph);
    for (std::size_t i = 0; i < sub.original.size(); ++i)
        raw[sub.original[i]] = offset + chi.coloring.color[i];
    return chi.chi;
}

int least_free_colour(const Graph& g, int v, VertexSet scope, int offset, const std::vector<int>& raw)
{
    std::vector<bool> taken;
    for (int u : g.neighbors(v) & scope) {
        const int c = raw[u] - offset;
        if (c < 0)
            continue;
        if (static_cast<int>(taken.size()) <= c)
            taken.resize(c + 1, false);
        taken[c] = true;
    }
    int c = 0;
    while (c < static_cast<int>(taken.size()) && taken[c])
        ++c;
    return offset + c;
}

Coloring compact(std::vector<int> raw)
{
    std::vector<int> rename;
    int next = 0;
    for (auto& c : raw) {
        if (c >= static_cast<int>(rename.size()))
            rename.resize(c + 1, -1);
        if (rename[c] < 0)
            rename[c] = next++;
        c = rename[c];
    }
    return {std::move(raw), next};
}

class StructuralColourer {
public:
    explicit StructuralColourer(const Graph& g) : g_(g), raw_(g.order(), kUncoloured) {}

    // Returns the number of raw colours used from `offset` on.
    int colour(VertexSet scope, int offset)
    {
        if (scope.empty())
            return 0;
        const Subgraph sub = induced_subgraph(g_, scope);
        const int omega = clique_number(sub.graph).omega;
        const int bound = binom_bound(omega);

        if (omega <= 3) {
            const int used = colour_exactly(g_, scope, offset, raw_);
            if (used > 4 || used > bound)
                throw CounterexampleError("class member with omega <= 3 needs " + std::to_string(used) +
                                              " colours",
                                          to_graph6(sub.graph));
            steps_.push_back({ColoringStep::Kind::BaseCase, scope, {}, {}, -1, offset, omega, used});
            return used;
        }

        if (auto division = find_division(sub.graph)) {
            const VertexSet a = sub.to_host(division->a);
            const VertexSet b = sub.to_host(division->b);
            const int used_a = colour_exactly(g_, a, offset, raw_);
            if (used_a > omega)
                throw CounterexampleError("perfect side of a division needs more than omega colours",
                                          to_graph6(sub.graph));
            steps_.push_back({ColoringStep::Kind::Division, scope, a, b, -1, offset, omega, used_a});
            const int used_b = colour(b, offset + omega);
            return omega + used_b;
        }

        const auto simplicial = find_trisimplicial(sub.graph);
        if (!simplicial)
            throw CounterexampleError(
                "class member has neither a perfect division nor a trisimplicial vertex",
                to_graph6(sub.graph));
        const int u = sub.original[simplicial->vertex];
        const int degree = (g_.neighbors(u) & scope).size();
        if (degree > 3 * (omega - 1))
            throw std::logic_error("trisimplicial vertex exceeds the degree bound");

        const int rest = colour(scope.without(u), offset);
        const int c = least_free_colour(g_, u, scope, offset, raw_);
        if (c - offset >= bound)
            throw CounterexampleError("no free colour for a trisimplicial vertex within the bound",
                                      to_graph6(sub.graph));
        raw_[u] = c;
        steps_.push_back({ColoringStep::Kind::Elimination, scope, {}, {}, u, offset, omega, c});
        return std::max(rest, c - offset + 1);
    }

    std::vector<int> raw() const { return raw_; }
    std::vector<ColoringStep> steps() const { return steps_; }

private:
    const Graph& g_;
    std::vector<int> raw_;
    std::vector<ColoringStep> steps_;
};

}  // namespace

ColoringTrace color_structurally(const Graph& g)
{
    static const Forbidden kClass[] = {Forbidden::exactly({PatternKind::Fork, 0}),
                                       Forbidden::odd(PatternKind::Parachute)};
    if (auto w = find_forbidden(g, kClass))
        throw ClassViolation("structural colouring needs a (fork, odd parachute)-free graph; found " +
                                 to_string(w->pattern),
                             to_string(w->pattern));
    StructuralColourer colourer(g);
    colourer.colour(g.vertices(), 0);

    ColoringTrace trace;
    trace.coloring = compact(colourer.raw());
    trace.steps = colourer.steps();
    trace.omega = clique_number(g).omega;
    trace.bound = binom_bound(trace.omega);
    if (trace.coloring.palette > trace.bound)
        throw CounterexampleError("structural colouring exceeds the palette bound", to_graph6(g));
    if (!verify_coloring(g, trace.coloring))
        throw std::logic_error("structural colouring is not proper");
    return trace;
}

Coloring replay(const Graph& g, const std::vector<ColoringStep>& steps)
{
    std::vector<int> raw(g.order(), kUncoloured);
    for (const auto& step : steps) {
        switch (step.kind) {
        case ColoringStep::Kind::BaseCase:
            colour_exactly(g, step.scope, step.offset, raw);
            break;
        case ColoringStep::Kind::Division:
            colour_exactly(g, step.a, step.offset, raw);
            break;
        case ColoringStep::Kind::Elimination:
            raw[step.vertex] = least_free_colour(g, step.vertex, step.scope, step.offset, raw);
            break;
        }
    }
    if (std::find(raw.begin(), raw.end(), kUncoloured) != raw.end())
        throw InputError("step log leaves vertices uncoloured");
    return compact(std::move(raw));
}

bool verify_coloring(const Graph& g, const Coloring& c)
{
    if (static_cast<int>(c.color.size()) != g.order())
        throw InputError("colouring has " + std::to_string(c.color.size()) + " entries for " +
                         std::to_string(g.order()) + " vertices");
    for (int v = 0; v < g.order(); ++v) {
        if (c.color[v] < 0 || c.color[v] >= c.palette)
            return false;
        for (int u : g.neighbors(v))
            if (c.color[u] == c.color[v])
                return false;
    }
    return true;
}

}  // namespace forkfree
