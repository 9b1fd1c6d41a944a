#include "forkfree/divisibility.hpp"

#include "forkfree/canonical.hpp"
#include "forkfree/perfection.hpp"

#include <stdexcept>

namespace forkfree {

std::optional<DivisionCertificate> find_division(const Graph& g)
{
    const int n = g.order();
    if (n == 0)
        throw InputError("division needs at least one vertex");
    if (n > kDivisionSearchLimit)
        throw InputError("division search is limited to " + std::to_string(kDivisionSearchLimit) +
                         " vertices");
    const VertexSet all = g.vertices();
    if (is_perfect_structural(g))
        return DivisionCertificate{all, VertexSet()};

    const std::vector<VertexSet> biggest = maximum_cliques(g, all);
    for (int size = n - 1; size >= 1; --size) {
        // subsets of the given size in increasing numeric order (Gosper)
        std::uint64_t a = (std::uint64_t{1} << size) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (a < limit) {
            const VertexSet candidate(a);
            bool hits_all = true;
            for (auto c : biggest)
                if (!c.intersects(candidate)) {
                    hits_all = false;
                    break;
                }
            if (hits_all && is_perfect_structural_within(g, candidate))
                return DivisionCertificate{candidate, all - candidate};
            const std::uint64_t low = a & (~a + 1);
            const std::uint64_t ripple = a + low;
            if (ripple == 0 || ripple >= limit)
                break;
            a = ripple | (((a ^ ripple) >> 2) / low);
        }
    }
    return std::nullopt;
}

bool validate_division(const Graph& g, const DivisionCertificate& cert)
{
    if (cert.a.intersects(cert.b) || (cert.a | cert.b) != g.vertices())
        return false;
    if (!is_perfect_structural_within(g, cert.a))
        return false;
    return clique_number_within(g, cert.b).omega < clique_number(g).omega;
}

DivisibilityCatalog& shared_divisibility_catalog()
{
    static DivisibilityCatalog catalog;
    return catalog;
}

bool is_perfectly_divisible(const Graph& g, DivisibilityCatalog& catalog)
{
    if (g.order() > kDivisibilityLimit)
        throw InputError("perfect divisibility test is limited to " +
                         std::to_string(kDivisibilityLimit) + " vertices");
    if (is_perfect_structural(g))
        return true;
    const CanonicalKey key = canonical_key(g);
    if (auto hit = catalog.find(key))
        return *hit;
    bool divisible = find_division(g).has_value();
    for (int v = 0; divisible && v < g.order(); ++v)
        divisible = is_perfectly_divisible(delete_vertex(g, v), catalog);
    catalog.insert(key, divisible);
    return divisible;
}

bool is_perfectly_divisible(const Graph& g)
{
    return is_perfectly_divisible(g, shared_divisibility_catalog());
}

DivisibilityResult check_perfect_divisibility(const Graph& g, DivisibilityCatalog& catalog)
{
    if (is_perfectly_divisible(g, catalog))
        return {true, std::nullopt};
    // Walk down through non-divisible induced subgraphs until one has no
    // division at all.
    if (!find_division(g))
        return {false, g.vertices()};
    for (int v = 0; v < g.order(); ++v) {
        const Subgraph sub = induced_subgraph(g, g.vertices().without(v));
        if (!is_perfectly_divisible(sub.graph, catalog)) {
            auto inner = check_perfect_divisibility(sub.graph, catalog);
            return {false, sub.to_host(*inner.failing)};
        }
    }
    throw std::logic_error("divisibility catalog is inconsistent");
}

DivisibilityResult check_perfect_divisibility(const Graph& g)
{
    return check_perfect_divisibility(g, shared_divisibility_catalog());
}

}  // namespace forkfree
