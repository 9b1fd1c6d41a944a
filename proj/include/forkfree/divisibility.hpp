#ifndef FORKFREE_DIVISIBILITY_HPP
#define FORKFREE_DIVISIBILITY_HPP

#include "forkfree/graph.hpp"
#include "forkfree/memo.hpp"

#include <optional>

namespace forkfree {

/// A partition (A, B) of the vertex set with g[A] perfect and
/// omega(g[B]) < omega(g).
struct DivisionCertificate {
    VertexSet a;
    VertexSet b;

    bool operator==(const DivisionCertificate&) const = default;
};

/// Largest order for which find_division enumerates subsets.
inline constexpr int kDivisionSearchLimit = 20;

/// Candidates A are tried by decreasing size, then increasing bit pattern;
/// A must meet every maximum clique before perfection of g[A] is tested.
/// A perfect graph yields (V, {}). Throws InputError on the empty graph.
std::optional<DivisionCertificate> find_division(const Graph& g);

bool validate_division(const Graph& g, const DivisionCertificate& cert);

/// Largest order accepted by the divisibility test.
inline constexpr int kDivisibilityLimit = kCanonicalLimit;

/// Verdicts per isomorphism class (imperfect classes only; perfect graphs
/// are decided without a lookup).
using DivisibilityCatalog = KeyedMemo<bool>;

/// Process-wide catalog used by the overloads without an explicit one.
DivisibilityCatalog& shared_divisibility_catalog();

struct DivisibilityResult {
    bool divisible = true;
    /// When not divisible: an induced subgraph (host labels) with no division.
    std::optional<VertexSet> failing;
};

bool is_perfectly_divisible(const Graph& g, DivisibilityCatalog& catalog);
bool is_perfectly_divisible(const Graph& g);
DivisibilityResult check_perfect_divisibility(const Graph& g, DivisibilityCatalog& catalog);
DivisibilityResult check_perfect_divisibility(const Graph& g);

}  // namespace forkfree

#endif
