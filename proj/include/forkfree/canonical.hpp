#ifndef FORKFREE_CANONICAL_HPP
#define FORKFREE_CANONICAL_HPP

#include "forkfree/graph.hpp"

#include <string>
#include <vector>

namespace forkfree {

/// Largest order for which canonical labelling is offered. The search is
/// exact for any order but its worst case grows quickly beyond this.
inline constexpr int kCanonicalLimit = 12;

/// Byte string equal for two graphs exactly when they are isomorphic.
/// Holds the graph6 encoding of the canonical form.
class CanonicalKey {
public:
    CanonicalKey() = default;
    explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const { return bytes_; }
    auto operator<=>(const CanonicalKey&) const = default;

private:
    std::string bytes_;
};

struct CanonicalForm {
    Graph graph;  ///< relabelled so that vertex i is labelling[i] of the input
    std::vector<int> labelling;
};

/// Individualisation-refinement over an equitable partition, pruned with
/// automorphisms discovered along the way. Throws InputError above
/// kCanonicalLimit.
CanonicalForm canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace forkfree

template <>
struct std::hash<forkfree::CanonicalKey> {
    std::size_t operator()(const forkfree::CanonicalKey& k) const noexcept
    {
        return std::hash<std::string>{}(k.bytes());
    }
};

#endif
