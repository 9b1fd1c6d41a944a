#include "forkfree/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace forkfree {

namespace {

using Rows = std::array<std::uint64_t, kCanonicalLimit>;

// Ordered partition of the vertex set, one mask per cell.
struct Partition {
    std::array<std::uint64_t, kCanonicalLimit> cells{};
    int count = 0;

    bool discrete(int n) const { return count == n; }
};

// Splits cells by neighbour counts into other cells until the partition is
// equitable. Every decision depends only on counts and cell positions, so
// the result is label invariant.
void refine(Partition& p, const Rows& rows)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < p.count && !changed; ++s) {
            const std::uint64_t splitter = p.cells[s];
            for (int t = 0; t < p.count; ++t) {
                const std::uint64_t cell = p.cells[t];
                if (std::popcount(cell) == 1)
                    continue;
                std::array<std::uint64_t, kCanonicalLimit + 1> groups{};
                int lo = kCanonicalLimit + 1;
                int hi = -1;
                for (int v : VertexSet(cell)) {
                    const int c = std::popcount(rows[v] & splitter);
                    groups[c] |= std::uint64_t{1} << v;
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                }
                if (lo == hi)
                    continue;
                std::array<std::uint64_t, kCanonicalLimit> split{};
                int parts = 0;
                for (int c = lo; c <= hi; ++c)
                    if (groups[c])
                        split[parts++] = groups[c];
                for (int i = p.count - 1; i > t; --i)
                    p.cells[i + parts - 1] = p.cells[i];
                for (int i = 0; i < parts; ++i)
                    p.cells[t + i] = split[i];
                p.count += parts - 1;
                changed = true;
                break;
            }
        }
    }
}

Partition individualize(const Partition& p, int cell, int v)
{
    Partition out;
    out.count = p.count + 1;
    for (int i = 0; i < cell; ++i)
        out.cells[i] = p.cells[i];
    out.cells[cell] = std::uint64_t{1} << v;
    out.cells[cell + 1] = p.cells[cell] & ~(std::uint64_t{1} << v);
    for (int i = cell + 1; i < p.count; ++i)
        out.cells[i + 1] = p.cells[i];
    return out;
}

using Perm = std::array<int, kCanonicalLimit>;

struct Leaf {
    Perm perm{};  // perm[i] = input vertex at canonical position i
    Rows code{};  // relabelled adjacency rows
};

class Search {
public:
    Search(const Graph& g) : n_(g.order())
    {
        for (int v = 0; v < n_; ++v)
            rows_[v] = g.rows()[v];
    }

    Perm run()
    {
        Partition root;
        if (n_ > 0) {
            root.cells[0] = VertexSet::range(n_).bits();
            root.count = 1;
        }
        visit(root, 0, true);
        return best_.perm;
    }

private:
    static constexpr int kNoJump = -1;

    Leaf make_leaf(const Partition& p) const
    {
        Leaf leaf;
        for (int i = 0; i < n_; ++i)
            leaf.perm[i] = std::countr_zero(p.cells[i]);
        std::array<int, kCanonicalLimit> position{};
        for (int i = 0; i < n_; ++i)
            position[leaf.perm[i]] = i;
        for (int i = 0; i < n_; ++i) {
            std::uint64_t row = 0;
            for (int u : VertexSet(rows_[leaf.perm[i]]))
                row |= std::uint64_t{1} << position[u];
            leaf.code[i] = row;
        }
        return leaf;
    }

    int compare(const Rows& a, const Rows& b) const
    {
        for (int i = 0; i < n_; ++i)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    // Automorphism sending leaf `from` onto leaf `to`.
    Perm automorphism(const Leaf& from, const Leaf& to) const
    {
        Perm gamma{};
        for (int i = 0; i < n_; ++i)
            gamma[from.perm[i]] = to.perm[i];
        return gamma;
    }

    int find(std::array<int, kCanonicalLimit>& parent, int v) const
    {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    }

    // Orbit representatives under the generators fixing the first `depth`
    // vertices of the first path pointwise.
    std::array<int, kCanonicalLimit> orbits(int depth) const
    {
        std::array<int, kCanonicalLimit> parent{};
        std::iota(parent.begin(), parent.begin() + n_, 0);
        for (const auto& gen : generators_) {
            bool fixes = true;
            for (int i = 0; i < depth && fixes; ++i)
                fixes = gen[first_path_[i]] == first_path_[i];
            if (!fixes)
                continue;
            for (int v = 0; v < n_; ++v) {
                const int a = find(parent, v);
                const int b = find(parent, gen[v]);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < n_; ++v)
            parent[v] = find(parent, v);
        return parent;
    }

    // Returns the level a discovered automorphism lets us jump back to,
    // or kNoJump.
    int visit(Partition p, int level, bool on_first_path)
    {
        refine(p, rows_);
        if (p.discrete(n_)) {
            Leaf leaf = make_leaf(p);
            if (!have_first_) {
                have_first_ = true;
                first_ = leaf;
                best_ = leaf;
                first_depth_ = level;
                return kNoJump;
            }
            if (compare(leaf.code, first_.code) == 0) {
                generators_.push_back(automorphism(first_, leaf));
                return common_prefix(level);
            }
            const int cmp = compare(leaf.code, best_.code);
            if (cmp == 0)
                generators_.push_back(automorphism(best_, leaf));
            else if (cmp > 0)
                best_ = leaf;
            return kNoJump;
        }

        int target = 0;
        while (std::popcount(p.cells[target]) == 1)
            ++target;
        const std::uint64_t cell = p.cells[target];

        std::uint64_t explored = 0;
        bool first_child = true;
        for (int w : VertexSet(cell)) {
            if (on_first_path && !first_child) {
                const auto orbit = orbits(level);
                bool redundant = false;
                for (int x : VertexSet(explored))
                    if (orbit[x] == orbit[w])
                        redundant = true;
                if (redundant)
                    continue;
            }
            const bool child_on_first = on_first_path && first_child;
            if (child_on_first)
                first_path_[level] = w;
            path_[level] = w;
            explored |= std::uint64_t{1} << w;
            first_child = false;

            const int jump = visit(individualize(p, target, w), level + 1, child_on_first);
            if (jump != kNoJump && jump < level)
                return jump;
        }
        return kNoJump;
    }

    // Length of the prefix shared by the first path and the current path
    // ending at `depth`.
    int common_prefix(int depth) const
    {
        const int limit = std::min(first_depth_, depth);
        int k = 0;
        while (k < limit && first_path_[k] == path_[k])
            ++k;
        return k;
    }

private:
    int n_;
    Rows rows_{};
    bool have_first_ = false;
    Leaf first_;
    Leaf best_;
    std::vector<Perm> generators_;
    Perm first_path_{};
    Perm path_{};
    int first_depth_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g)
{
    const int n = g.order();
    if (n > kCanonicalLimit)
        throw InputError("canonical labelling supports at most " + std::to_string(kCanonicalLimit) +
                         " vertices, got " + std::to_string(n));
    Search search(g);
    const Perm perm = search.run();
    CanonicalForm out;
    out.labelling.assign(perm.begin(), perm.begin() + n);
    out.graph = relabel(g, out.labelling);
    return out;
}

CanonicalKey canonical_key(const Graph& g)
{
    return CanonicalKey(to_graph6(canonical_form(g).graph));
}

bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    if (a.degree_sequence() != b.degree_sequence())
        return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace forkfree
