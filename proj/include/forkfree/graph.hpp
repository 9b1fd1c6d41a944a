#ifndef FORKFREE_GRAPH_HPP
#define FORKFREE_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace forkfree {

/// Hard limit on the number of vertices: one 64-bit word per adjacency row.
inline constexpr int kMaxVertices = 64;

/// Raised for malformed input: bad graph6/sparse6, out-of-range vertices,
/// self-loops, sizes beyond a documented limit.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A set of vertices stored as a 64-bit mask.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vertices);

    /// {0, 1, ..., n-1}
    static constexpr VertexSet range(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    /// Smallest member; undefined on the empty set.
    constexpr int first() const { return std::countr_zero(bits_); }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator&=(VertexSet o)
    {
        bits_ &= o.bits_;
        return *this;
    }

    constexpr bool operator==(const VertexSet&) const = default;

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const;

private:
    std::uint64_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, VertexSet s);

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    /// The empty graph (no vertices).
    Graph() = default;

    /// Throws InputError on out-of-range endpoints, self-loops or n beyond
    /// kMaxVertices. Duplicate edges collapse.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    /// Rows must satisfy the graph invariants (checked).
    static Graph from_rows(std::vector<std::uint64_t> rows);

    int order() const { return static_cast<int>(rows_.size()); }
    int size() const;  // edge count

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
    VertexSet vertices() const { return VertexSet::range(order()); }
    VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
    VertexSet closed_neighbors(int v) const { return neighbors(v).with(v); }
    /// M(v): vertices other than v and its neighbours.
    VertexSet non_neighbors(int v) const { return vertices() - closed_neighbors(v); }
    int degree(int v) const { return std::popcount(rows_[v]); }

    const std::vector<std::uint64_t>& rows() const { return rows_; }
    std::vector<Edge> edges() const;
    std::vector<int> degree_sequence() const;  // non-increasing

    bool operator==(const Graph&) const = default;

private:
    explicit Graph(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {}

    std::vector<std::uint64_t> rows_;
};

/// An induced subgraph together with the map back to host labels:
/// vertex i of `graph` is `original[i]` in the host.
struct Subgraph {
    Graph graph;
    std::vector<int> original;

    VertexSet to_host(VertexSet local) const;
};

Subgraph induced_subgraph(const Graph& g, VertexSet s);
Graph complement(const Graph& g);
Graph delete_vertex(const Graph& g, int v);
/// Relabels so that vertex perm[i] of g becomes vertex i.
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Disjoint union and join, used to build fixtures.
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

void check_vertex(const Graph& g, int v);
void check_subset(const Graph& g, VertexSet s);

/// Every vertex of x is adjacent (resp. non-adjacent) to every vertex of y.
/// x and y must be disjoint.
bool is_complete_to(const Graph& g, VertexSet x, VertexSet y);
bool is_anticomplete_to(const Graph& g, VertexSet x, VertexSet y);
bool is_clique(const Graph& g, VertexSet s);
bool is_stable(const Graph& g, VertexSet s);

// Formats.

Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);
Graph parse_sparse6(std::string_view line);
/// Accepts graph6 or sparse6 (leading ':').
Graph parse_graph_line(std::string_view line);

/// "n\nu v\nu v\n..." with '#' comments allowed.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);
std::string to_dot(const Graph& g, VertexSet highlight = {});

}  // namespace forkfree

#endif
