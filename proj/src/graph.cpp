#include "forkfree/graph.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

namespace forkfree {

VertexSet::VertexSet(std::initializer_list<int> vertices)
{
    for (int v : vertices) {
        if (v < 0 || v >= kMaxVertices)
            throw InputError("vertex " + std::to_string(v) + " out of range");
        bits_ |= std::uint64_t{1} << v;
    }
}

std::vector<int> VertexSet::to_vector() const
{
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this)
        out.push_back(v);
    return out;
}

std::ostream& operator<<(std::ostream& os, VertexSet s)
{
    os << '{';
    bool first = true;
    for (int v : s) {
        if (!first)
            os << ',';
        os << v;
        first = false;
    }
    return os << '}';
}

namespace {

void check_order(int n)
{
    if (n < 0)
        throw InputError("negative vertex count");
    if (n > kMaxVertices)
        throw InputError("vertex count " + std::to_string(n) + " exceeds limit " +
                         std::to_string(kMaxVertices));
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<Edge>& edges)
{
    check_order(n);
    std::vector<std::uint64_t> rows(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside [0," + std::to_string(n) + ")");
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
    }
    return Graph(std::move(rows));
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows)
{
    const int n = static_cast<int>(rows.size());
    check_order(n);
    const std::uint64_t all = VertexSet::range(n).bits();
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~all)
            throw InputError("row " + std::to_string(v) + " has bits outside the vertex range");
        if ((rows[v] >> v) & 1U)
            throw InputError("self-loop at vertex " + std::to_string(v));
        for (int u : VertexSet(rows[v]))
            if (!((rows[u] >> v) & 1U))
                throw InputError("asymmetric adjacency between " + std::to_string(u) + " and " +
                                 std::to_string(v));
    }
    return Graph(std::move(rows));
}

int Graph::size() const
{
    int twice = 0;
    for (auto r : rows_)
        twice += std::popcount(r);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for (int v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const
{
    std::vector<int> d;
    d.reserve(rows_.size());
    for (int v = 0; v < order(); ++v)
        d.push_back(degree(v));
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

VertexSet Subgraph::to_host(VertexSet local) const
{
    VertexSet out;
    for (int v : local)
        out = out.with(original[v]);
    return out;
}

void check_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                         std::to_string(g.order()));
}

void check_subset(const Graph& g, VertexSet s)
{
    if (!s.is_subset_of(g.vertices()))
        throw InputError("vertex set out of range for graph of order " + std::to_string(g.order()));
}

Subgraph induced_subgraph(const Graph& g, VertexSet s)
{
    check_subset(g, s);
    Subgraph out;
    out.original = s.to_vector();
    std::vector<int> local(g.order(), -1);
    for (std::size_t i = 0; i < out.original.size(); ++i)
        local[out.original[i]] = static_cast<int>(i);
    std::vector<std::uint64_t> rows(out.original.size(), 0);
    for (std::size_t i = 0; i < out.original.size(); ++i)
        for (int u : g.neighbors(out.original[i]) & s)
            rows[i] |= std::uint64_t{1} << local[u];
    out.graph = Graph::from_rows(std::move(rows));
    return out;
}

Graph complement(const Graph& g)
{
    const int n = g.order();
    const std::uint64_t all = g.vertices().bits();
    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < n; ++v)
        rows[v] = all & ~g.rows()[v] & ~(std::uint64_t{1} << v);
    return Graph::from_rows(std::move(rows));
}

Graph delete_vertex(const Graph& g, int v)
{
    check_vertex(g, v);
    return induced_subgraph(g, g.vertices().without(v)).graph;
}

Graph relabel(const Graph& g, const std::vector<int>& perm)
{
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw InputError("permutation length does not match graph order");
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        check_vertex(g, perm[i]);
        if (position[perm[i]] != -1)
            throw InputError("not a permutation");
        position[perm[i]] = i;
    }
    std::vector<std::uint64_t> rows(n, 0);
    for (int i = 0; i < n; ++i)
        for (int u : g.neighbors(perm[i]))
            rows[i] |= std::uint64_t{1} << position[u];
    return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    const int na = a.order();
    check_order(na + b.order());
    std::vector<std::uint64_t> rows(a.rows());
    for (auto r : b.rows())
        rows.push_back(r << na);
    return Graph::from_rows(std::move(rows));
}

Graph join(const Graph& a, const Graph& b)
{
    const int na = a.order();
    const int nb = b.order();
    check_order(na + nb);
    std::vector<std::uint64_t> rows;
    rows.reserve(na + nb);
    const std::uint64_t b_all = VertexSet::range(nb).bits() << na;
    for (auto r : a.rows())
        rows.push_back(r | b_all);
    for (auto r : b.rows())
        rows.push_back((r << na) | VertexSet::range(na).bits());
    return Graph::from_rows(std::move(rows));
}

bool is_complete_to(const Graph& g, VertexSet x, VertexSet y)
{
    check_subset(g, x);
    check_subset(g, y);
    if (x.intersects(y))
        throw InputError("complete/anticomplete test needs disjoint sets");
    for (int v : x)
        if (!y.is_subset_of(g.neighbors(v)))
            return false;
    return true;
}

bool is_anticomplete_to(const Graph& g, VertexSet x, VertexSet y)
{
    check_subset(g, x);
    check_subset(g, y);
    if (x.intersects(y))
        throw InputError("complete/anticomplete test needs disjoint sets");
    for (int v : x)
        if (g.neighbors(v).intersects(y))
            return false;
    return true;
}

bool is_clique(const Graph& g, VertexSet s)
{
    for (int v : s)
        if (!(s.without(v)).is_subset_of(g.neighbors(v)))
            return false;
    return true;
}

bool is_stable(const Graph& g, VertexSet s)
{
    for (int v : s)
        if (g.neighbors(v).intersects(s))
            return false;
    return true;
}

// graph6 / sparse6: see formats.txt shipped with nauty.

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";

std::string_view strip_line(std::string_view line)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    return line;
}

// Decodes N(n) and advances `pos`.
int decode_order(std::string_view s, std::size_t& pos)
{
    auto byte = [&](std::size_t i) -> int {
        if (i >= s.size())
            throw InputError("truncated size header");
        const int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw InputError("invalid character in size header");
        return c - 63;
    };
    const int first = byte(pos);
    if (first < 63) {
        pos += 1;
        return first;
    }
    if (pos + 1 < s.size() && s[pos + 1] == '~')
        throw InputError("vertex count exceeds limit " + std::to_string(kMaxVertices));
    const int n = (byte(pos + 1) << 12) | (byte(pos + 2) << 6) | byte(pos + 3);
    pos += 4;
    if (n > kMaxVertices)
        throw InputError("vertex count " + std::to_string(n) + " exceeds limit " +
                         std::to_string(kMaxVertices));
    return n;
}

void encode_order(int n, std::string& out)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
}

}  // namespace

Graph parse_graph6(std::string_view line)
{
    line = strip_line(line);
    if (line.starts_with(kGraph6Header))
        line.remove_prefix(kGraph6Header.size());
    if (line.empty())
        throw InputError("empty graph6 string");
    std::size_t pos = 0;
    const int n = decode_order(line, pos);
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() - pos != nbytes)
        throw InputError("graph6 body has " + std::to_string(line.size() - pos) +
                         " bytes, expected " + std::to_string(nbytes));
    for (std::size_t b = 0; b < nbytes; ++b) {
        const int c = static_cast<unsigned char>(line[pos + b]);
        if (c < 63 || c > 126)
            throw InputError("invalid graph6 character at offset " + std::to_string(pos + b));
    }
    auto bit_at = [&](std::size_t k) {
        return ((static_cast<unsigned char>(line[pos + k / 6]) - 63) >> (5 - k % 6)) & 1;
    };
    for (std::size_t k = nbits; k < nbytes * 6; ++k)
        if (bit_at(k))
            throw InputError("nonzero graph6 padding bits");

    // Upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
    std::vector<std::uint64_t> rows(n, 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (bit_at(k)) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
        }
    }
    return Graph::from_rows(std::move(rows));
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    encode_order(n, out);
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_sparse6(std::string_view line)
{
    line = strip_line(line);
    if (line.starts_with(kSparse6Header))
        line.remove_prefix(kSparse6Header.size());
    if (line.empty() || line.front() != ':')
        throw InputError("sparse6 string must start with ':'");
    std::size_t pos = 1;
    const int n = decode_order(line, pos);
    int k = 0;
    while ((1 << k) < n)
        ++k;  // bits needed for n-1

    std::vector<int> bits;
    for (std::size_t i = pos; i < line.size(); ++i) {
        const int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw InputError("invalid sparse6 character at offset " + std::to_string(i));
        for (int bit = 5; bit >= 0; --bit)
            bits.push_back(((c - 63) >> bit) & 1);
    }
    std::vector<Edge> edges;
    std::size_t at = 0;
    int v = 0;
    while (at + 1 + k <= bits.size()) {
        const int b = bits[at++];
        int x = 0;
        for (int i = 0; i < k; ++i)
            x = (x << 1) | bits[at++];
        if (b == 1)
            ++v;
        if (v >= n)
            break;
        if (x > v) {
            v = x;
        } else {
            if (x == v)
                throw InputError("sparse6 input contains a self-loop");
            edges.emplace_back(x, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph parse_graph_line(std::string_view line)
{
    line = strip_line(line);
    if (line.starts_with(kSparse6Header) || line.starts_with(":"))
        return parse_sparse6(line);
    return parse_graph6(line);
}

Graph parse_edge_list(std::string_view text)
{
    std::vector<int> numbers;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.resize(hash);
        std::istringstream ls(raw);
        std::string tok;
        while (ls >> tok) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw InputError("edge list: not an integer: '" + tok + "'");
            numbers.push_back(value);
        }
    }
    if (numbers.empty())
        throw InputError("edge list: missing vertex count");
    if ((numbers.size() - 1) % 2 != 0)
        throw InputError("edge list: dangling endpoint");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i + 1 < numbers.size(); i += 2)
        edges.emplace_back(numbers[i], numbers[i + 1]);
    return Graph::from_edges(numbers[0], edges);
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_dot(const Graph& g, VertexSet highlight)
{
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (highlight.contains(v))
            out << " [style=filled, fillcolor=\"#f4a261\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (highlight.contains(u) && highlight.contains(v))
            out << " [penwidth=2.5]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace forkfree
