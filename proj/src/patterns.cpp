#include "forkfree/patterns.hpp"

#include <algorithm>
#include <charconv>

namespace forkfree {

namespace {

bool is_family(PatternKind k)
{
    return k == PatternKind::Wheel || k == PatternKind::Balloon || k == PatternKind::Parachute ||
           k == PatternKind::Hole;
}

std::string_view base_name(PatternKind k)
{
    switch (k) {
    case PatternKind::Claw: return "claw";
    case PatternKind::Fork: return "fork";
    case PatternKind::Paw: return "paw";
    case PatternKind::CoDart: return "co-dart";
    case PatternKind::Bull: return "bull";
    case PatternKind::Gem: return "gem";
    case PatternKind::Dart: return "dart";
    case PatternKind::Path: return "p";
    case PatternKind::ThreeP1: return "3p1";
    case PatternKind::Hole: return "hole";
    case PatternKind::Wheel: return "wheel";
    case PatternKind::Balloon: return "balloon";
    case PatternKind::Parachute: return "parachute";
    case PatternKind::OddHole: return "odd-hole";
    case PatternKind::OddAntihole: return "odd-antihole";
    }
    return "?";
}

std::vector<int> iota_vector(int from, int to)
{
    std::vector<int> out;
    for (int i = from; i < to; ++i)
        out.push_back(i);
    return out;
}

std::vector<Edge> cycle_edges(int len)
{
    std::vector<Edge> e;
    for (int i = 0; i < len; ++i)
        e.emplace_back(i, (i + 1) % len);
    return e;
}

}  // namespace

void validate(PatternId id)
{
    if (id.kind == PatternKind::Path && id.param < 1)
        throw InputError("path pattern needs k >= 1");
    if (is_family(id.kind) && id.param < 4)
        throw InputError(std::string(base_name(id.kind)) + " needs a hole of length >= 4, got " +
                         std::to_string(id.param));
    if (is_family(id.kind) && 2 + id.param > kMaxVertices)
        throw InputError("family parameter too large");
}

std::string to_string(PatternId id)
{
    if (id.kind == PatternKind::Path)
        return "p" + std::to_string(id.param);
    if (is_family(id.kind))
        return std::string(base_name(id.kind)) + "-" + std::to_string(id.param);
    return std::string(base_name(id.kind));
}

PatternId parse_pattern(std::string_view name)
{
    static constexpr PatternKind fixed[] = {
        PatternKind::Claw,    PatternKind::Fork,    PatternKind::Paw,
        PatternKind::CoDart,  PatternKind::Bull,    PatternKind::Gem,
        PatternKind::Dart,    PatternKind::ThreeP1, PatternKind::OddHole,
        PatternKind::OddAntihole,
    };
    for (auto k : fixed)
        if (name == base_name(k))
            return {k, 0};
    if (name == "chair")
        return {PatternKind::Fork, 0};
    auto number = [&](std::string_view digits) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw InputError("unknown pattern '" + std::string(name) + "'");
        return value;
    };
    if (name.size() > 1 && name[0] == 'p' && name[1] >= '0' && name[1] <= '9') {
        PatternId id{PatternKind::Path, number(name.substr(1))};
        validate(id);
        return id;
    }
    for (auto k : {PatternKind::Hole, PatternKind::Wheel, PatternKind::Balloon, PatternKind::Parachute}) {
        const std::string prefix = std::string(base_name(k)) + "-";
        if (name.starts_with(prefix)) {
            PatternId id{k, number(name.substr(prefix.size()))};
            validate(id);
            return id;
        }
    }
    throw InputError("unknown pattern '" + std::string(name) + "'");
}

PatternTemplate pattern_template(PatternId id)
{
    validate(id);
    PatternTemplate t;
    switch (id.kind) {
    case PatternKind::Claw:
        t.graph = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        t.roles = {{"center", {0}}, {"leaves", {1, 2, 3}}};
        break;
    case PatternKind::Fork:
        // claw 0;{1,2,3} with the edge to 3 subdivided by 4
        t.graph = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
        t.roles = {{"center", {0}}, {"leaves", {1, 2}}, {"middle", {3}}, {"tail", {4}}};
        break;
    case PatternKind::Paw:
        t.graph = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        t.roles = {{"triangle", {0, 1, 2}}, {"pendant", {3}}};
        break;
    case PatternKind::CoDart:
        t.graph = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        t.roles = {{"triangle", {0, 1, 2}}, {"pendant", {3}}, {"isolated", {4}}};
        break;
    case PatternKind::Bull:
        t.graph = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
        t.roles = {{"triangle", {0, 1, 2}}, {"horns", {3, 4}}};
        break;
    case PatternKind::Gem:
        t.graph = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
        t.roles = {{"hub", {0}}, {"path", {1, 2, 3, 4}}};
        break;
    case PatternKind::Dart:
        t.graph = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}});
        t.roles = {{"hub", {0}}, {"path", {1, 2, 3}}, {"pendant", {4}}};
        break;
    case PatternKind::Path: {
        std::vector<Edge> e;
        for (int i = 0; i + 1 < id.param; ++i)
            e.emplace_back(i, i + 1);
        t.graph = Graph::from_edges(id.param, e);
        t.roles = {{"path", iota_vector(0, id.param)}};
        break;
    }
    case PatternKind::ThreeP1:
        t.graph = Graph::from_edges(3, {});
        t.roles = {{"stable", {0, 1, 2}}};
        break;
    case PatternKind::Hole:
        t.graph = Graph::from_edges(id.param, cycle_edges(id.param));
        t.roles = {{"hole", iota_vector(0, id.param)}};
        break;
    case PatternKind::Wheel: {
        const int i = id.param;
        auto e = cycle_edges(i);
        for (int h = 0; h < i; ++h)
            e.emplace_back(h, i);
        t.graph = Graph::from_edges(i + 1, e);
        t.roles = {{"hole", iota_vector(0, i)}, {"hub", {i}}};
        break;
    }
    case PatternKind::Balloon: {
        const int i = id.param;
        auto e = cycle_edges(i);
        e.emplace_back(0, i);
        e.emplace_back(1, i);
        e.emplace_back(i, i + 1);
        t.graph = Graph::from_edges(i + 2, e);
        t.roles = {{"hole", iota_vector(0, i)}, {"center", {i}}, {"leaf", {i + 1}}};
        break;
    }
    case PatternKind::Parachute: {
        const int i = id.param;
        auto e = cycle_edges(i);
        for (int h = 0; h < i; ++h)
            e.emplace_back(h, i);
        e.emplace_back(i, i + 1);
        t.graph = Graph::from_edges(i + 2, e);
        t.roles = {{"hole", iota_vector(0, i)}, {"apex", {i}}, {"pendant", {i + 1}}};
        break;
    }
    case PatternKind::OddHole:
    case PatternKind::OddAntihole:
        throw InputError("odd holes and antiholes have no fixed template");
    }
    return t;
}

std::vector<PatternId> figure_patterns()
{
    return {
        {PatternKind::Paw, 0},  {PatternKind::CoDart, 0}, {PatternKind::Bull, 0},
        {PatternKind::Gem, 0},  {PatternKind::Dart, 0},   {PatternKind::Claw, 0},
        {PatternKind::Fork, 0}, {PatternKind::Wheel, 5},
    };
}

VertexSet PatternWitness::vertex_set() const
{
    VertexSet s;
    for (int v : vertices)
        s = s.with(v);
    return s;
}

namespace {

// Backtracking embedding of a small template as an induced subgraph.
class Embedder {
public:
    Embedder(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern)
    {
        const int m = pattern.order();
        anchor_.assign(m, -1);
        for (int p = 1; p < m; ++p) {
            const VertexSet earlier = pattern.neighbors(p) & VertexSet::range(p);
            if (!earlier.empty())
                anchor_[p] = earlier.first();
        }
        map_.assign(m, -1);
    }

    bool run()
    {
        if (pattern_.order() > host_.order())
            return false;
        return extend(0, VertexSet());
    }

    const std::vector<int>& map() const { return map_; }

private:
    bool extend(int p, VertexSet used)
    {
        const int m = pattern_.order();
        if (p == m)
            return true;
        VertexSet candidates = anchor_[p] >= 0 ? host_.neighbors(map_[anchor_[p]]) : host_.vertices();
        candidates = candidates - used;
        const int need = pattern_.degree(p);
        for (int x : candidates) {
            if (host_.degree(x) < need)
                continue;
            bool ok = true;
            for (int q = 0; q < p && ok; ++q)
                ok = host_.adjacent(map_[q], x) == pattern_.adjacent(q, p);
            if (!ok)
                continue;
            map_[p] = x;
            if (extend(p + 1, used.with(x)))
                return true;
        }
        map_[p] = -1;
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    std::vector<int> anchor_;
    std::vector<int> map_;
};

PatternWitness hole_witness(PatternKind kind, const std::vector<int>& cycle)
{
    PatternWitness w;
    w.pattern = {kind, static_cast<int>(cycle.size())};
    w.vertices = cycle;
    w.roles = {{"hole", cycle}};
    return w;
}

}  // namespace

std::optional<PatternWitness> find_induced(const Graph& g, PatternId id)
{
    if (id.kind == PatternKind::OddHole)
        return find_odd_hole(g);
    if (id.kind == PatternKind::OddAntihole)
        return find_odd_antihole(g);
    const PatternTemplate t = pattern_template(id);
    Embedder e(g, t.graph);
    if (!e.run())
        return std::nullopt;
    PatternWitness w;
    w.pattern = id;
    w.vertices = e.map();
    for (const auto& [name, local] : t.roles) {
        auto& mapped = w.roles[name];
        for (int p : local)
            mapped.push_back(w.vertices[p]);
    }
    return w;
}

bool validate_witness(const Graph& g, const PatternWitness& w)
{
    for (int v : w.vertices)
        if (v < 0 || v >= g.order())
            return false;
    if (w.vertex_set().size() != static_cast<int>(w.vertices.size()))
        return false;
    if (w.pattern.kind == PatternKind::OddHole || w.pattern.kind == PatternKind::OddAntihole) {
        const int len = static_cast<int>(w.vertices.size());
        if (len < 5 || len % 2 == 0)
            return false;
        const bool want = w.pattern.kind == PatternKind::OddHole;
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j) {
                const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
                if (g.adjacent(w.vertices[i], w.vertices[j]) != (consecutive == want))
                    return false;
            }
        return true;
    }
    const PatternTemplate t = pattern_template(w.pattern);
    if (static_cast<int>(w.vertices.size()) != t.graph.order())
        return false;
    for (int i = 0; i < t.graph.order(); ++i)
        for (int j = i + 1; j < t.graph.order(); ++j)
            if (g.adjacent(w.vertices[i], w.vertices[j]) != t.graph.adjacent(i, j))
                return false;
    for (const auto& [name, local] : t.roles) {
        auto it = w.roles.find(name);
        if (it == w.roles.end() || it->second.size() != local.size())
            return false;
        for (std::size_t k = 0; k < local.size(); ++k)
            if (it->second[k] != w.vertices[local[k]])
                return false;
    }
    return true;
}

// Holes.

namespace {

bool parity_ok(int len, Parity parity)
{
    switch (parity) {
    case Parity::Any: return true;
    case Parity::Odd: return len % 2 == 1;
    case Parity::Even: return len % 2 == 0;
    }
    return false;
}

// Chordless-path search over adjacency rows restricted to `within`.
class HoleSearch {
public:
    HoleSearch(const std::vector<std::uint64_t>& rows, VertexSet within, int min_length, Parity parity,
               bool collect)
        : rows_(rows), within_(within), min_length_(std::max(min_length, 4)), parity_(parity),
          collect_(collect)
    {
    }

    bool run()
    {
        for (int s : within_) {
            const VertexSet later = within_ & VertexSet(~VertexSet::range(s + 1).bits());
            path_.assign(1, s);
            for (int a : nbr(s) & later) {
                path_.push_back(a);
                // b must avoid s's other neighbours except when closing.
                if (grow(s, later, VertexSet::single(s).with(a)))
                    return true;
                path_.pop_back();
            }
        }
        return false;
    }

    const std::vector<int>& found() const { return path_; }
    std::vector<std::vector<int>>& all() { return all_; }

private:
    VertexSet nbr(int v) const { return VertexSet(rows_[v]) & within_; }

    // blocked: path vertices and neighbours of interior vertices.
    bool grow(int s, VertexSet later, VertexSet blocked)
    {
        const int last = path_.back();
        const int len = static_cast<int>(path_.size());
        VertexSet interior_nbrs;
        if (len >= 2) {
            // neighbours of the new interior vertex path_[len-2] (not s)
            if (len >= 3)
                interior_nbrs = nbr(path_[len - 2]);
        }
        const VertexSet block = blocked | interior_nbrs;
        const VertexSet candidates = (nbr(last) & later) - block;
        for (int x : candidates) {
            if (VertexSet(rows_[x]).contains(s)) {
                const int cycle_len = len + 1;
                if (len >= 3 && cycle_len >= min_length_ && parity_ok(cycle_len, parity_) &&
                    (!collect_ || path_[1] < x)) {
                    path_.push_back(x);
                    if (!collect_)
                        return true;
                    all_.push_back(path_);
                    path_.pop_back();
                }
                continue;
            }
            path_.push_back(x);
            if (grow(s, later, block.with(x)))
                return true;
            path_.pop_back();
        }
        return false;
    }

    const std::vector<std::uint64_t>& rows_;
    VertexSet within_;
    int min_length_;
    Parity parity_;
    bool collect_;
    std::vector<int> path_;
    std::vector<std::vector<int>> all_;
};

std::vector<std::uint64_t> complement_rows(const Graph& g)
{
    const std::uint64_t all = g.vertices().bits();
    std::vector<std::uint64_t> rows(g.order());
    for (int v = 0; v < g.order(); ++v)
        rows[v] = all & ~g.rows()[v] & ~(std::uint64_t{1} << v);
    return rows;
}

}  // namespace

std::optional<std::vector<int>> find_hole_within(const Graph& g, VertexSet within, int min_length,
                                                 Parity parity)
{
    check_subset(g, within);
    HoleSearch search(g.rows(), within, min_length, parity, false);
    if (search.run())
        return search.found();
    return std::nullopt;
}

std::optional<std::vector<int>> find_hole(const Graph& g, int min_length, Parity parity)
{
    return find_hole_within(g, g.vertices(), min_length, parity);
}

std::vector<std::vector<int>> all_holes(const Graph& g, int min_length, Parity parity)
{
    HoleSearch search(g.rows(), g.vertices(), min_length, parity, true);
    search.run();
    return std::move(search.all());
}

std::optional<PatternWitness> find_odd_hole(const Graph& g)
{
    if (auto cycle = find_hole(g, 5, Parity::Odd))
        return hole_witness(PatternKind::OddHole, *cycle);
    return std::nullopt;
}

std::optional<PatternWitness> find_odd_antihole(const Graph& g)
{
    const auto rows = complement_rows(g);
    HoleSearch search(rows, g.vertices(), 5, Parity::Odd, false);
    if (search.run())
        return hole_witness(PatternKind::OddAntihole, search.found());
    return std::nullopt;
}

bool has_odd_hole_within(const Graph& g, VertexSet within)
{
    HoleSearch search(g.rows(), within, 5, Parity::Odd, false);
    return search.run();
}

bool has_odd_antihole_within(const Graph& g, VertexSet within)
{
    const auto rows = complement_rows(g);
    HoleSearch search(rows, within, 5, Parity::Odd, false);
    return search.run();
}

BalloonWitness as_balloon(const PatternWitness& w)
{
    if (w.pattern.kind != PatternKind::Balloon)
        throw InputError("witness is not a balloon");
    const int i = w.pattern.param;
    BalloonWitness b;
    b.hole.assign(w.vertices.begin(), w.vertices.begin() + i);
    b.center = w.vertices[i];
    b.leaf = w.vertices[i + 1];
    return b;
}

ParachuteWitness as_parachute(const PatternWitness& w)
{
    if (w.pattern.kind != PatternKind::Parachute)
        throw InputError("witness is not a parachute");
    const int i = w.pattern.param;
    ParachuteWitness p;
    p.hole.assign(w.vertices.begin(), w.vertices.begin() + i);
    p.apex = w.vertices[i];
    p.pendant = w.vertices[i + 1];
    return p;
}

std::optional<BalloonWitness> find_min_odd_balloon(const Graph& g)
{
    if (!find_hole(g, 5, Parity::Odd))
        return std::nullopt;
    for (int i = 5; i + 2 <= g.order(); i += 2)
        if (auto w = find_induced(g, {PatternKind::Balloon, i}))
            return as_balloon(*w);
    return std::nullopt;
}

std::string to_string(const Forbidden& f)
{
    switch (f.scope) {
    case Forbidden::Scope::Exact: return to_string(PatternId{f.kind, f.param});
    case Forbidden::Scope::Odd: return "odd-" + std::string(base_name(f.kind));
    case Forbidden::Scope::All: return std::string(base_name(f.kind));
    }
    return "?";
}

std::optional<PatternWitness> find_forbidden(const Graph& g, std::span<const Forbidden> patterns)
{
    const int n = g.order();
    // Families built on a hole need an (odd) hole first; cache that test.
    std::optional<bool> odd_hole;
    std::optional<bool> any_hole;
    for (const auto& f : patterns) {
        if (f.scope == Forbidden::Scope::Exact) {
            if (auto w = find_induced(g, {f.kind, f.param}))
                return w;
            continue;
        }
        if (!is_family(f.kind))
            throw InputError("only hole-based families can be quantified");
        const bool odd = f.scope == Forbidden::Scope::Odd;
        auto& cached = odd ? odd_hole : any_hole;
        if (!cached)
            cached = find_hole(g, odd ? 5 : 4, odd ? Parity::Odd : Parity::Any).has_value();
        if (!*cached)
            continue;
        const int extra = f.kind == PatternKind::Hole ? 0 : (f.kind == PatternKind::Wheel ? 1 : 2);
        for (int i = odd ? 5 : 4; i + extra <= n; i += odd ? 2 : 1)
            if (auto w = find_induced(g, {f.kind, i}))
                return w;
    }
    return std::nullopt;
}

bool is_free(const Graph& g, std::span<const Forbidden> patterns)
{
    return !find_forbidden(g, patterns).has_value();
}

bool is_free(const Graph& g, std::initializer_list<Forbidden> patterns)
{
    return is_free(g, std::span<const Forbidden>(patterns.begin(), patterns.size()));
}

std::vector<LemmaViolation> hole_attachment_violations(const Graph& g)
{
    std::vector<LemmaViolation> out;
    for (const auto& hole : all_holes(g, 5, Parity::Odd)) {
        const int len = static_cast<int>(hole.size());
        VertexSet cycle;
        for (int v : hole)
            cycle = cycle.with(v);
        auto allowed = [&](VertexSet att) {
            if (att == cycle)
                return true;
            if (att.size() != 2)
                return false;
            for (int j = 0; j < len; ++j)
                if (att == VertexSet{hole[j], hole[(j + 1) % len]})
                    return true;
            return false;
        };
        const VertexSet outside = g.vertices() - cycle;
        for (int u : outside) {
            const VertexSet att = g.neighbors(u) & cycle;
            if (att.empty() || allowed(att))
                continue;
            for (int v : g.neighbors(u) & outside) {
                if (!g.neighbors(v).intersects(cycle)) {
                    out.push_back({hole, u, v, att});
                }
            }
        }
    }
    return out;
}

std::vector<LemmaViolation> check_hole_attachments(const Graph& g)
{
    if (find_induced(g, {PatternKind::Fork, 0}))
        throw InputError("hole attachment check requires a fork-free graph");
    return hole_attachment_violations(g);
}

}  // namespace forkfree
