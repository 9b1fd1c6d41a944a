#include "forkfree/harness.hpp"

#include "forkfree/canonical.hpp"
#include "forkfree/coloring.hpp"
#include "forkfree/perfection.hpp"
#include "forkfree/simplicial.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <istream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace forkfree {

// Classes.

namespace {

Forbidden fixed(PatternKind k) { return Forbidden::exactly({k, 0}); }

}  // namespace

ClassSpec class_by_name(std::string_view name)
{
    if (name == "all")
        return {"all", {}};
    if (name == "fork-free")
        return {"fork-free", {fixed(PatternKind::Fork)}};
    if (name == "fork-odd-parachute-free")
        return {"fork-odd-parachute-free", {fixed(PatternKind::Fork), Forbidden::odd(PatternKind::Parachute)}};
    if (name == "fork-odd-balloon-free")
        return {"fork-odd-balloon-free", {fixed(PatternKind::Fork), Forbidden::odd(PatternKind::Balloon)}};
    if (name == "claw-free")
        return {"claw-free", {fixed(PatternKind::Claw)}};
    if (name == "fork-gem-free")
        return {"fork-gem-free", {fixed(PatternKind::Fork), fixed(PatternKind::Gem)}};
    if (name == "3p1-free")
        return {"3p1-free", {fixed(PatternKind::ThreeP1)}};
    if (name == "fork-dart-free")
        return {"fork-dart-free", {fixed(PatternKind::Fork), fixed(PatternKind::Dart)}};
    throw InputError("unknown class '" + std::string(name) + "'");
}

std::vector<std::string> class_names()
{
    return {"all",       "fork-free",     "fork-odd-parachute-free", "fork-odd-balloon-free",
            "claw-free", "fork-gem-free", "3p1-free",                "fork-dart-free"};
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn)
{
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next = count;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int threads = std::min<std::size_t>(workers, count);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(body);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

// Enumeration.

namespace {

std::vector<Graph> extend_tier(const std::vector<Graph>& previous, int n, int workers)
{
    std::unordered_map<std::string, Graph> seen;
    const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    const std::uint64_t new_bit = std::uint64_t{1} << (n - 1);
    constexpr std::size_t kChunk = 512;

    for (std::size_t start = 0; start < previous.size(); start += kChunk) {
        const std::size_t stop = std::min(previous.size(), start + kChunk);
        std::vector<std::vector<std::pair<std::string, Graph>>> found(stop - start);
        parallel_for(stop - start, workers, [&](std::size_t i) {
            const Graph& g = previous[start + i];
            std::set<std::string> local;
            for (std::uint64_t s = 0; s < subsets; ++s) {
                std::vector<std::uint64_t> rows = g.rows();
                for (int v : VertexSet(s))
                    rows[v] |= new_bit;
                rows.push_back(s);
                CanonicalForm form = canonical_form(Graph::from_rows(std::move(rows)));
                std::string key = to_graph6(form.graph);
                if (local.insert(key).second)
                    found[i].emplace_back(std::move(key), std::move(form.graph));
            }
        });
        for (auto& bucket : found)
            for (auto& [key, graph] : bucket)
                seen.try_emplace(std::move(key), std::move(graph));
    }

    std::vector<std::pair<std::string, Graph>> sorted(std::make_move_iterator(seen.begin()),
                                                      std::make_move_iterator(seen.end()));
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(sorted.size());
    for (auto& entry : sorted)
        out.push_back(std::move(entry.second));
    return out;
}

}  // namespace

std::vector<Graph> enumerate(int n, int workers)
{
    GraphCatalog catalog(workers);
    return catalog.tier(n);
}

const std::vector<Graph>& GraphCatalog::tier(int n)
{
    if (n < 0 || n > kEnumerationLimit)
        throw InputError("enumeration supports 0 <= n <= " + std::to_string(kEnumerationLimit) + ", got " +
                         std::to_string(n));
    if (auto it = tiers_.find(n); it != tiers_.end())
        return it->second;
    std::vector<Graph> graphs;
    if (n == 0)
        graphs.push_back(Graph());
    else if (n == 1)
        graphs.push_back(Graph::from_edges(1, {}));
    else
        graphs = extend_tier(tier(n - 1), n, workers_);
    return tiers_.emplace(n, std::move(graphs)).first->second;
}

std::vector<Graph> GraphCatalog::range(int lo, int hi)
{
    std::vector<Graph> out;
    for (int n = lo; n <= hi; ++n) {
        const auto& t = tier(n);
        out.insert(out.end(), t.begin(), t.end());
    }
    return out;
}

std::vector<Graph> ingest_graph6(std::istream& in, bool dedup)
{
    std::vector<Graph> out;
    std::set<CanonicalKey> keys;
    std::string line;
    long number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        Graph g;
        try {
            g = parse_graph_line(line);
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(number) + ": " + e.what());
        }
        if (dedup && !keys.insert(canonical_key(g)).second)
            continue;
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> ingest_graph6_file(const std::string& path, bool dedup)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    return ingest_graph6(in, dedup);
}

// Verification.

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Finding: return "FINDING";
    }
    return "?";
}

std::vector<int> VerificationReport::vacuous_tiers() const
{
    std::vector<int> out;
    for (const auto& [n, c] : per_n)
        if (c.hypothesis == 0)
            out.push_back(n);
    return out;
}

namespace {

struct Outcome {
    bool member = false;
    bool hypothesis = false;
    std::optional<std::string> failure;
    std::vector<std::string> tags;
};

struct Context {
    const VerifyOptions& options;
    DivisibilityCatalog& catalog;
};

using Check = std::function<Outcome(const Graph&, const Context&)>;

struct TheoremDef {
    std::string id;
    std::string statement;
    std::string default_class;
    Check check;
    Verdict on_failure = Verdict::Fail;
};

std::string describe_failing(const Graph& g, DivisibilityCatalog& catalog)
{
    const auto result = check_perfect_divisibility(g, catalog);
    std::ostringstream out;
    if (result.failing) {
        out << "induced subgraph without a division on " << *result.failing << " ("
            << to_graph6(induced_subgraph(g, *result.failing).graph) << ")";
    }
    return out.str();
}

bool nonperfectly_divisible(const Graph& g, const Context& ctx)
{
    if (is_perfect_structural(g))
        return false;
    return !is_perfectly_divisible(g, ctx.catalog);
}

Outcome simplicial_conclusion(const Graph& g, const Context& ctx)
{
    Outcome out;
    out.member = true;
    out.hypothesis = true;
    const int k = ctx.options.simplicial_k;
    if (auto found = find_k_simplicial(g, k)) {
        const int omega = clique_number(g).omega;
        if (k == 3 && g.degree(found->vertex) > 3 * std::max(omega - 1, 0))
            out.failure = "trisimplicial vertex " + std::to_string(found->vertex) +
                          " violates the degree bound";
    } else {
        out.failure = "no vertex is " + std::to_string(k) + "-simplicial; " + describe_failing(g, ctx.catalog);
    }
    return out;
}

Check nonpd_implies_simplicial(std::optional<int> max_omega)
{
    return [max_omega](const Graph& g, const Context& ctx) {
        Outcome out;
        out.member = true;
        if (max_omega && clique_number(g).omega > *max_omega)
            return out;
        if (!find_k_simplicial(g, ctx.options.simplicial_k))
            out.tags.push_back("no-simplicial-vertex");
        if (!nonperfectly_divisible(g, ctx))
            return out;
        return simplicial_conclusion(g, ctx);
    };
}

Outcome chi_bound_check(const Graph& g, const Context&)
{
    Outcome out;
    out.member = true;
    out.hypothesis = true;
    const int omega = clique_number(g).omega;
    const int bound = binom_bound(omega);
    const int chi = chromatic_number(g).chi;
    std::ostringstream problems;
    if (chi > bound)
        problems << "chi " << chi << " exceeds bound " << bound << "; ";
    // Edgeless graphs meet the bound trivially; only omega >= 2 is tagged.
    if (chi == bound && omega >= 2)
        out.tags.push_back("chi-tight");
    try {
        const ColoringTrace trace = color_structurally(g);
        if (!verify_coloring(g, trace.coloring))
            problems << "structural colouring is not proper; ";
        if (trace.coloring.palette > bound)
            problems << "structural palette " << trace.coloring.palette << " exceeds bound " << bound << "; ";
        if (trace.coloring.palette < chi)
            problems << "structural palette below chi; ";
        if (trace.coloring.palette == bound && omega >= 2)
            out.tags.push_back("palette-tight");
        for (const auto& step : trace.steps)
            if (step.kind != ColoringStep::Kind::BaseCase) {
                out.tags.push_back("uses-" + to_string(step.kind));
                break;
            }
    } catch (const CounterexampleError& e) {
        problems << e.what() << "; ";
    }
    if (!problems.str().empty())
        out.failure = problems.str();
    return out;
}

Outcome balloon_check(const Graph& g, const Context& ctx)
{
    Outcome out;
    out.member = true;
    out.hypothesis = true;
    if (!is_perfect_structural(g)) {
        out.tags.push_back("imperfect");
        if (!is_perfectly_divisible(g, ctx.catalog))
            out.failure = "not perfectly divisible; " + describe_failing(g, ctx.catalog);
    }
    return out;
}

Outcome attachment_check(const Graph& g, const Context&)
{
    Outcome out;
    out.member = true;
    if (!find_odd_hole(g))
        return out;
    out.hypothesis = true;
    const auto violations = check_hole_attachments(g);
    if (!violations.empty()) {
        const auto& v = violations.front();
        std::ostringstream d;
        d << violations.size() << " violations; first: hole";
        for (int h : v.hole)
            d << ' ' << h;
        d << ", u=" << v.u << ", v=" << v.v << ", attachment " << v.attachment;
        out.failure = d.str();
    }
    return out;
}

Outcome hunt_check(const Graph& g, const Context& ctx)
{
    Outcome out;
    out.member = true;
    if (!find_k_simplicial(g, ctx.options.simplicial_k))
        out.tags.push_back("no-simplicial-vertex");
    if (!nonperfectly_divisible(g, ctx))
        return out;
    out.hypothesis = true;
    if (!find_k_simplicial(g, ctx.options.simplicial_k))
        out.failure = "neither perfectly divisible nor has a trisimplicial vertex; " +
                      describe_failing(g, ctx.catalog);
    return out;
}

const std::vector<TheoremDef>& theorems()
{
    static const std::vector<TheoremDef> defs = {
        {"trisimplicial",
         "every nonperfectly divisible (fork, odd parachute)-free graph has a trisimplicial vertex",
         "fork-odd-parachute-free", nonpd_implies_simplicial(std::nullopt)},
        {"claw-trisimplicial", "every nonperfectly divisible claw-free graph has a trisimplicial vertex",
         "claw-free", nonpd_implies_simplicial(std::nullopt)},
        {"chi-bound",
         "every (fork, odd parachute)-free graph has chi <= omega(omega+1)/2, "
         "and the structural colouring stays within that palette",
         "fork-odd-parachute-free", chi_bound_check},
        {"balloon-divisible", "every (fork, odd balloon)-free graph is perfectly divisible",
         "fork-odd-balloon-free", balloon_check},
        {"fork-omega3",
         "every nonperfectly divisible fork-free graph with omega <= 3 has a trisimplicial vertex",
         "fork-free", nonpd_implies_simplicial(3)},
        {"hole-attachment",
         "in a fork-free graph, for an odd hole C and an edge uv with u touching C and v anticomplete "
         "to C, N(u) meets C in two consecutive vertices or all of C",
         "fork-free", attachment_check},
        {"hunt",
         "search for fork-free graphs that are neither perfectly divisible nor have a trisimplicial "
         "vertex",
         "fork-free", hunt_check, Verdict::Finding},
    };
    return defs;
}

const TheoremDef& theorem(std::string_view id)
{
    for (const auto& def : theorems())
        if (def.id == id)
            return def;
    throw InputError("unknown theorem '" + std::string(id) + "'");
}

VerificationReport run(const TheoremDef& def, const std::vector<Graph>& stream, const VerifyOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const ClassSpec cls = options.class_override ? *options.class_override : class_by_name(def.default_class);
    DivisibilityCatalog& catalog = options.catalog ? *options.catalog : shared_divisibility_catalog();
    const Context ctx{options, catalog};

    std::vector<Outcome> outcomes(stream.size());
    parallel_for(stream.size(), options.workers, [&](std::size_t i) {
        const Graph& g = stream[i];
        if (!cls.contains(g))
            return;
        outcomes[i] = def.check(g, ctx);
    });

    VerificationReport report;
    report.theorem = def.id;
    report.statement = def.statement;
    if (!stream.empty()) {
        report.n_min = stream.front().order();
        report.n_max = stream.front().order();
    }
    report.notes["class"] = cls.name;
    std::map<std::string, long> tag_counts;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const Graph& g = stream[i];
        const Outcome& o = outcomes[i];
        report.n_min = std::min(report.n_min, g.order());
        report.n_max = std::max(report.n_max, g.order());
        TierCounts& tier = report.per_n[g.order()];
        ++tier.scanned;
        tier.members += o.member;
        tier.hypothesis += o.hypothesis;
        for (const auto& tag : o.tags) {
            if (tag_counts[tag]++ == 0)
                report.notes[tag + ".example"] = to_graph6(g);
        }
        if (o.failure)
            report.violations.push_back({to_graph6(g), *o.failure});
    }
    for (const auto& [tag, count] : tag_counts)
        report.notes[tag] = std::to_string(count);
    for (const auto& [n, c] : report.per_n) {
        report.totals.scanned += c.scanned;
        report.totals.members += c.members;
        report.totals.hypothesis += c.hypothesis;
    }
    report.vacuous = report.totals.hypothesis == 0;
    report.verdict = report.violations.empty() ? Verdict::Pass : def.on_failure;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

std::vector<std::string> theorem_names()
{
    std::vector<std::string> out;
    for (const auto& def : theorems())
        if (def.id != "hunt")
            out.push_back(def.id);
    return out;
}

VerificationReport verify(std::string_view id, const std::vector<Graph>& stream, const VerifyOptions& options)
{
    return run(theorem(id), stream, options);
}

VerificationReport verify_main_theorem(const std::vector<Graph>& stream, const VerifyOptions& options)
{
    return verify("trisimplicial", stream, options);
}

VerificationReport verify_claw_corollary(const std::vector<Graph>& stream, const VerifyOptions& options)
{
    return verify("claw-trisimplicial", stream, options);
}

VerificationReport verify_chi_bound(const std::vector<Graph>& stream, const VerifyOptions& options)
{
    return verify("chi-bound", stream, options);
}

VerificationReport verify_balloon_theorem(const std::vector<Graph>& stream, const VerifyOptions& options)
{
    return verify("balloon-divisible", stream, options);
}

VerificationReport verify_omega3_theorem(const std::vector<Graph>& stream, const VerifyOptions& options)
{
    return verify("fork-omega3", stream, options);
}

VerificationReport verify_hole_attachment(const std::vector<Graph>& stream, const VerifyOptions& options)
{
    return verify("hole-attachment", stream, options);
}

VerificationReport hunt_counterexamples(const std::vector<Graph>& stream, const VerifyOptions& options)
{
    return verify("hunt", stream, options);
}

bool revalidate(std::string_view id, const Violation& v, const VerifyOptions& options)
{
    const TheoremDef& def = theorem(id);
    const Graph g = parse_graph6(v.graph6);
    const ClassSpec cls = options.class_override ? *options.class_override : class_by_name(def.default_class);
    if (!cls.contains(g))
        return false;
    DivisibilityCatalog fresh;
    VerifyOptions local = options;
    local.catalog = &fresh;
    const Context ctx{local, fresh};
    const Outcome o = def.check(g, ctx);
    return o.hypothesis && o.failure.has_value();
}

std::vector<BindingRow> chi_binding_table(const std::vector<Graph>& stream, const ClassSpec& cls, int workers)
{
    struct Entry {
        bool member = false;
        int omega = 0;
        int chi = 0;
    };
    std::vector<Entry> entries(stream.size());
    parallel_for(stream.size(), workers, [&](std::size_t i) {
        const Graph& g = stream[i];
        if (g.order() == 0 || !cls.contains(g))
            return;
        entries[i] = {true, clique_number(g).omega, chromatic_number(g).chi};
    });
    std::map<int, BindingRow> rows;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const Entry& e = entries[i];
        if (!e.member)
            continue;
        BindingRow& row = rows[e.omega];
        row.omega = e.omega;
        ++row.count;
        if (e.chi > row.max_chi) {
            row.max_chi = e.chi;
            row.example = to_graph6(stream[i]);
        }
    }
    std::vector<BindingRow> out;
    for (auto& [omega, row] : rows)
        out.push_back(row);
    return out;
}

}  // namespace forkfree
