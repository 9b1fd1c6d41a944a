#include "forkfree/cli.hpp"

#include "forkfree/canonical.hpp"
#include "forkfree/coloring.hpp"
#include "forkfree/divisibility.hpp"
#include "forkfree/harness.hpp"
#include "forkfree/patterns.hpp"
#include "forkfree/perfection.hpp"
#include "forkfree/serialize.hpp"
#include "forkfree/simplicial.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace forkfree::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Graph> load_input(const CliConfig& cfg, std::istream& in, bool allow_enumeration)
{
    const int sources = !cfg.inline_graph.empty() + !cfg.input.empty() + !cfg.edges.empty();
    if (sources > 1)
        throw UsageError("give exactly one input source (inline graph, --input or --edges)");
    if (!cfg.inline_graph.empty())
        return {parse_graph_line(cfg.inline_graph)};
    if (!cfg.input.empty()) {
        if (cfg.input == "-")
            return ingest_graph6(in);
        return ingest_graph6_file(cfg.input);
    }
    if (!cfg.edges.empty()) {
        std::ifstream file(cfg.edges);
        if (!file)
            throw InputError("cannot open '" + cfg.edges + "'");
        std::stringstream text;
        text << file.rdbuf();
        return {parse_edge_list(text.str())};
    }
    if (!allow_enumeration)
        throw UsageError("no input graph given");
    if (cfg.n_max <= 0)
        throw UsageError("give --n (largest order to enumerate) or an input source");
    if (cfg.n_min < 1 || cfg.n_min > cfg.n_max)
        throw UsageError("--n-min must lie in [1, --n]");
    GraphCatalog catalog(cfg.workers);
    return catalog.range(cfg.n_min, cfg.n_max);
}

void check_format(const CliConfig& cfg, std::initializer_list<std::string_view> allowed)
{
    for (auto f : allowed)
        if (cfg.format == f)
            return;
    throw UsageError("format '" + cfg.format + "' is not available for " + cfg.subcommand);
}

// analyze

int analyze(const CliConfig& cfg, const std::vector<Graph>& graphs, std::ostream& out)
{
    check_format(cfg, {"text", "json"});
    json all = json::array();
    for (const Graph& g : graphs) {
        const CliqueResult omega = clique_number(g);
        const ChromaticResult chi = chromatic_number(g);
        const bool perfect = is_perfect_structural(g);
        std::optional<bool> divisible;
        std::optional<DivisionCertificate> division;
        if (g.order() >= 1 && g.order() <= kDivisibilityLimit) {
            divisible = is_perfectly_divisible(g);
            division = find_division(g);
        }
        const VertexSet tri = trisimplicial_vertices(g);

        if (cfg.format == "json") {
            json j = {{"graph6", to_graph6(g)},
                      {"vertices", g.order()},
                      {"edges", g.size()},
                      {"omega", omega.omega},
                      {"clique", to_json(omega.clique)},
                      {"chi", chi.chi},
                      {"coloring", to_json(chi.coloring)},
                      {"perfect", perfect}};
            if (auto h = find_odd_hole(g))
                j["odd_hole"] = to_json(*h);
            if (auto h = find_odd_antihole(g))
                j["odd_antihole"] = to_json(*h);
            j["perfectly_divisible"] = divisible ? json(*divisible) : json(nullptr);
            j["division"] = division ? to_json(*division) : json(nullptr);
            j["trisimplicial"] = to_json(tri);
            if (auto s = find_trisimplicial(g))
                j["trisimplicial_cover"] = to_json(s->vertex, s->cover);
            all.push_back(std::move(j));
            continue;
        }
        out << to_graph6(g) << ": omega=" << omega.omega << " chi=" << chi.chi << ' '
            << (perfect ? "perfect" : "imperfect") << ' '
            << (divisible ? (*divisible ? "perfectly-divisible" : "nonperfectly-divisible")
                          : "divisibility-not-computed")
            << " trisimplicial=" << tri << '\n';
        out << "  vertices " << g.order() << ", edges " << g.size() << '\n';
        out << "  maximum clique " << omega.clique << '\n';
        out << "  colouring";
        for (int c : chi.coloring.color)
            out << ' ' << c;
        out << '\n';
        if (auto h = find_odd_hole(g)) {
            out << "  odd hole";
            for (int v : h->vertices)
                out << ' ' << v;
            out << '\n';
        }
        if (auto h = find_odd_antihole(g)) {
            out << "  odd antihole";
            for (int v : h->vertices)
                out << ' ' << v;
            out << '\n';
        }
        if (division)
            out << "  division A=" << division->a << " B=" << division->b << '\n';
        else if (divisible)
            out << "  no division\n";
        if (auto s = find_trisimplicial(g)) {
            out << "  least trisimplicial vertex " << s->vertex << ", cliques";
            for (auto p : s->cover.parts)
                out << ' ' << p;
            out << '\n';
        }
    }
    if (cfg.format == "json")
        out << (graphs.size() == 1 ? all.front() : all).dump(2) << '\n';
    return kExitOk;
}

// patterns

std::vector<PatternWitness> all_occurrences(const Graph& g)
{
    std::vector<PatternWitness> found;
    auto probe = [&](PatternId id) {
        if (auto w = find_induced(g, id))
            found.push_back(std::move(*w));
    };
    for (auto id : figure_patterns())
        probe(id);
    probe({PatternKind::ThreeP1, 0});
    probe({PatternKind::OddHole, 0});
    probe({PatternKind::OddAntihole, 0});
    for (int i = 4; i + 1 <= g.order(); ++i)
        if (i != 5)
            probe({PatternKind::Wheel, i});
    for (int i = 4; i + 2 <= g.order(); ++i) {
        probe({PatternKind::Balloon, i});
        probe({PatternKind::Parachute, i});
    }
    return found;
}

int patterns(const CliConfig& cfg, const std::vector<Graph>& graphs, std::ostream& out)
{
    check_format(cfg, {"text", "json", "dot"});
    json all = json::array();
    for (const Graph& g : graphs) {
        const auto found = all_occurrences(g);
        if (cfg.format == "json") {
            json list = json::array();
            for (const auto& w : found)
                list.push_back(to_json(w));
            all.push_back({{"graph6", to_graph6(g)}, {"occurrences", list}});
            continue;
        }
        if (cfg.format == "dot") {
            for (const auto& w : found)
                out << "// " << to_string(w.pattern) << '\n' << to_dot(g, w.vertex_set());
            continue;
        }
        out << to_graph6(g) << ": " << found.size() << " configurations\n";
        for (const auto& w : found) {
            out << "  " << to_string(w.pattern) << ':';
            for (int v : w.vertices)
                out << ' ' << v;
            for (const auto& [role, vs] : w.roles) {
                out << "  " << role << '=';
                for (std::size_t i = 0; i < vs.size(); ++i)
                    out << (i ? "," : "") << vs[i];
            }
            out << '\n';
        }
    }
    if (cfg.format == "json")
        out << (graphs.size() == 1 ? all.front() : all).dump(2) << '\n';
    return kExitOk;
}

// color

int color(const CliConfig& cfg, const std::vector<Graph>& graphs, std::ostream& out)
{
    check_format(cfg, {"text", "json"});
    json all = json::array();
    for (const Graph& g : graphs) {
        const ColoringTrace trace = color_structurally(g);
        const int chi = chromatic_number(g).chi;
        if (cfg.format == "json") {
            json j = to_json(trace);
            j["graph6"] = to_graph6(g);
            j["chi"] = chi;
            all.push_back(std::move(j));
            continue;
        }
        out << to_graph6(g) << ": palette=" << trace.coloring.palette << " bound=" << trace.bound
            << " chi=" << chi << " omega=" << trace.omega << '\n';
        out << "  colours";
        for (int c : trace.coloring.color)
            out << ' ' << c;
        out << '\n';
        for (const auto& s : trace.steps) {
            out << "  " << to_string(s.kind) << " scope=" << s.scope << " omega=" << s.omega
                << " offset=" << s.offset;
            if (s.kind == ColoringStep::Kind::Division)
                out << " A=" << s.a << " B=" << s.b << " colours=" << s.colours;
            else if (s.kind == ColoringStep::Kind::Elimination)
                out << " vertex=" << s.vertex << " colour=" << s.colours;
            else
                out << " colours=" << s.colours;
            out << '\n';
        }
    }
    if (cfg.format == "json")
        out << (graphs.size() == 1 ? all.front() : all).dump(2) << '\n';
    return kExitOk;
}

// verify / hunt

void print_report(const VerificationReport& r, std::ostream& out)
{
    out << r.theorem << ": " << to_string(r.verdict) << '\n';
    out << "  " << r.statement << '\n';
    out << "  class " << r.notes.at("class") << ", orders " << r.n_min << ".." << r.n_max << '\n';
    for (const auto& [n, c] : r.per_n) {
        out << "  n=" << n << " scanned=" << c.scanned << " members=" << c.members
            << " hypothesis=" << c.hypothesis << (c.hypothesis == 0 ? " (vacuous)" : "") << '\n';
    }
    out << "  total scanned=" << r.totals.scanned << " members=" << r.totals.members
        << " hypothesis=" << r.totals.hypothesis << (r.vacuous ? " (vacuous)" : "") << '\n';
    for (const auto& [k, v] : r.notes)
        if (k != "class")
            out << "  " << k << ": " << v << '\n';
    out << "  violations: " << r.violations.size() << '\n';
    for (const auto& v : r.violations)
        out << "    " << v.graph6 << "  " << v.detail << '\n';
}

int report_exit(const VerificationReport& r)
{
    switch (r.verdict) {
    case Verdict::Pass: return kExitOk;
    case Verdict::Fail: return kExitViolation;
    case Verdict::Finding: return kExitFinding;
    }
    return kExitViolation;
}

int verify_cmd(const CliConfig& cfg, const std::vector<Graph>& graphs, std::ostream& out)
{
    check_format(cfg, {"text", "json"});
    VerifyOptions options;
    options.workers = cfg.workers;
    if (!cfg.class_name.empty())
        options.class_override = class_by_name(cfg.class_name);
    options.simplicial_k = cfg.simplicial_k;
    const bool hunting = cfg.subcommand == "hunt";
    const VerificationReport r =
        hunting ? hunt_counterexamples(graphs, options) : verify(cfg.theorem, graphs, options);
    if (cfg.format == "json") {
        out << to_json(r).dump(2) << '\n';
    } else {
        print_report(r, out);
        const bool enumerated = cfg.inline_graph.empty() && cfg.input.empty() && cfg.edges.empty();
        if (hunting && r.violations.empty()) {
            if (enumerated)
                out << "no counterexample below " << r.n_max + 1 << " vertices\n";
            else
                out << "no counterexample among " << r.totals.scanned << " graphs\n";
        }
    }
    return report_exit(r);
}

// table

int table(const CliConfig& cfg, const std::vector<Graph>& graphs, std::ostream& out)
{
    check_format(cfg, {"text", "csv", "json"});
    const ClassSpec cls = class_by_name(cfg.class_name.empty() ? "3p1-free" : cfg.class_name);
    const auto rows = chi_binding_table(graphs, cls, cfg.workers);
    if (cfg.format == "csv") {
        out << binding_table_csv(rows);
    } else if (cfg.format == "json") {
        json j = json::array();
        for (const auto& r : rows)
            j.push_back({{"omega", r.omega}, {"max_chi", r.max_chi}, {"count", r.count}, {"example", r.example}});
        out << json{{"class", cls.name}, {"rows", j}}.dump(2) << '\n';
    } else {
        out << "class " << cls.name << '\n'
            << std::setw(6) << "omega" << std::setw(9) << "max_chi" << std::setw(14) << "C(omega+1,2)"
            << std::setw(9) << "graphs" << "  example\n";
        for (const auto& r : rows)
            out << std::setw(6) << r.omega << std::setw(9) << r.max_chi << std::setw(14) << binom_bound(r.omega)
                << std::setw(9) << r.count << "  " << r.example << '\n';
    }
    return kExitOk;
}

// convert

int convert(const CliConfig& cfg, const std::vector<Graph>& graphs, std::ostream& out)
{
    check_format(cfg, {"text", "graph6", "edges", "dot", "json"});
    for (const Graph& g : graphs) {
        if (cfg.format == "text" || cfg.format == "graph6")
            out << to_graph6(g) << '\n';
        else if (cfg.format == "edges")
            out << to_edge_list(g);
        else if (cfg.format == "dot")
            out << to_dot(g);
        else
            out << json{{"graph6", to_graph6(g)}, {"n", g.order()}, {"edges", g.edges()}}.dump() << '\n';
    }
    return kExitOk;
}

int dispatch(const CliConfig& cfg, std::istream& in, std::ostream& out)
{
    const bool enumerates = cfg.subcommand == "verify" || cfg.subcommand == "hunt" || cfg.subcommand == "table";
    const std::vector<Graph> graphs = load_input(cfg, in, enumerates);
    if (cfg.subcommand == "analyze")
        return analyze(cfg, graphs, out);
    if (cfg.subcommand == "patterns")
        return patterns(cfg, graphs, out);
    if (cfg.subcommand == "color")
        return color(cfg, graphs, out);
    if (cfg.subcommand == "verify" || cfg.subcommand == "hunt")
        return verify_cmd(cfg, graphs, out);
    if (cfg.subcommand == "table")
        return table(cfg, graphs, out);
    if (cfg.subcommand == "convert")
        return convert(cfg, graphs, out);
    throw UsageError("unknown subcommand");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CliConfig cfg;
    CLI::App app{"Structure of fork-free graphs: patterns, divisibility, colouring and exhaustive checks",
                 "forkfree"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_inline) {
        if (with_inline)
            sub->add_option("graph", cfg.inline_graph, "graph6 or sparse6 string");
        sub->add_option("--input", cfg.input, "file of graph6 lines, '-' for stdin");
        sub->add_option("--edges", cfg.edges, "edge-list file: n, then one 'u v' per line");
        sub->add_option("--format", cfg.format, "text | json | csv | dot | graph6 | edges");
        sub->add_option("--out", cfg.out, "write output here instead of stdout");
        sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    };
    auto add_range = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n_max, "largest order to enumerate")->check(CLI::Range(1, kEnumerationLimit));
        sub->add_option("--n-min", cfg.n_min, "smallest order to enumerate")->check(CLI::Range(1, kEnumerationLimit));
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "omega, chi, perfection, divisibility, trisimplicial vertices");
    add_common(analyze_cmd, true);
    auto* patterns_cmd = app.add_subcommand("patterns", "list induced configurations");
    add_common(patterns_cmd, true);
    auto* color_cmd = app.add_subcommand("color", "structural colouring with its step log");
    add_common(color_cmd, true);
    auto* verify_sub = app.add_subcommand("verify", "check a theorem over enumerated or ingested graphs");
    std::string theorem_help = "one of:";
    for (const auto& t : theorem_names())
        theorem_help += " " + t;
    verify_sub->add_option("theorem", cfg.theorem, theorem_help)->required()->check(CLI::IsMember(theorem_names()));
    add_common(verify_sub, false);
    add_range(verify_sub);
    verify_sub->add_option("--class", cfg.class_name, "override the class the statement is checked on")
        ->check(CLI::IsMember(class_names()));
    verify_sub->add_option("--simplicial-k", cfg.simplicial_k, "cliques allowed when searching for a simplicial vertex")
        ->check(CLI::Range(1, 3));
    auto* hunt_cmd = app.add_subcommand("hunt", "search fork-free graphs for counterexamples to the open problem");
    add_common(hunt_cmd, false);
    add_range(hunt_cmd);
    auto* table_cmd = app.add_subcommand("table", "largest chi per omega over a class");
    add_common(table_cmd, false);
    add_range(table_cmd);
    table_cmd->add_option("--class", cfg.class_name, "graph class")->check(CLI::IsMember(class_names()));
    auto* convert_cmd = app.add_subcommand("convert", "transcode graphs between formats");
    add_common(convert_cmd, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
    for (auto* sub : app.get_subcommands())
        cfg.subcommand = sub->get_name();

    try {
        std::ofstream file;
        std::ostream* sink = &out;
        if (!cfg.out.empty()) {
            file.open(cfg.out);
            if (!file)
                throw InputError("cannot write '" + cfg.out + "'");
            sink = &file;
        }
        return dispatch(cfg, in, *sink);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CounterexampleError& e) {
        err << "counterexample: " << e.what() << '\n';
        return kExitViolation;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    }
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    return run(std::vector<std::string>(argv, argv + argc), in, out, err);
}

}  // namespace forkfree::cli
