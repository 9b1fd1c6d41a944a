#ifndef FORKFREE_HARNESS_HPP
#define FORKFREE_HARNESS_HPP

#include "forkfree/divisibility.hpp"
#include "forkfree/graph.hpp"
#include "forkfree/patterns.hpp"

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace forkfree {

/// A hereditary class given by forbidden induced subgraphs.
struct ClassSpec {
    std::string name;
    std::vector<Forbidden> forbidden;

    bool contains(const Graph& g) const { return is_free(g, forbidden); }
};

/// "all", "fork-free", "fork-odd-parachute-free", "fork-odd-balloon-free",
/// "claw-free", "fork-gem-free", "3p1-free", "fork-dart-free".
ClassSpec class_by_name(std::string_view name);
std::vector<std::string> class_names();

// Enumeration.

/// Largest order enumerate() accepts.
inline constexpr int kEnumerationLimit = 10;

/// One representative (the canonical form) per isomorphism class of graphs
/// on n vertices, sorted by canonical key. Built by adding a vertex with
/// every possible neighbourhood to each class on n-1 vertices.
std::vector<Graph> enumerate(int n, int workers = 1);

/// Caches tiers so repeated runs share the work.
class GraphCatalog {
public:
    explicit GraphCatalog(int workers = 1) : workers_(workers) {}

    const std::vector<Graph>& tier(int n);
    /// Tiers lo..hi concatenated in order.
    std::vector<Graph> range(int lo, int hi);

private:
    int workers_;
    std::map<int, std::vector<Graph>> tiers_;
};

/// One graph6 (or sparse6) line per graph; blank lines and lines starting
/// with '#' are skipped. Parse failures throw InputError naming the line.
std::vector<Graph> ingest_graph6(std::istream& in, bool dedup = false);
std::vector<Graph> ingest_graph6_file(const std::string& path, bool dedup = false);

// Verification.

struct TierCounts {
    long scanned = 0;
    long members = 0;     // graphs in the class
    long hypothesis = 0;  // members satisfying the hypothesis
};

struct Violation {
    std::string graph6;
    std::string detail;

    bool operator==(const Violation&) const = default;
};

enum class Verdict { Pass, Fail, Finding };
std::string to_string(Verdict v);

struct VerificationReport {
    std::string theorem;
    std::string statement;
    int n_min = 0;
    int n_max = 0;
    std::map<int, TierCounts> per_n;
    TierCounts totals;
    bool vacuous = true;
    std::vector<Violation> violations;
    std::map<std::string, std::string> notes;
    double seconds = 0;
    Verdict verdict = Verdict::Pass;

    std::vector<int> vacuous_tiers() const;
};

/// Knobs for experiments on the harness itself.
struct VerifyOptions {
    int workers = 1;
    /// Clique count used when searching for a simplicial vertex. Lowering it
    /// to 2 disables the trisimplicial case (fault injection).
    int simplicial_k = 3;
    /// Replaces the class a theorem is stated for (planted fixtures).
    std::optional<ClassSpec> class_override;
    DivisibilityCatalog* catalog = nullptr;
};

/// Theorem identifiers accepted by verify():
///   trisimplicial       (fork, odd parachute)-free and not perfectly
///                       divisible => trisimplicial vertex
///   claw-trisimplicial  claw-free and not perfectly divisible =>
///                       trisimplicial vertex
///   chi-bound           (fork, odd parachute)-free => chi <= C(omega+1, 2),
///                       also for the structural colouring
///   balloon-divisible   (fork, odd balloon)-free => perfectly divisible
///   fork-omega3         fork-free, omega <= 3, not perfectly divisible =>
///                       trisimplicial vertex
///   hole-attachment     the odd-hole attachment rule on fork-free graphs
std::vector<std::string> theorem_names();

VerificationReport verify(std::string_view theorem, const std::vector<Graph>& stream,
                          const VerifyOptions& options = {});

VerificationReport verify_main_theorem(const std::vector<Graph>& stream, const VerifyOptions& options = {});
VerificationReport verify_claw_corollary(const std::vector<Graph>& stream, const VerifyOptions& options = {});
VerificationReport verify_chi_bound(const std::vector<Graph>& stream, const VerifyOptions& options = {});
VerificationReport verify_balloon_theorem(const std::vector<Graph>& stream, const VerifyOptions& options = {});
VerificationReport verify_omega3_theorem(const std::vector<Graph>& stream, const VerifyOptions& options = {});
VerificationReport verify_hole_attachment(const std::vector<Graph>& stream, const VerifyOptions& options = {});

/// Fork-free graphs that are neither perfectly divisible nor have a
/// trisimplicial vertex. Any hit answers an open question; verdict Finding.
VerificationReport hunt_counterexamples(const std::vector<Graph>& stream, const VerifyOptions& options = {});

/// Re-derives a violation from its graph6 string alone: class membership,
/// hypothesis and failure of the conclusion. True when it reproduces.
bool revalidate(std::string_view theorem, const Violation& v, const VerifyOptions& options = {});

struct BindingRow {
    int omega = 0;
    int max_chi = 0;
    long count = 0;
    std::string example;  // graph6 of a graph reaching max_chi
};

/// Largest chromatic number observed for each clique number in the class.
std::vector<BindingRow> chi_binding_table(const std::vector<Graph>& stream, const ClassSpec& cls,
                                          int workers = 1);

/// Runs fn(i) for i in [0, count) on up to `workers` threads.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace forkfree

#endif
