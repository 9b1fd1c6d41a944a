#ifndef FORKFREE_PATTERNS_HPP
#define FORKFREE_PATTERNS_HPP

#include "forkfree/graph.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace forkfree {

enum class PatternKind {
    Claw,
    Fork,
    Paw,
    CoDart,
    Bull,
    Gem,
    Dart,
    Path,       // P_k, param = k
    ThreeP1,
    Hole,       // C_i, param = i >= 4
    Wheel,      // param = hole length i >= 4
    Balloon,    // param = hole length i >= 4
    Parachute,  // param = hole length i >= 4
    OddHole,
    OddAntihole,
};

/// A fixed configuration, or one member of a parametric family.
struct PatternId {
    PatternKind kind = PatternKind::Claw;
    int param = 0;

    bool operator==(const PatternId&) const = default;
};

/// Throws InputError for an inadmissible family parameter.
void validate(PatternId id);
std::string to_string(PatternId id);
/// "fork", "co-dart", "3p1", "p5", "wheel-5", "balloon-7", "odd-hole", ...
PatternId parse_pattern(std::string_view name);

/// Template graph of a pattern with a fixed parameter, and the named roles
/// of its vertices. Not defined for OddHole/OddAntihole.
struct PatternTemplate {
    Graph graph;
    std::map<std::string, std::vector<int>> roles;
};
PatternTemplate pattern_template(PatternId id);

/// Every configuration drawn in the catalogue figure: paw, co-dart, bull,
/// gem, dart, claw, fork and the 5-wheel.
std::vector<PatternId> figure_patterns();

/// An induced occurrence: vertices[i] is the host vertex playing template
/// vertex i. For holes the list is the cycle in order.
struct PatternWitness {
    PatternId pattern;
    std::vector<int> vertices;
    std::map<std::string, std::vector<int>> roles;

    VertexSet vertex_set() const;
};

/// Returns the lexicographically least embedding (in template order).
std::optional<PatternWitness> find_induced(const Graph& g, PatternId id);

/// True when `w` really is an induced occurrence of its pattern in `g`.
bool validate_witness(const Graph& g, const PatternWitness& w);

// Holes. Search runs over chordless paths anchored at the least vertex of
// the cycle; `within` restricts the search to an induced subgraph.

enum class Parity { Any, Odd, Even };

std::optional<std::vector<int>> find_hole(const Graph& g, int min_length = 4,
                                          Parity parity = Parity::Any);
std::optional<std::vector<int>> find_hole_within(const Graph& g, VertexSet within, int min_length,
                                                 Parity parity);
/// Each hole once, as a cycle starting at its least vertex.
std::vector<std::vector<int>> all_holes(const Graph& g, int min_length, Parity parity);

std::optional<PatternWitness> find_odd_hole(const Graph& g);
std::optional<PatternWitness> find_odd_antihole(const Graph& g);
bool has_odd_hole_within(const Graph& g, VertexSet within);
bool has_odd_antihole_within(const Graph& g, VertexSet within);

struct BalloonWitness {
    std::vector<int> hole;  // cyclic order; center sees hole[0], hole[1]
    int center = -1;
    int leaf = -1;
};

struct ParachuteWitness {
    std::vector<int> hole;
    int apex = -1;
    int pendant = -1;
};

BalloonWitness as_balloon(const PatternWitness& w);
ParachuteWitness as_parachute(const PatternWitness& w);

/// Induced odd balloon with the fewest vertices; ties go to the
/// lexicographically least vertex list.
std::optional<BalloonWitness> find_min_odd_balloon(const Graph& g);

/// An entry of a forbidden set: one pattern, or a whole family (every
/// admissible parameter, or every odd one) quantified up to the host order.
struct Forbidden {
    enum class Scope { Exact, Odd, All };

    PatternKind kind;
    int param = 0;
    Scope scope = Scope::Exact;

    static Forbidden exactly(PatternId id) { return {id.kind, id.param, Scope::Exact}; }
    static Forbidden odd(PatternKind k) { return {k, 0, Scope::Odd}; }
    static Forbidden all(PatternKind k) { return {k, 0, Scope::All}; }
};

std::string to_string(const Forbidden& f);

/// First forbidden occurrence found, if any.
std::optional<PatternWitness> find_forbidden(const Graph& g, std::span<const Forbidden> patterns);
bool is_free(const Graph& g, std::span<const Forbidden> patterns);
bool is_free(const Graph& g, std::initializer_list<Forbidden> patterns);

/// A configuration where an odd hole C and an edge uv outside it have u
/// meeting C and v anticomplete to C, but N(u) ∩ V(C) is neither two
/// consecutive hole vertices nor all of V(C).
struct LemmaViolation {
    std::vector<int> hole;
    int u = -1;
    int v = -1;
    VertexSet attachment;
};

/// Checks the attachment rule for edges hanging off odd holes. The input
/// must be fork-free (InputError otherwise); on fork-free graphs the result
/// is expected to be empty.
std::vector<LemmaViolation> check_hole_attachments(const Graph& g);

/// The attachment rule without the fork-free precondition; used to show the
/// rule genuinely depends on it.
std::vector<LemmaViolation> hole_attachment_violations(const Graph& g);

}  // namespace forkfree

#endif
