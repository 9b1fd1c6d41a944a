#ifndef FORKFREE_COLORING_HPP
#define FORKFREE_COLORING_HPP

#include "forkfree/graph.hpp"
#include "forkfree/perfection.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace forkfree {

/// The input lies outside the class a procedure is defined on.
class ClassViolation : public InputError {
public:
    ClassViolation(const std::string& what, std::string witness)
        : InputError(what), witness_(std::move(witness))
    {
    }
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

/// A class member on which a step the procedure relies on is impossible:
/// neither a division nor a trisimplicial vertex exists, or a palette bound
/// fails. Carries the offending (sub)graph in graph6.
class CounterexampleError : public std::runtime_error {
public:
    CounterexampleError(const std::string& what, std::string graph6)
        : std::runtime_error(what + " [" + graph6 + "]"), graph6_(std::move(graph6))
    {
    }
    const std::string& graph6() const { return graph6_; }

private:
    std::string graph6_;
};

/// omega (omega + 1) / 2
int binom_bound(int omega);

struct ColoringStep {
    enum class Kind { BaseCase, Division, Elimination };

    Kind kind = Kind::BaseCase;
    VertexSet scope;   ///< vertices of the subgraph this step works on
    VertexSet a;       ///< division: perfect side
    VertexSet b;       ///< division: side with smaller clique number
    int vertex = -1;   ///< elimination: the trisimplicial vertex
    int offset = 0;    ///< first raw colour available to this step
    int omega = 0;     ///< clique number of the scope
    int colours = 0;   ///< base/division: colours used; elimination: raw colour given
};

std::string to_string(ColoringStep::Kind kind);

struct ColoringTrace {
    Coloring coloring;
    std::vector<ColoringStep> steps;
    int omega = 0;
    int bound = 0;
};

/// Colours a (fork, odd parachute)-free graph with at most binom_bound(omega)
/// colours:
///   - omega <= 3: exact colouring (at most four colours);
///   - a division (A, B) exists: A takes a block of omega fresh colours,
///     B is coloured recursively on the next block;
///   - otherwise a trisimplicial vertex u is removed, the rest coloured
///     recursively and u given the least colour its neighbours miss.
/// Throws ClassViolation outside the class and CounterexampleError when a
/// step cannot be carried out.
ColoringTrace color_structurally(const Graph& g);

/// Re-executes the step log; the result must equal the traced colouring.
Coloring replay(const Graph& g, const std::vector<ColoringStep>& steps);

/// Throws InputError when the colouring does not cover exactly g's vertices.
bool verify_coloring(const Graph& g, const Coloring& c);

}  // namespace forkfree

#endif
