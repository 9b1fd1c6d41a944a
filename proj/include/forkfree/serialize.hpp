#ifndef FORKFREE_SERIALIZE_HPP
#define FORKFREE_SERIALIZE_HPP

#include "forkfree/coloring.hpp"
#include "forkfree/divisibility.hpp"
#include "forkfree/harness.hpp"
#include "forkfree/patterns.hpp"
#include "forkfree/simplicial.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace forkfree {

using json = nlohmann::ordered_json;

json to_json(VertexSet s);
/// {pattern, vertices, roles}
json to_json(const PatternWitness& w);
/// {vertex, parts: [[...]]}
json to_json(int vertex, const CliqueCover& cover);
/// {palette, colors: [...]}
json to_json(const Coloring& c);
/// {A: [...], B: [...]}
json to_json(const DivisionCertificate& d);
json to_json(const ColoringTrace& t);
/// {theorem, n_range, counts, vacuous_per_n, violations: [{graph6, detail}], seconds, ...}
json to_json(const VerificationReport& r, bool with_timing = true);

std::string binding_table_csv(const std::vector<BindingRow>& rows);

}  // namespace forkfree

#endif
