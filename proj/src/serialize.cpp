#include "forkfree/serialize.hpp"

#include <sstream>

namespace forkfree {

json to_json(VertexSet s)
{
    return s.to_vector();
}

json to_json(const PatternWitness& w)
{
    json roles = json::object();
    for (const auto& [name, vertices] : w.roles)
        roles[name] = vertices;
    return {{"pattern", to_string(w.pattern)}, {"vertices", w.vertices}, {"roles", roles}};
}

json to_json(int vertex, const CliqueCover& cover)
{
    json parts = json::array();
    for (auto p : cover.parts)
        parts.push_back(to_json(p));
    return {{"vertex", vertex}, {"parts", parts}};
}

json to_json(const Coloring& c)
{
    return {{"palette", c.palette}, {"colors", c.color}};
}

json to_json(const DivisionCertificate& d)
{
    return {{"A", to_json(d.a)}, {"B", to_json(d.b)}};
}

json to_json(const ColoringTrace& t)
{
    json steps = json::array();
    for (const auto& s : t.steps) {
        json step = {{"kind", to_string(s.kind)}, {"scope", to_json(s.scope)}, {"offset", s.offset},
                     {"omega", s.omega}};
        switch (s.kind) {
        case ColoringStep::Kind::BaseCase:
            step["colours"] = s.colours;
            break;
        case ColoringStep::Kind::Division:
            step["A"] = to_json(s.a);
            step["B"] = to_json(s.b);
            step["colours"] = s.colours;
            break;
        case ColoringStep::Kind::Elimination:
            step["vertex"] = s.vertex;
            step["colour"] = s.colours;
            break;
        }
        steps.push_back(std::move(step));
    }
    return {{"omega", t.omega}, {"bound", t.bound}, {"coloring", to_json(t.coloring)}, {"steps", steps}};
}

json to_json(const VerificationReport& r, bool with_timing)
{
    json per_n = json::object();
    json vacuous = json::object();
    for (const auto& [n, c] : r.per_n) {
        per_n[std::to_string(n)] = {{"scanned", c.scanned}, {"members", c.members}, {"hypothesis", c.hypothesis}};
        vacuous[std::to_string(n)] = c.hypothesis == 0;
    }
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"graph6", v.graph6}, {"detail", v.detail}});
    json notes = json::object();
    for (const auto& [k, v] : r.notes)
        notes[k] = v;
    json out = {
        {"theorem", r.theorem},
        {"statement", r.statement},
        {"verdict", to_string(r.verdict)},
        {"n_range", {r.n_min, r.n_max}},
        {"counts",
         {{"scanned", r.totals.scanned},
          {"members", r.totals.members},
          {"hypothesis", r.totals.hypothesis},
          {"vacuous", r.vacuous},
          {"per_n", per_n}}},
        {"vacuous_per_n", vacuous},
        {"violations", violations},
        {"notes", notes},
    };
    if (with_timing)
        out["seconds"] = r.seconds;
    return out;
}

std::string binding_table_csv(const std::vector<BindingRow>& rows)
{
    std::ostringstream out;
    out << "omega,max_chi,count,example_graph6\n";
    for (const auto& r : rows)
        out << r.omega << ',' << r.max_chi << ',' << r.count << ',' << r.example << '\n';
    return out.str();
}

}  // namespace forkfree
