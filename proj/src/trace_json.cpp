#include "elgr/trace_json.hpp"

#include "elgr/render.hpp"

namespace elgr {

using nlohmann::json;

json axiom_json(const Axiom& a) { return {{"label", a.label().str()}, {"text", render(a)}}; }

json axioms_json(const std::vector<Axiom>& axioms) {
  json out = json::array();
  for (const auto& a : sorted_by_label(axioms)) out.push_back(axiom_json(a));
  return out;
}

json ontology_json(const Ontology& o) {
  return {{"static", axioms_json(o.static_part)}, {"refutable", axioms_json(o.refutable_part)}};
}

json labels_json(const std::vector<Label>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(l.str());
  return out;
}

json trace_json(const RepairTrace& trace) {
  json iterations = json::array();
  for (const auto& step : trace.iterations) {
    json justs = json::array();
    for (const auto& j : step.justifications) justs.push_back(labels_json(j.labels()));
    json reps = json::array();
    for (const auto& r : step.replacements)
      reps.push_back({{"label", r.label.str()},
                      {"old", render(r.old_axiom)},
                      {"new", r.new_axiom ? json(render(*r.new_axiom)) : json(nullptr)}});
    iterations.push_back({{"justifications", std::move(justs)},
                          {"hitting_set", labels_json(step.hitting_set)},
                          {"replacements", std::move(reps)},
                          {"entailed_after", step.entailed_after}});
  }
  return {{"algorithm", to_string(trace.algorithm)},
          {"weakening", to_string(trace.weakening)},
          {"iterations", std::move(iterations)},
          {"final", ontology_json(trace.final_ontology)},
          {"iteration_count", trace.iteration_count}};
}

}  // namespace elgr
