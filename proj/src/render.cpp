#include "elgr/render.hpp"

#include "elgr/subsumption.hpp"

namespace elgr {

std::string render(const Concept& c) { return reduce(c).text(); }

std::string render(const Axiom& a) {
  if (a.is_gci()) {
    const auto& g = a.as_gci();
    return render(g.lhs) + " SubClassOf " + render(g.rhs);
  }
  if (a.is_concept_assertion()) {
    const auto& ca = a.as_concept_assertion();
    Concept c = reduce(ca.cls);
    std::string text = c.text();
    if (!c.is_top() && !c.is_name()) text = "(" + text + ")";
    return text + "(" + ca.individual + ")";
  }
  const auto& ra = a.as_role_assertion();
  return ra.role + "(" + ra.subject + ", " + ra.object + ")";
}

std::string render(const Ontology& o) {
  std::string out;
  if (!o.static_part.empty()) {
    out += "[static]\n";
    for (const auto& a : sorted_by_label(o.static_part)) out += render(a) + "\n";
  }
  if (!o.refutable_part.empty()) {
    if (!out.empty()) out += "\n";
    out += "[refutable]\n";
    for (const auto& a : sorted_by_label(o.refutable_part))
      out += render(a) + "\n";
  }
  return out;
}

}  // namespace elgr
