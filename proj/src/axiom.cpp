#include "elgr/axiom.hpp"

#include <algorithm>
#include <cctype>

namespace elgr {

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  const std::string& x = a.str();
  const std::string& y = b.str();
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < x.size() && j < y.size()) {
    if (digit(x[i]) && digit(y[j])) {
      std::size_t i0 = i, j0 = j;
      while (i0 < x.size() && x[i0] == '0') ++i0;
      while (j0 < y.size() && y[j0] == '0') ++j0;
      std::size_t i1 = i0, j1 = j0;
      while (i1 < x.size() && digit(x[i1])) ++i1;
      while (j1 < y.size() && digit(y[j1])) ++j1;
      if (i1 - i0 != j1 - j0) return (i1 - i0) <=> (j1 - j0);
      if (auto c = x.compare(i0, i1 - i0, y, j0, j1 - j0); c != 0)
        return c <=> 0;
      // Same value: fewer leading zeros first keeps the order total.
      if (i1 - i != j1 - j) return (i1 - i) <=> (j1 - j);
      i = i1;
      j = j1;
    } else {
      if (x[i] != y[j]) return x[i] <=> y[j];
      ++i;
      ++j;
    }
  }
  return (x.size() - i) <=> (y.size() - j);
}

Axiom Axiom::gci(Concept lhs, Concept rhs, Label label) {
  return Axiom(std::move(label), Gci{std::move(lhs), std::move(rhs)});
}

Axiom Axiom::assertion(Concept c, std::string individual, Label label) {
  return Axiom(std::move(label),
               ConceptAssertion{std::move(c), std::move(individual)});
}

Axiom Axiom::role_assertion(std::string role, std::string subject,
                            std::string object, Label label) {
  return Axiom(std::move(label), RoleAssertion{std::move(role),
                                               std::move(subject),
                                               std::move(object)});
}

std::optional<Concept> Axiom::generalizable_concept() const {
  if (const auto* g = std::get_if<Gci>(&body_)) return g->rhs;
  if (const auto* ca = std::get_if<ConceptAssertion>(&body_)) return ca->cls;
  return std::nullopt;
}

Axiom Axiom::with_generalizable_concept(Concept c) const {
  if (const auto* g = std::get_if<Gci>(&body_))
    return Axiom(label_, Gci{g->lhs, std::move(c)});
  if (const auto* ca = std::get_if<ConceptAssertion>(&body_))
    return Axiom(label_, ConceptAssertion{std::move(c), ca->individual});
  return *this;
}

Axiom tautology_for(const Axiom& a) {
  if (a.is_gci()) return Axiom::gci(a.as_gci().lhs, Concept::top(), a.label());
  if (a.is_concept_assertion())
    return Axiom::assertion(Concept::top(), a.as_concept_assertion().individual,
                            a.label());
  return Axiom::assertion(Concept::top(), a.as_role_assertion().subject,
                          a.label());
}

std::vector<Axiom> Ontology::all() const {
  std::vector<Axiom> out = static_part;
  out.insert(out.end(), refutable_part.begin(), refutable_part.end());
  return out;
}

const Axiom* Ontology::find(const Label& label) const {
  for (const auto& a : static_part)
    if (a.label() == label) return &a;
  for (const auto& a : refutable_part)
    if (a.label() == label) return &a;
  return nullptr;
}

std::vector<Axiom> sorted_by_label(std::vector<Axiom> axioms) {
  std::stable_sort(axioms.begin(), axioms.end(),
                   [](const Axiom& a, const Axiom& b) { return a.label() < b.label(); });
  return axioms;
}

std::vector<Label> labels_of(const std::vector<Axiom>& axioms) {
  std::vector<Label> out;
  out.reserve(axioms.size());
  for (const auto& a : axioms) out.push_back(a.label());
  return out;
}

}  // namespace elgr
