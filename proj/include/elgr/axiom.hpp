#ifndef ELGR_AXIOM_HPP
#define ELGR_AXIOM_HPP

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "elgr/concept.hpp"

namespace elgr {

/// Stable axiom identifier. A weakened axiom keeps the label of the axiom it
/// replaces.
///
/// Labels order naturally: runs of digits compare numerically, so r2 < r10.
class Label {
 public:
  Label() = default;
  explicit Label(std::string value) : value_(std::move(value)) {}

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend bool operator==(const Label& a, const Label& b) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b);

 private:
  std::string value_;
};

struct Gci {
  Concept lhs;
  Concept rhs;
};

struct ConceptAssertion {
  Concept cls;
  std::string individual;
};

struct RoleAssertion {
  std::string role;
  std::string subject;
  std::string object;
};

using AxiomBody = std::variant<Gci, ConceptAssertion, RoleAssertion>;

class Axiom {
 public:
  Axiom() = default;
  Axiom(Label label, AxiomBody body)
      : label_(std::move(label)), body_(std::move(body)) {}

  static Axiom gci(Concept lhs, Concept rhs, Label label = {});
  static Axiom assertion(Concept c, std::string individual, Label label = {});
  static Axiom role_assertion(std::string role, std::string subject,
                              std::string object, Label label = {});

  const Label& label() const { return label_; }
  const AxiomBody& body() const { return body_; }

  bool is_gci() const { return std::holds_alternative<Gci>(body_); }
  bool is_concept_assertion() const {
    return std::holds_alternative<ConceptAssertion>(body_);
  }
  bool is_role_assertion() const {
    return std::holds_alternative<RoleAssertion>(body_);
  }

  const Gci& as_gci() const { return std::get<Gci>(body_); }
  const ConceptAssertion& as_concept_assertion() const {
    return std::get<ConceptAssertion>(body_);
  }
  const RoleAssertion& as_role_assertion() const {
    return std::get<RoleAssertion>(body_);
  }

  /// The concept a weakening generalizes: the right-hand side of a GCI or the
  /// concept of a concept assertion. Empty for role assertions.
  std::optional<Concept> generalizable_concept() const;
  /// Same axiom shape and label with the generalizable concept replaced.
  Axiom with_generalizable_concept(Concept c) const;
  /// The same body under a different label.
  Axiom relabeled(Label label) const { return Axiom(std::move(label), body_); }

 private:
  Label label_;
  AxiomBody body_;
};

/// Tautology of the same shape: C SubClassOf Top for a GCI, Top(a) for a
/// concept assertion and Top(subject) for a role assertion.
Axiom tautology_for(const Axiom& a);

/// Static (fixed) and refutable (repairable) axioms, disjoint by label.
struct Ontology {
  std::vector<Axiom> static_part;
  std::vector<Axiom> refutable_part;

  /// static_part followed by refutable_part.
  std::vector<Axiom> all() const;
  const Axiom* find(const Label& label) const;
};

/// Axioms sorted by label.
std::vector<Axiom> sorted_by_label(std::vector<Axiom> axioms);
std::vector<Label> labels_of(const std::vector<Axiom>& axioms);

}  // namespace elgr

template <>
struct std::hash<elgr::Label> {
  std::size_t operator()(const elgr::Label& l) const noexcept {
    return std::hash<std::string>{}(l.str());
  }
};

#endif  // ELGR_AXIOM_HPP
