#ifndef ELGR_JUSTIFICATIONS_HPP
#define ELGR_JUSTIFICATIONS_HPP

#include <cstddef>
#include <vector>

#include "elgr/axiom.hpp"

namespace elgr {

/// Minimal subset of the refutable part that, together with the static
/// part, entails the target. Axioms are kept in label order.
struct Justification {
  std::vector<Axiom> axioms;

  std::vector<Label> labels() const { return labels_of(axioms); }
  bool contains(const Label& label) const;
  friend bool operator==(const Justification& a, const Justification& b) {
    return a.labels() == b.labels();
  }
};

/// Deletion-based shrinking in label order. Throws NotEntailed or
/// StaticEntails when the ontology does not admit a justification.
Justification find_one_justification(const Ontology& ontology, const Axiom& target);

/// Every justification, by hitting-set-tree expansion with justification
/// reuse and pruning of closed paths. Sorted by label sequence. Throws
/// SearchBudgetExceeded after `budget` tree nodes.
std::vector<Justification> all_justifications(const Ontology& ontology, const Axiom& target,
                                              std::size_t budget = 100000);

/// All subset-minimal hitting sets, each in label order, the list sorted by
/// label sequence. Throws std::invalid_argument for an empty justification.
std::vector<std::vector<Axiom>> minimal_hitting_sets(const std::vector<Justification>& justs);

}  // namespace elgr

#endif  // ELGR_JUSTIFICATIONS_HPP
