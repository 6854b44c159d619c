#ifndef ELGR_ENTAILMENT_HPP
#define ELGR_ENTAILMENT_HPP

#include <memory>
#include <span>
#include <vector>

#include "elgr/axiom.hpp"

namespace elgr {

/// Polynomial EL entailment by normalization and completion.
///
/// GCIs are normalized into the forms A ⊑ B, A1 ⊓ A2 ⊑ B, A ⊑ ∃r.B and
/// ∃r.A ⊑ B using polarity-aware fresh names; each individual a becomes a
/// fresh name N_a with C(a) ↦ N_a ⊑ C and r(a, b) ↦ N_a ⊑ ∃r.N_b. A query
/// C ⊑ D is answered by naming C and D and saturating the completion rules
/// goal-directed from the name of C.
///
/// The normalized axiom set is immutable after construction, so a context
/// may be queried from several threads at once.
class EntailmentContext {
 public:
  explicit EntailmentContext(std::span<const Axiom> axioms);
  ~EntailmentContext();
  EntailmentContext(EntailmentContext&&) noexcept;
  EntailmentContext& operator=(EntailmentContext&&) noexcept;

  bool entails(const Axiom& query) const;
  /// Entailment from the context's axioms together with `extra`.
  bool entails(const Axiom& query, std::span<const Axiom> extra) const;

 private:
  struct Normalized;
  std::unique_ptr<Normalized> base_;
  std::vector<Axiom> role_assertions_;
};

bool entails(std::span<const Axiom> axioms, const Axiom& query);
bool entails(std::initializer_list<Axiom> axioms, const Axiom& query);

/// Con({a}) = Con({b}).
bool equivalent_axioms(const Axiom& a, const Axiom& b);

/// The empty ontology entails the axiom.
bool is_tautology(const Axiom& a);

}  // namespace elgr

#endif  // ELGR_ENTAILMENT_HPP
