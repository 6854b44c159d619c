#ifndef ELGR_WEAKENING_HPP
#define ELGR_WEAKENING_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elgr/axiom.hpp"
#include "elgr/entailment.hpp"

namespace elgr {

/// Enumerable weakening relations: generalize the right-hand side of a GCI
/// (or the concept of an assertion) semantically along upper neighbors, or
/// syntactically by replacing occurrences with Top.
enum class WeakeningKind { Sub, Syn };

std::string to_string(WeakeningKind kind);
std::optional<WeakeningKind> parse_weakening_kind(std::string_view text);

/// Node budget for weakening searches: ELGR_SEARCH_BUDGET if set to a
/// positive integer, otherwise 100000.
std::size_t default_search_budget();

/// Con(gamma) is a proper subset of Con(beta).
bool is_weaker_general(const Axiom& beta, const Axiom& gamma);
/// Left-hand side specialized, right-hand side generalized (both w.r.t. the
/// empty TBox), and consequences strictly lost. Assertions: same individual,
/// strictly more general concept. False for mismatched shapes.
bool is_weaker_s(const Axiom& beta, const Axiom& gamma);
/// beta ≻ gamma for the given relation. A role assertion is weaker-than
/// only by any tautology.
bool is_weaker(WeakeningKind kind, const Axiom& beta, const Axiom& gamma);

std::vector<Axiom> sub_one_step(const Axiom& beta, std::size_t budget = default_search_budget());
std::vector<Axiom> syn_one_step(const Axiom& beta, std::size_t budget = default_search_budget());
/// Pairwise incomparable one-step successors, sorted by rendering. Empty for
/// tautologies.
std::vector<Axiom> one_step_successors(WeakeningKind kind, const Axiom& beta,
                                       std::size_t budget = default_search_budget());

/// Condition under which a replacement is acceptable: adding it to the
/// static part and to J \ {beta} must not restore the target, for every
/// justification J containing beta.
class WeakeningContext {
 public:
  WeakeningContext(std::vector<Axiom> static_part, std::vector<Axiom> rest, Axiom target);
  /// One rest per justification that contains the axiom being replaced.
  static WeakeningContext for_rests(std::vector<Axiom> static_part,
                                    std::vector<std::vector<Axiom>> rests, Axiom target);

  const Axiom& target() const { return target_; }
  const std::vector<std::vector<Axiom>>& rests() const { return rests_; }

  bool breaks(const Axiom& gamma) const;
  /// Index into rests() of the first rest with which gamma still entails the
  /// target, if any.
  std::optional<std::size_t> first_violation(const Axiom& gamma) const;

 private:
  WeakeningContext() = default;
  void build(const std::vector<Axiom>& static_part);

  std::vector<std::vector<Axiom>> rests_;
  Axiom target_;
  std::vector<std::shared_ptr<const EntailmentContext>> contexts_;
};

/// beta itself when it has no successor, else the first successor in
/// rendering order.
Axiom oracle_step(WeakeningKind kind, const Axiom& beta,
                  std::size_t budget = default_search_budget());

/// First oracle iterate W^n(beta), n >= 1, that breaks the context.
Axiom weaken_until(WeakeningKind kind, const WeakeningContext& ctx, const Axiom& beta,
                   std::size_t budget = default_search_budget());

/// All maximally strong weakenings of beta in the context, one per
/// equivalence class, sorted by rendering. Throws SearchBudgetExceeded when
/// more than `budget` axioms are visited.
std::vector<Axiom> max_strong_weakenings(WeakeningKind kind, const WeakeningContext& ctx,
                                         const Axiom& beta,
                                         std::size_t budget = default_search_budget());

/// One maximally strong syntactic weakening, built greedily upward from Top
/// toward the right-hand side of beta.
Axiom single_max_strong_syn(const WeakeningContext& ctx, const Axiom& beta);

}  // namespace elgr

#endif  // ELGR_WEAKENING_HPP
