#ifndef ELGR_REPAIR_HPP
#define ELGR_REPAIR_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elgr/axiom.hpp"
#include "elgr/error.hpp"
#include "elgr/justifications.hpp"
#include "elgr/weakening.hpp"

namespace elgr {

enum class Algorithm { Classical, Gentle, Modified };

std::string to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view text);

struct RepairProblem {
  Ontology ontology;
  Axiom target;
};

/// A replacement broke the target's entailment together with this
/// justification's other axioms.
class ConditionViolated : public StrategyViolation {
 public:
  ConditionViolated(const std::string& message, Justification justification)
      : StrategyViolation(message), justification_(std::move(justification)) {}
  const Justification& justification() const { return justification_; }

 private:
  Justification justification_;
};

/// A replacement is not weaker than the axiom it replaces.
class NotWeaker : public StrategyViolation {
 public:
  using StrategyViolation::StrategyViolation;
};

/// The label is not open for replacement in the current iteration.
class UnknownLabel : public Error {
 public:
  using Error::Error;
};

struct Replacement {
  Label label;
  Axiom old_axiom;
  /// Empty when the axiom was removed (classical repair).
  std::optional<Axiom> new_axiom;
};

struct RepairStep {
  std::vector<Justification> justifications;
  /// Chosen minimal hitting set; empty for the modified algorithm.
  std::vector<Label> hitting_set;
  std::vector<Replacement> replacements;
  bool entailed_after = false;
};

struct RepairTrace {
  Algorithm algorithm = Algorithm::Gentle;
  WeakeningKind weakening = WeakeningKind::Syn;
  std::vector<RepairStep> iterations;
  Ontology final_ontology;
  std::size_t iteration_count = 0;
};

struct RepairResult {
  Ontology ontology;
  RepairTrace trace;
  /// Ontology before the first iteration and after each one.
  std::vector<Ontology> snapshots;
};

/// Incremental gentle or modified gentle repair: each iteration fixes its
/// justifications (and, for the gentle algorithm, a minimal hitting set) up
/// front and then accepts one replacement per open axiom. The target is
/// re-checked once every open axiom of the iteration has been replaced.
class RepairRun {
 public:
  /// Throws NotEntailed or StaticEntails when the problem has no repair to
  /// compute. Only Gentle and Modified are accepted.
  RepairRun(RepairProblem problem, Algorithm algorithm, WeakeningKind kind,
            std::size_t budget = default_search_budget());

  Algorithm algorithm() const { return algorithm_; }
  WeakeningKind weakening() const { return kind_; }
  std::size_t budget() const { return budget_; }
  const RepairProblem& problem() const { return problem_; }
  const Ontology& current() const { return current_; }
  bool done() const { return !entailed_; }
  std::size_t iteration() const { return trace_.iterations.size() + (done() ? 0 : 1); }

  /// Justifications fixed at the start of the current iteration.
  const std::vector<Justification>& justifications() const { return justs_; }
  /// Gentle only: candidate hitting sets and the selected one.
  const std::vector<std::vector<Axiom>>& hitting_sets() const { return hitting_sets_; }
  std::size_t selected_hitting_set() const { return selected_; }
  /// Allowed while no replacement of the current iteration has been applied.
  void select_hitting_set(std::size_t index);
  bool iteration_started() const { return !step_.replacements.empty(); }

  /// Axioms still awaiting a replacement in this iteration, in label order.
  /// Gentle: the unreplaced members of the selected hitting set. Modified:
  /// the members of the justification (exactly one is replaced).
  std::vector<Axiom> open_axioms() const;
  const Axiom& open_axiom(const Label& label) const;
  WeakeningContext context_for(const Label& label) const;

  /// Throws UnknownLabel, NotWeaker or ConditionViolated if gamma is not an
  /// acceptable replacement for the labeled axiom.
  void check(const Label& label, const Axiom& gamma) const;
  /// check(), then replace. gamma takes over the label.
  void apply(const Label& label, const Axiom& gamma);

  const RepairTrace& trace() const { return trace_; }
  const std::vector<Ontology>& snapshots() const { return snapshots_; }
  RepairResult result() const;

 private:
  void start_iteration();
  void finish_iteration();

  RepairProblem problem_;
  Algorithm algorithm_;
  WeakeningKind kind_;
  std::size_t budget_;
  Ontology current_;
  bool entailed_ = true;

  std::vector<Justification> justs_;
  std::vector<std::vector<Axiom>> hitting_sets_;
  std::size_t selected_ = 0;
  std::vector<Label> open_;
  RepairStep step_;
  RepairTrace trace_;
  std::vector<Ontology> snapshots_;
};

/// How a driver reacts when a strategy proposes an unacceptable replacement.
enum class ViolationPolicy { Throw, UseTautology, Retry };

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual ViolationPolicy on_violation() const { return ViolationPolicy::Throw; }
  /// Index into hitting sets (gentle) at the start of an iteration.
  virtual std::size_t choose_hitting_set(const std::vector<std::vector<Axiom>>&) { return 0; }
  /// Index into the open axioms of the justification (modified).
  virtual std::size_t choose_axiom(const std::vector<Axiom>&) { return 0; }
  virtual Axiom propose(const Axiom& beta, const WeakeningContext& ctx) = 0;
  /// Rejection notice, relevant for strategies that retry.
  virtual void rejected(const Axiom&, const std::string&) {}
};

class TautologyStrategy : public Strategy {
 public:
  std::string name() const override { return "tautology"; }
  ViolationPolicy on_violation() const override { return ViolationPolicy::UseTautology; }
  Axiom propose(const Axiom& beta, const WeakeningContext& ctx) override;
};

/// Iterates the canonical oracle until the target is no longer entailed.
class OracleStrategy : public Strategy {
 public:
  explicit OracleStrategy(WeakeningKind kind, std::size_t budget = default_search_budget())
      : kind_(kind), budget_(budget) {}
  std::string name() const override { return "oracle"; }
  ViolationPolicy on_violation() const override { return ViolationPolicy::UseTautology; }
  Axiom propose(const Axiom& beta, const WeakeningContext& ctx) override;

 private:
  WeakeningKind kind_;
  std::size_t budget_;
};

/// First maximally strong weakening in rendering order.
class MaxStrongStrategy : public Strategy {
 public:
  explicit MaxStrongStrategy(WeakeningKind kind, std::size_t budget = default_search_budget())
      : kind_(kind), budget_(budget) {}
  std::string name() const override { return "max-strong"; }
  Axiom propose(const Axiom& beta, const WeakeningContext& ctx) override;

 private:
  WeakeningKind kind_;
  std::size_t budget_;
};

struct ScriptedChoice {
  Label label;
  Axiom replacement;
};

/// Parses "label => axiom" lines; blank lines and # comments are skipped.
std::vector<ScriptedChoice> parse_script(std::string_view text);

/// Replays choices in order. When the next choice does not concern the axiom
/// at hand, or the script is exhausted, falls back to MaxStrong.
class ScriptedStrategy : public Strategy {
 public:
  ScriptedStrategy(std::vector<ScriptedChoice> choices, WeakeningKind kind,
                   std::size_t budget = default_search_budget())
      : choices_(std::move(choices)), fallback_(kind, budget) {}
  std::string name() const override { return "scripted"; }
  std::size_t choose_hitting_set(const std::vector<std::vector<Axiom>>& sets) override;
  std::size_t choose_axiom(const std::vector<Axiom>& open) override;
  Axiom propose(const Axiom& beta, const WeakeningContext& ctx) override;
  std::size_t consumed() const { return next_; }

 private:
  const ScriptedChoice* upcoming() const;

  std::vector<ScriptedChoice> choices_;
  std::size_t next_ = 0;
  MaxStrongStrategy fallback_;
};

/// Delegates every decision to callbacks and re-prompts on rejection.
class InteractiveStrategy : public Strategy {
 public:
  struct Callbacks {
    std::function<std::size_t(const std::vector<std::vector<Axiom>>&)> choose_hitting_set;
    std::function<std::size_t(const std::vector<Axiom>&)> choose_axiom;
    std::function<Axiom(const Axiom&, const WeakeningContext&)> propose;
    std::function<void(const Axiom&, const std::string&)> rejected;
  };
  explicit InteractiveStrategy(Callbacks callbacks) : cb_(std::move(callbacks)) {}
  std::string name() const override { return "interactive"; }
  ViolationPolicy on_violation() const override { return ViolationPolicy::Retry; }
  std::size_t choose_hitting_set(const std::vector<std::vector<Axiom>>& sets) override;
  std::size_t choose_axiom(const std::vector<Axiom>& open) override;
  Axiom propose(const Axiom& beta, const WeakeningContext& ctx) override;
  void rejected(const Axiom& gamma, const std::string& reason) override;

 private:
  Callbacks cb_;
};

/// Drives the run to completion with the strategy.
void drive(RepairRun& run, Strategy& strategy);

RepairResult classical_repair(const RepairProblem& problem);
RepairResult gentle_repair(const RepairProblem& problem, Strategy& strategy,
                           WeakeningKind kind = WeakeningKind::Syn,
                           std::size_t budget = default_search_budget());
RepairResult modified_gentle_repair(const RepairProblem& problem, Strategy& strategy,
                                    WeakeningKind kind = WeakeningKind::Syn,
                                    std::size_t budget = default_search_budget());
RepairResult run_repair(const RepairProblem& problem, Algorithm algorithm, Strategy& strategy,
                        WeakeningKind kind, std::size_t budget = default_search_budget());

/// The candidate's refutable part, with the problem's static part, no longer
/// entails the target, and each of its axioms follows from the original
/// ontology.
bool verify_repair(const RepairProblem& problem, const Ontology& candidate);

}  // namespace elgr

#endif  // ELGR_REPAIR_HPP
