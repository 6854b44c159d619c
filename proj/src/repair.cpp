#include "elgr/repair.hpp"

#include <algorithm>
#include <stdexcept>

#include "elgr/entailment.hpp"
#include "elgr/parser.hpp"
#include "elgr/render.hpp"

namespace elgr {

namespace {

constexpr int kMaxInteractiveAttempts = 100;

bool target_entailed(const Ontology& o, const Axiom& target) {
  return entails(o.all(), target);
}

void check_problem(const RepairProblem& p) {
  EntailmentContext statics(p.ontology.static_part);
  if (statics.entails(p.target))
    throw StaticEntails("the static part alone entails " + render(p.target));
  if (!statics.entails(p.target, p.ontology.refutable_part))
    throw NotEntailed("the ontology does not entail " + render(p.target));
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Classical: return "classical";
    case Algorithm::Gentle: return "gentle";
    case Algorithm::Modified: return "modified";
  }
  return "gentle";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
  if (text == "classical") return Algorithm::Classical;
  if (text == "gentle") return Algorithm::Gentle;
  if (text == "modified") return Algorithm::Modified;
  return std::nullopt;
}

RepairRun::RepairRun(RepairProblem problem, Algorithm algorithm, WeakeningKind kind,
                     std::size_t budget)
    : problem_(std::move(problem)), algorithm_(algorithm), kind_(kind), budget_(budget) {
  if (algorithm_ == Algorithm::Classical)
    throw std::invalid_argument("classical repair has no incremental run");
  check_problem(problem_);
  current_ = problem_.ontology;
  trace_.algorithm = algorithm_;
  trace_.weakening = kind_;
  trace_.final_ontology = current_;
  snapshots_.push_back(current_);
  start_iteration();
}

void RepairRun::start_iteration() {
  entailed_ = target_entailed(current_, problem_.target);
  if (!entailed_) return;
  step_ = RepairStep{};
  hitting_sets_.clear();
  selected_ = 0;
  if (algorithm_ == Algorithm::Gentle) {
    justs_ = all_justifications(current_, problem_.target, budget_);
    hitting_sets_ = minimal_hitting_sets(justs_);
    open_ = labels_of(hitting_sets_.front());
    step_.hitting_set = open_;
  } else {
    justs_ = {find_one_justification(current_, problem_.target)};
    open_ = justs_.front().labels();
  }
  step_.justifications = justs_;
}

void RepairRun::select_hitting_set(std::size_t index) {
  if (algorithm_ != Algorithm::Gentle || done())
    throw std::logic_error("no hitting set to select");
  if (iteration_started())
    throw std::logic_error("the hitting set is fixed once a replacement has been applied");
  if (index >= hitting_sets_.size()) throw std::out_of_range("hitting set index out of range");
  selected_ = index;
  open_ = labels_of(hitting_sets_[index]);
  step_.hitting_set = open_;
}

std::vector<Axiom> RepairRun::open_axioms() const {
  std::vector<Axiom> out;
  for (const auto& l : open_) out.push_back(*current_.find(l));
  return out;
}

const Axiom& RepairRun::open_axiom(const Label& label) const {
  if (done()) throw UnknownLabel("the run is finished; no axiom is open");
  if (std::find(open_.begin(), open_.end(), label) == open_.end())
    throw UnknownLabel("axiom " + label.str() + " is not open for replacement in iteration " +
                       std::to_string(iteration()));
  return *current_.find(label);
}

WeakeningContext RepairRun::context_for(const Label& label) const {
  open_axiom(label);
  std::vector<std::vector<Axiom>> rests;
  for (const auto& j : justs_) {
    if (!j.contains(label)) continue;
    std::vector<Axiom> rest;
    for (const auto& a : j.axioms)
      if (a.label() != label) rest.push_back(a);
    rests.push_back(std::move(rest));
  }
  return WeakeningContext::for_rests(problem_.ontology.static_part, std::move(rests),
                                     problem_.target);
}

void RepairRun::check(const Label& label, const Axiom& gamma) const {
  const Axiom& beta = open_axiom(label);
  bool acceptable =
      is_weaker(kind_, beta, gamma) || (is_tautology(gamma) && !is_tautology(beta));
  if (!acceptable)
    throw NotWeaker(render(gamma) + " is not weaker than " + render(beta) + " under " +
                    to_string(kind_));
  WeakeningContext ctx = context_for(label);
  if (auto v = ctx.first_violation(gamma)) {
    std::size_t seen = 0;
    for (const auto& j : justs_) {
      if (!j.contains(label)) continue;
      if (seen++ == *v)
        throw ConditionViolated(
            render(gamma) + " together with the rest of the justification still entails " +
                render(problem_.target),
            j);
    }
  }
}

void RepairRun::apply(const Label& label, const Axiom& gamma) {
  check(label, gamma);
  Axiom replacement = gamma.relabeled(label);
  for (auto& a : current_.refutable_part) {
    if (a.label() != label) continue;
    step_.replacements.push_back({label, a, replacement});
    a = replacement;
  }
  if (algorithm_ == Algorithm::Modified) open_.clear();
  else open_.erase(std::find(open_.begin(), open_.end(), label));
  trace_.final_ontology = current_;
  if (open_.empty()) finish_iteration();
}

void RepairRun::finish_iteration() {
  step_.entailed_after = target_entailed(current_, problem_.target);
  trace_.iterations.push_back(step_);
  trace_.iteration_count = trace_.iterations.size();
  snapshots_.push_back(current_);
  std::size_t n = problem_.ontology.refutable_part.size();
  if (n < 63 && trace_.iteration_count > (std::size_t{1} << n))
    throw std::logic_error("repair exceeded 2^" + std::to_string(n) + " iterations");
  start_iteration();
}

RepairResult RepairRun::result() const { return {current_, trace_, snapshots_}; }

Axiom TautologyStrategy::propose(const Axiom& beta, const WeakeningContext&) {
  return tautology_for(beta);
}

Axiom OracleStrategy::propose(const Axiom& beta, const WeakeningContext& ctx) {
  return weaken_until(kind_, ctx, beta, budget_);
}

Axiom MaxStrongStrategy::propose(const Axiom& beta, const WeakeningContext& ctx) {
  auto found = max_strong_weakenings(kind_, ctx, beta, budget_);
  return found.empty() ? tautology_for(beta) : found.front();
}

std::vector<ScriptedChoice> parse_script(std::string_view text) {
  std::vector<ScriptedChoice> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    std::size_t arrow = line.find("=>");
    if (arrow == std::string_view::npos)
      throw ParseError(line_no, 1, "expected 'label => axiom'");
    std::string label = trim(line.substr(0, arrow));
    if (label.empty()) throw ParseError(line_no, 1, "missing label before '=>'");
    try {
      out.push_back({Label(label), parse_axiom(line.substr(arrow + 2))});
    } catch (const ParseError& e) {
      throw ParseError(line_no, arrow + 3, std::string("in replacement axiom: ") + e.what());
    }
  }
  return out;
}

const ScriptedChoice* ScriptedStrategy::upcoming() const {
  return next_ < choices_.size() ? &choices_[next_] : nullptr;
}

std::size_t ScriptedStrategy::choose_hitting_set(const std::vector<std::vector<Axiom>>& sets) {
  if (const auto* up = upcoming())
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (const auto& a : sets[i])
        if (a.label() == up->label) return i;
  return 0;
}

std::size_t ScriptedStrategy::choose_axiom(const std::vector<Axiom>& open) {
  if (const auto* up = upcoming())
    for (std::size_t i = 0; i < open.size(); ++i)
      if (open[i].label() == up->label) return i;
  return 0;
}

Axiom ScriptedStrategy::propose(const Axiom& beta, const WeakeningContext& ctx) {
  if (const auto* up = upcoming(); up != nullptr && up->label == beta.label()) {
    ++next_;
    return up->replacement.relabeled(beta.label());
  }
  return fallback_.propose(beta, ctx);
}

std::size_t InteractiveStrategy::choose_hitting_set(const std::vector<std::vector<Axiom>>& sets) {
  return cb_.choose_hitting_set ? cb_.choose_hitting_set(sets) : 0;
}

std::size_t InteractiveStrategy::choose_axiom(const std::vector<Axiom>& open) {
  return cb_.choose_axiom ? cb_.choose_axiom(open) : 0;
}

Axiom InteractiveStrategy::propose(const Axiom& beta, const WeakeningContext& ctx) {
  return cb_.propose ? cb_.propose(beta, ctx) : tautology_for(beta);
}

void InteractiveStrategy::rejected(const Axiom& gamma, const std::string& reason) {
  if (cb_.rejected) cb_.rejected(gamma, reason);
}

void drive(RepairRun& run, Strategy& strategy) {
  while (!run.done()) {
    if (run.algorithm() == Algorithm::Gentle && !run.iteration_started()) {
      std::size_t i = strategy.choose_hitting_set(run.hitting_sets());
      if (i < run.hitting_sets().size() && i != run.selected_hitting_set())
        run.select_hitting_set(i);
    }
    std::vector<Axiom> open = run.open_axioms();
    std::size_t idx = 0;
    if (run.algorithm() == Algorithm::Modified) {
      idx = strategy.choose_axiom(open);
      if (idx >= open.size()) idx = 0;
    }
    const Axiom beta = open[idx];
    WeakeningContext ctx = run.context_for(beta.label());
    for (int attempt = 1;; ++attempt) {
      Axiom gamma = strategy.propose(beta, ctx);
      try {
        run.check(beta.label(), gamma);
      } catch (const StrategyViolation& e) {
        ViolationPolicy policy = strategy.on_violation();
        if (policy == ViolationPolicy::UseTautology) {
          gamma = tautology_for(beta);
        } else if (policy == ViolationPolicy::Retry && attempt < kMaxInteractiveAttempts) {
          strategy.rejected(gamma, e.what());
          continue;
        } else {
          std::string msg = strategy.name() + " strategy proposed " + render(gamma) + " for " +
                            beta.label().str() + ": " + e.what();
          if (auto* cv = dynamic_cast<const ConditionViolated*>(&e))
            throw ConditionViolated(msg, cv->justification());
          if (dynamic_cast<const NotWeaker*>(&e)) throw NotWeaker(msg);
          throw StrategyViolation(msg);
        }
      }
      run.apply(beta.label(), gamma);
      break;
    }
  }
}

RepairResult classical_repair(const RepairProblem& problem) {
  check_problem(problem);
  RepairResult r;
  r.trace.algorithm = Algorithm::Classical;
  r.snapshots.push_back(problem.ontology);

  RepairStep step;
  step.justifications = all_justifications(problem.ontology, problem.target);
  std::vector<Axiom> h = minimal_hitting_sets(step.justifications).front();
  step.hitting_set = labels_of(h);

  r.ontology.static_part = problem.ontology.static_part;
  for (const auto& a : problem.ontology.refutable_part) {
    if (std::find(step.hitting_set.begin(), step.hitting_set.end(), a.label()) !=
        step.hitting_set.end())
      step.replacements.push_back({a.label(), a, std::nullopt});
    else
      r.ontology.refutable_part.push_back(a);
  }
  step.entailed_after = target_entailed(r.ontology, problem.target);
  r.trace.iterations.push_back(std::move(step));
  r.trace.iteration_count = 1;
  r.trace.final_ontology = r.ontology;
  r.snapshots.push_back(r.ontology);
  return r;
}

RepairResult gentle_repair(const RepairProblem& problem, Strategy& strategy, WeakeningKind kind,
                           std::size_t budget) {
  RepairRun run(problem, Algorithm::Gentle, kind, budget);
  drive(run, strategy);
  return run.result();
}

RepairResult modified_gentle_repair(const RepairProblem& problem, Strategy& strategy,
                                    WeakeningKind kind, std::size_t budget) {
  RepairRun run(problem, Algorithm::Modified, kind, budget);
  drive(run, strategy);
  return run.result();
}

RepairResult run_repair(const RepairProblem& problem, Algorithm algorithm, Strategy& strategy,
                        WeakeningKind kind, std::size_t budget) {
  if (algorithm == Algorithm::Classical) {
    RepairResult r = classical_repair(problem);
    r.trace.weakening = kind;
    return r;
  }
  RepairRun run(problem, algorithm, kind, budget);
  drive(run, strategy);
  return run.result();
}

bool verify_repair(const RepairProblem& problem, const Ontology& candidate) {
  EntailmentContext repaired(problem.ontology.static_part);
  if (repaired.entails(problem.target, candidate.refutable_part)) return false;
  EntailmentContext original(problem.ontology.all());
  for (const auto& a : candidate.refutable_part)
    if (!original.entails(a)) return false;
  return true;
}

}  // namespace elgr
