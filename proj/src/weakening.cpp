#include "elgr/weakening.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_set>

#include "elgr/error.hpp"
#include "elgr/neighbors.hpp"
#include "elgr/render.hpp"
#include "elgr/subsumption.hpp"

namespace elgr {

namespace {

constexpr std::size_t kDefaultBudget = 100000;

void sort_by_render(std::vector<Axiom>& v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const Axiom& a, const Axiom& b) { return render(a) < render(b); });
}

// Drops members weaker than another member. Equivalent members are all
// kept: under the syntactic relation they dominate different axioms.
std::vector<Axiom> undominated(WeakeningKind kind, std::vector<Axiom> v) {
  sort_by_render(v);
  std::vector<Axiom> kept;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < v.size() && !dominated; ++j)
      dominated = i != j && is_weaker(kind, v[j], v[i]);
    if (!dominated) kept.push_back(v[i]);
  }
  return kept;
}

// One axiom per equivalence class, the first in rendering order.
std::vector<Axiom> one_per_class(std::vector<Axiom> v) {
  sort_by_render(v);
  std::vector<Axiom> kept;
  for (const auto& a : v) {
    bool duplicate = false;
    for (const auto& k : kept)
      if (equivalent_axioms(k, a)) duplicate = true;
    if (!duplicate) kept.push_back(a);
  }
  return kept;
}

std::vector<Concept> concept_step(WeakeningKind kind, const Concept& c) {
  return kind == WeakeningKind::Sub ? upper_neighbors(c) : syn_one_step_up(c);
}

bool same_lhs(const Axiom& beta, const Axiom& gamma) {
  if (beta.is_gci() && gamma.is_gci())
    return render(beta.as_gci().lhs) == render(gamma.as_gci().lhs);
  if (beta.is_concept_assertion() && gamma.is_concept_assertion())
    return beta.as_concept_assertion().individual == gamma.as_concept_assertion().individual;
  return false;
}

}  // namespace

std::string to_string(WeakeningKind kind) { return kind == WeakeningKind::Sub ? "sub" : "syn"; }

std::optional<WeakeningKind> parse_weakening_kind(std::string_view text) {
  if (text == "sub") return WeakeningKind::Sub;
  if (text == "syn") return WeakeningKind::Syn;
  return std::nullopt;
}

std::size_t default_search_budget() {
  if (const char* env = std::getenv("ELGR_SEARCH_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

bool is_weaker_general(const Axiom& beta, const Axiom& gamma) {
  return entails({beta}, gamma) && !entails({gamma}, beta);
}

bool is_weaker_s(const Axiom& beta, const Axiom& gamma) {
  if (beta.is_gci() && gamma.is_gci()) {
    const auto& b = beta.as_gci();
    const auto& g = gamma.as_gci();
    return subsumes_empty(g.lhs, b.lhs) && subsumes_empty(b.rhs, g.rhs) &&
           !entails({gamma}, beta);
  }
  if (beta.is_concept_assertion() && gamma.is_concept_assertion()) {
    const auto& b = beta.as_concept_assertion();
    const auto& g = gamma.as_concept_assertion();
    return b.individual == g.individual && strictly_subsumed_empty(b.cls, g.cls);
  }
  return false;
}

bool is_weaker(WeakeningKind kind, const Axiom& beta, const Axiom& gamma) {
  if (beta.is_role_assertion()) return is_tautology(gamma);
  if (!same_lhs(beta, gamma)) return false;
  Concept d = *beta.generalizable_concept();
  Concept e = *gamma.generalizable_concept();
  bool generalizes =
      kind == WeakeningKind::Sub ? subsumes_empty(d, e) : syn_generalizes(d, e);
  return generalizes && !entails({gamma}, beta);
}

namespace {

// One-step successors with every member of each equivalence class.
std::vector<Axiom> successors(WeakeningKind kind, const Axiom& beta, std::size_t budget) {
  if (beta.is_role_assertion()) return {tautology_for(beta)};
  if (is_tautology(beta)) return {};

  // Walk concept steps through axioms equivalent to beta; the first
  // inequivalent axiom on each path is a candidate.
  Concept d = reduce(*beta.generalizable_concept());
  std::deque<Concept> queue{d};
  std::unordered_set<std::string> visited{d.text()};
  std::vector<Axiom> found;
  while (!queue.empty()) {
    Concept x = queue.front();
    queue.pop_front();
    for (const auto& y : concept_step(kind, x)) {
      if (!visited.insert(y.text()).second) continue;
      if (visited.size() > budget)
        throw SearchBudgetExceeded("one-step successor search exceeded " +
                                   std::to_string(budget) + " nodes");
      Axiom gamma = beta.with_generalizable_concept(y);
      if (entails({gamma}, beta)) queue.push_back(y);
      else found.push_back(std::move(gamma));
    }
  }
  return undominated(kind, std::move(found));
}

}  // namespace

std::vector<Axiom> one_step_successors(WeakeningKind kind, const Axiom& beta,
                                       std::size_t budget) {
  return one_per_class(successors(kind, beta, budget));
}

std::vector<Axiom> sub_one_step(const Axiom& beta, std::size_t budget) {
  return one_step_successors(WeakeningKind::Sub, beta, budget);
}

std::vector<Axiom> syn_one_step(const Axiom& beta, std::size_t budget) {
  return one_step_successors(WeakeningKind::Syn, beta, budget);
}

WeakeningContext::WeakeningContext(std::vector<Axiom> static_part, std::vector<Axiom> rest,
                                   Axiom target)
    : rests_{std::move(rest)}, target_(std::move(target)) {
  build(static_part);
}

WeakeningContext WeakeningContext::for_rests(std::vector<Axiom> static_part,
                                             std::vector<std::vector<Axiom>> rests,
                                             Axiom target) {
  WeakeningContext ctx;
  ctx.rests_ = std::move(rests);
  ctx.target_ = std::move(target);
  if (ctx.rests_.empty()) ctx.rests_.emplace_back();
  ctx.build(static_part);
  return ctx;
}

void WeakeningContext::build(const std::vector<Axiom>& static_part) {
  for (const auto& rest : rests_) {
    std::vector<Axiom> all = static_part;
    all.insert(all.end(), rest.begin(), rest.end());
    contexts_.push_back(std::make_shared<const EntailmentContext>(all));
  }
}

std::optional<std::size_t> WeakeningContext::first_violation(const Axiom& gamma) const {
  for (std::size_t i = 0; i < contexts_.size(); ++i)
    if (contexts_[i]->entails(target_, std::span<const Axiom>(&gamma, 1))) return i;
  return std::nullopt;
}

bool WeakeningContext::breaks(const Axiom& gamma) const {
  return !first_violation(gamma).has_value();
}

Axiom oracle_step(WeakeningKind kind, const Axiom& beta, std::size_t budget) {
  std::vector<Axiom> next = one_step_successors(kind, beta, budget);
  return next.empty() ? beta : next.front();
}

Axiom weaken_until(WeakeningKind kind, const WeakeningContext& ctx, const Axiom& beta,
                   std::size_t budget) {
  Axiom gamma = oracle_step(kind, beta, budget);
  while (!ctx.breaks(gamma)) {
    Axiom next = oracle_step(kind, gamma, budget);
    if (render(next) == render(gamma)) break;
    gamma = std::move(next);
  }
  return gamma;
}

std::vector<Axiom> max_strong_weakenings(WeakeningKind kind, const WeakeningContext& ctx,
                                         const Axiom& beta, std::size_t budget) {
  std::deque<Axiom> queue{beta};
  std::unordered_set<std::string> visited{render(beta)};
  std::vector<Axiom> found;
  while (!queue.empty()) {
    Axiom delta = queue.front();
    queue.pop_front();
    for (auto& gamma : successors(kind, delta, budget)) {
      if (!visited.insert(render(gamma)).second) continue;
      if (visited.size() > budget)
        throw SearchBudgetExceeded("maximally strong weakening search exceeded " +
                                   std::to_string(budget) + " nodes");
      if (ctx.breaks(gamma)) found.push_back(std::move(gamma));
      else queue.push_back(std::move(gamma));
    }
  }
  return one_per_class(undominated(kind, std::move(found)));
}

Axiom single_max_strong_syn(const WeakeningContext& ctx, const Axiom& beta) {
  if (beta.is_role_assertion()) return tautology_for(beta);
  Concept d = *beta.generalizable_concept();
  Concept current = Concept::top();
  for (;;) {
    bool moved = false;
    for (const auto& c : syn_one_step_down_toward(d, current)) {
      if (ctx.breaks(beta.with_generalizable_concept(c))) {
        current = c;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return beta.with_generalizable_concept(current);
}

}  // namespace elgr
