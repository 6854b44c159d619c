#include "elgr/justifications.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "elgr/entailment.hpp"
#include "elgr/error.hpp"
#include "elgr/render.hpp"

namespace elgr {

namespace {

using LabelSet = std::set<Label>;

std::optional<Justification> shrink(const EntailmentContext& statics,
                                    std::vector<Axiom> candidates, const Axiom& target) {
  if (!statics.entails(target, candidates)) return std::nullopt;
  for (std::size_t i = 0; i < candidates.size();) {
    std::vector<Axiom> without = candidates;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    if (statics.entails(target, without)) candidates = std::move(without);
    else ++i;
  }
  return Justification{std::move(candidates)};
}

void check_problem(const EntailmentContext& statics, const Ontology& o, const Axiom& target) {
  if (statics.entails(target))
    throw StaticEntails("the static part alone entails " + render(target));
  if (!statics.entails(target, o.refutable_part))
    throw NotEntailed("the ontology does not entail " + render(target));
}

bool labels_less(const std::vector<Label>& a, const std::vector<Label>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

bool Justification::contains(const Label& label) const {
  for (const auto& a : axioms)
    if (a.label() == label) return true;
  return false;
}

Justification find_one_justification(const Ontology& ontology, const Axiom& target) {
  EntailmentContext statics(ontology.static_part);
  check_problem(statics, ontology, target);
  return *shrink(statics, sorted_by_label(ontology.refutable_part), target);
}

std::vector<Justification> all_justifications(const Ontology& ontology, const Axiom& target,
                                              std::size_t budget) {
  EntailmentContext statics(ontology.static_part);
  check_problem(statics, ontology, target);
  const std::vector<Axiom> refutable = sorted_by_label(ontology.refutable_part);

  std::vector<Justification> found;
  std::vector<LabelSet> found_sets;
  std::vector<LabelSet> closed;
  std::set<LabelSet> seen{LabelSet{}};
  std::deque<LabelSet> queue{LabelSet{}};
  std::size_t nodes = 0;

  while (!queue.empty()) {
    LabelSet path = std::move(queue.front());
    queue.pop_front();
    if (++nodes > budget)
      throw SearchBudgetExceeded("justification search exceeded " + std::to_string(budget) +
                                 " nodes");
    bool pruned = false;
    for (const auto& c : closed)
      if (std::includes(path.begin(), path.end(), c.begin(), c.end())) pruned = true;
    if (pruned) continue;

    const LabelSet* reuse = nullptr;
    for (const auto& s : found_sets) {
      bool disjoint = std::none_of(s.begin(), s.end(),
                                   [&](const Label& l) { return path.count(l) > 0; });
      if (disjoint) {
        reuse = &s;
        break;
      }
    }
    LabelSet current;
    if (reuse != nullptr) {
      current = *reuse;
    } else {
      std::vector<Axiom> remaining;
      for (const auto& a : refutable)
        if (!path.count(a.label())) remaining.push_back(a);
      auto j = shrink(statics, std::move(remaining), target);
      if (!j) {
        closed.push_back(path);
        continue;
      }
      for (const auto& a : j->axioms) current.insert(a.label());
      found_sets.push_back(current);
      found.push_back(std::move(*j));
    }
    for (const auto& l : current) {
      LabelSet child = path;
      child.insert(l);
      if (seen.insert(child).second) queue.push_back(std::move(child));
    }
  }

  std::sort(found.begin(), found.end(), [](const Justification& a, const Justification& b) {
    return labels_less(a.labels(), b.labels());
  });
  return found;
}

std::vector<std::vector<Axiom>> minimal_hitting_sets(const std::vector<Justification>& justs) {
  std::map<Label, Axiom> by_label;
  std::vector<LabelSet> sets;
  for (const auto& j : justs) {
    if (j.axioms.empty()) throw std::invalid_argument("justifications must be nonempty");
    LabelSet s;
    for (const auto& a : j.axioms) {
      s.insert(a.label());
      by_label.emplace(a.label(), a);
    }
    sets.push_back(std::move(s));
  }

  // Berge: extend the minimal hitting sets of the first k sets to k + 1.
  std::vector<LabelSet> hs{LabelSet{}};
  for (const auto& s : sets) {
    std::set<LabelSet> next;
    for (const auto& h : hs) {
      bool hit = std::any_of(s.begin(), s.end(), [&](const Label& l) { return h.count(l) > 0; });
      if (hit) {
        next.insert(h);
        continue;
      }
      for (const auto& l : s) {
        LabelSet e = h;
        e.insert(l);
        next.insert(std::move(e));
      }
    }
    hs.clear();
    for (const auto& h : next) {
      bool minimal = true;
      for (const auto& o : next)
        if (o.size() < h.size() && std::includes(h.begin(), h.end(), o.begin(), o.end()))
          minimal = false;
      if (minimal) hs.push_back(h);
    }
  }

  std::vector<std::vector<Axiom>> out;
  for (const auto& h : hs) {
    std::vector<Axiom> v;
    for (const auto& l : h) v.push_back(by_label.at(l));
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return labels_less(labels_of(a), labels_of(b));
  });
  return out;
}

}  // namespace elgr
