#include "elgr/subsumption.hpp"

#include <algorithm>
#include <map>
#include <string_view>
#include <vector>

namespace elgr {

namespace {

bool has_name(const Concept& c, const std::string& name) {
  if (c.is_name()) return c.id() == name;
  for (const auto& p : c.parts())
    if (p.is_name() && p.id() == name) return true;
  return false;
}

template <typename F>
void for_each_conjunct(const Concept& c, F&& f) {
  if (c.is_conj()) {
    for (const auto& p : c.parts()) f(p);
  } else if (!c.is_top()) {
    f(c);
  }
}

}  // namespace

bool subsumes_empty(const Concept& c, const Concept& d) {
  if (d.is_top()) return true;
  if (c == d) return true;
  bool ok = true;
  for_each_conjunct(d, [&](const Concept& dj) {
    if (!ok) return;
    if (dj.is_top()) return;
    if (dj.is_name()) {
      ok = has_name(c, dj.id());
      return;
    }
    bool matched = false;
    for_each_conjunct(c, [&](const Concept& ci) {
      if (matched || !ci.is_exists() || ci.role() != dj.role()) return;
      matched = subsumes_empty(ci.filler(), dj.filler());
    });
    ok = matched;
  });
  return ok;
}

bool strictly_subsumed_empty(const Concept& c, const Concept& d) {
  return subsumes_empty(c, d) && !subsumes_empty(d, c);
}

bool equivalent_empty(const Concept& c, const Concept& d) {
  return subsumes_empty(c, d) && subsumes_empty(d, c);
}

Concept reduce(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Name:
      return c;
    case ConceptKind::Exists: {
      Concept f = reduce(c.filler());
      if (f == c.filler()) return c;
      return Concept::exists(c.role(), std::move(f));
    }
    case ConceptKind::Conj:
      break;
  }

  // Reduce fillers, then deduplicate by canonical text; equivalent reduced
  // concepts share their text, so this also merges equivalent conjuncts.
  std::map<std::string_view, Concept> names;
  std::map<std::string, std::vector<Concept>> by_role;
  std::vector<Concept> reduced_parts;
  reduced_parts.reserve(c.parts().size());
  for (const auto& p : c.parts()) {
    if (p.is_top()) continue;
    reduced_parts.push_back(p.is_exists() ? reduce(p) : p);
  }
  for (const auto& p : reduced_parts) {
    if (p.is_name()) {
      names.emplace(p.text(), p);
    } else {
      by_role[p.role()].push_back(p);
    }
  }

  std::vector<Concept> kept;
  kept.reserve(names.size() + reduced_parts.size());
  for (auto& [_, n] : names) kept.push_back(n);
  for (auto& [role, group] : by_role) {
    std::sort(group.begin(), group.end(), ConceptTextLess{});
    group.erase(std::unique(group.begin(), group.end()), group.end());
    // A restriction is redundant when a distinct sibling is subsumed by it.
    for (std::size_t i = 0; i < group.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < group.size() && !redundant; ++j) {
        if (i != j && subsumes_empty(group[j].filler(), group[i].filler()))
          redundant = true;
      }
      if (!redundant) kept.push_back(group[i]);
    }
  }
  std::sort(kept.begin(), kept.end(), ConceptTextLess{});
  return Concept::conj(std::move(kept));
}

}  // namespace elgr
