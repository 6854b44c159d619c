#include "elgr/neighbors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "elgr/subsumption.hpp"

namespace elgr {

namespace {

void sort_unique(std::vector<Concept>& v) {
  std::sort(v.begin(), v.end(), ConceptTextLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Concept> without(const std::vector<Concept>& parts, std::size_t i) {
  std::vector<Concept> v;
  v.reserve(parts.size());
  for (std::size_t k = 0; k < parts.size(); ++k)
    if (k != i) v.push_back(parts[k]);
  return v;
}

std::vector<Concept> upper_reduced(const Concept& c) {
  std::vector<Concept> parts = c.conjuncts();
  std::vector<Concept> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<Concept> v = without(parts, i);
    if (parts[i].is_exists()) {
      for (const auto& f : upper_reduced(parts[i].filler()))
        v.push_back(Concept::exists(parts[i].role(), f));
    }
    out.push_back(reduce(Concept::conj(std::move(v))));
  }
  sort_unique(out);
  return out;
}

// Every concept obtained by replacing exactly one name or some r.Top
// occurrence of c by Top (not reduced).
std::vector<Concept> single_replacements(const Concept& c) {
  std::vector<Concept> parts = c.conjuncts();
  std::vector<Concept> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Concept& p = parts[i];
    if (p.is_name() || (p.is_exists() && p.filler().is_top())) {
      out.push_back(Concept::conj(without(parts, i)));
      continue;
    }
    for (const auto& g : single_replacements(p.filler())) {
      std::vector<Concept> v = parts;
      v[i] = Concept::exists(p.role(), g);
      out.push_back(Concept::conj(std::move(v)));
    }
  }
  return out;
}

std::vector<Concept> subsumption_minimal(std::vector<Concept> v) {
  std::vector<Concept> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < v.size() && !dominated; ++j)
      dominated = i != j && strictly_subsumed_empty(v[j], v[i]);
    if (!dominated) out.push_back(v[i]);
  }
  return out;
}

std::vector<Concept> one_step_up_reduced(const Concept& c) {
  std::vector<Concept> cands;
  for (const auto& r : single_replacements(c)) {
    Concept g = reduce(r);
    if (!(g == c)) cands.push_back(std::move(g));
  }
  sort_unique(cands);
  return subsumption_minimal(std::move(cands));
}

// Both arguments reduced. d is a pruning of c: names of d are names of c,
// and the restrictions of d map injectively onto same-role restrictions of c
// whose fillers prune to theirs.
bool pruning_of(const Concept& c, const Concept& d) {
  if (d.is_top() || c == d) return true;
  std::unordered_set<std::string> names;
  std::vector<Concept> ce, de;
  for (const auto& p : c.conjuncts()) {
    if (p.is_name()) names.insert(p.id());
    else ce.push_back(p);
  }
  for (const auto& p : d.conjuncts()) {
    if (p.is_name()) {
      if (!names.count(p.id())) return false;
    } else {
      de.push_back(p);
    }
  }
  if (de.size() > ce.size()) return false;

  std::vector<std::vector<std::size_t>> adj(de.size());
  for (std::size_t i = 0; i < de.size(); ++i) {
    for (std::size_t j = 0; j < ce.size(); ++j)
      if (ce[j].role() == de[i].role() && pruning_of(ce[j].filler(), de[i].filler()))
        adj[i].push_back(j);
    if (adj[i].empty()) return false;
  }

  std::vector<int> match_of(ce.size(), -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (match_of[j] < 0 || augment(static_cast<std::size_t>(match_of[j]))) {
        match_of[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < de.size(); ++i) {
    seen.assign(ce.size(), 0);
    if (!augment(i)) return false;
  }
  return true;
}

// All reduced prunings of c, unique by text.
std::vector<Concept> all_prunings(const Concept& c) {
  std::vector<Concept> acc{Concept::top()};
  for (const auto& p : c.conjuncts()) {
    std::vector<Concept> options{Concept::top()};
    if (p.is_name()) {
      options.push_back(p);
    } else {
      for (const auto& f : all_prunings(p.filler()))
        options.push_back(Concept::exists(p.role(), f));
    }
    std::vector<Concept> next;
    next.reserve(acc.size() * options.size());
    for (const auto& a : acc)
      for (const auto& o : options) next.push_back(Concept::conj({a, o}));
    acc = std::move(next);
  }
  for (auto& a : acc) a = reduce(a);
  sort_unique(acc);
  return acc;
}

std::vector<Concept> one_step_down(const Concept& dn, const Concept& dpn);

// Superset of the concepts one syntactic step below dpn that are prunings of
// dn; one_step_down filters it.
std::vector<Concept> down_candidates(const Concept& dn, const Concept& dpn) {
  std::vector<Concept> dparts = dn.conjuncts();
  std::vector<Concept> pparts = dpn.conjuncts();
  std::set<std::string> pnames, proles;
  for (const auto& p : pparts) {
    if (p.is_name()) pnames.insert(p.id());
    else proles.insert(p.role());
  }
  auto with = [&](Concept extra) {
    std::vector<Concept> v = pparts;
    v.push_back(std::move(extra));
    return Concept::conj(std::move(v));
  };

  std::vector<Concept> out;
  std::set<std::string> roles;
  for (const auto& q : dparts) {
    if (q.is_name()) {
      if (!pnames.count(q.id())) out.push_back(with(q));
    } else if (roles.insert(q.role()).second) {
      out.push_back(with(Concept::exists(q.role(), Concept::top())));
    }
  }
  for (std::size_t i = 0; i < pparts.size(); ++i) {
    const Concept& p = pparts[i];
    if (!p.is_exists()) continue;
    std::set<std::string> done;
    for (const auto& q : dparts) {
      if (!q.is_exists() || q.role() != p.role() || !pruning_of(q.filler(), p.filler()))
        continue;
      for (const auto& n : one_step_down(q.filler(), p.filler())) {
        if (!done.insert(n.text()).second) continue;
        std::vector<Concept> v = pparts;
        v[i] = Concept::exists(p.role(), n);
        out.push_back(Concept::conj(std::move(v)));
      }
    }
  }
  // A new restriction next to a same-role sibling counts as one step when
  // dropping one symbol from it makes it redundant again.
  for (const auto& q : dparts) {
    if (!q.is_exists() || !proles.count(q.role())) continue;
    for (const auto& f : all_prunings(q.filler()))
      if (!f.is_top()) out.push_back(with(Concept::exists(q.role(), f)));
  }
  return out;
}

std::vector<Concept> one_step_down(const Concept& dn, const Concept& dpn) {
  std::vector<Concept> out;
  std::unordered_set<std::string> seen;
  for (const auto& cand : down_candidates(dn, dpn)) {
    Concept e = reduce(cand);
    if (!seen.insert(e.text()).second) continue;
    if (e == dpn || !pruning_of(dn, e)) continue;
    bool one_step;
    if (e.msize() == dpn.msize() + 1) {
      one_step = pruning_of(e, dpn);
    } else {
      one_step = false;
      for (const auto& up : one_step_up_reduced(e))
        if (up == dpn) one_step = true;
    }
    if (one_step) out.push_back(std::move(e));
  }
  sort_unique(out);
  return out;
}

}  // namespace

std::vector<Concept> upper_neighbors(const Concept& c) { return upper_reduced(reduce(c)); }

std::vector<Concept> syn_one_step_up(const Concept& c) {
  return one_step_up_reduced(reduce(c));
}

bool syn_generalizes(const Concept& c, const Concept& d) {
  return pruning_of(reduce(c), reduce(d));
}

bool strictly_syn_generalizes(const Concept& c, const Concept& d) {
  Concept rc = reduce(c), rd = reduce(d);
  return !(rc == rd) && pruning_of(rc, rd);
}

std::vector<Concept> syn_one_step_down_toward(const Concept& d, const Concept& d_prime) {
  Concept rd = reduce(d), rp = reduce(d_prime);
  if (!pruning_of(rd, rp))
    throw std::invalid_argument("'" + rp.text() +
                                "' is not a syntactic generalization of '" + rd.text() + "'");
  return one_step_down(rd, rp);
}

}  // namespace elgr
