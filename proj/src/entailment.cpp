#include "elgr/entailment.hpp"

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "elgr/subsumption.hpp"

namespace elgr {

namespace {

constexpr int kTop = 0;

std::uint64_t pack(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// One layer of normalized axioms. A query builds a small layer on top of the
// context's base layer; ids continue where the base stopped.
struct Layer {
  std::unordered_map<int, std::vector<int>> nf1;                   // A ⊑ B
  std::unordered_map<int, std::vector<std::pair<int, int>>> nf2;   // A ⊓ other ⊑ B
  std::unordered_map<int, std::vector<std::pair<int, int>>> nf3;   // A ⊑ ∃r.B
  std::unordered_map<std::uint64_t, std::vector<int>> nf4;         // ∃r.A ⊑ B
  std::unordered_map<std::string, int> names;
  std::unordered_map<std::string, int> individuals;
  std::unordered_map<std::string, int> roles;
  std::unordered_map<std::string, int> pos_memo;
  std::unordered_map<std::string, int> neg_memo;
  int next_id = 1;
  int next_role = 0;
};

template <typename Map>
const typename Map::mapped_type* lookup(const Map& m, const typename Map::key_type& k) {
  auto it = m.find(k);
  return it == m.end() ? nullptr : &it->second;
}

class Normalizer {
 public:
  Normalizer(Layer& layer, const Layer* base) : layer_(layer), base_(base) {
    if (base_ != nullptr) {
      layer_.next_id = base_->next_id;
      layer_.next_role = base_->next_role;
    }
  }

  void add(const Axiom& a) {
    if (a.is_gci()) {
      const auto& g = a.as_gci();
      add_nf1(neg(g.lhs), pos(g.rhs));
    } else if (a.is_concept_assertion()) {
      const auto& ca = a.as_concept_assertion();
      add_nf1(individual(ca.individual), pos(ca.cls));
    } else {
      const auto& ra = a.as_role_assertion();
      add_nf3(individual(ra.subject), role(ra.role), individual(ra.object));
    }
  }

  int individual(const std::string& n) { return intern(n, &Layer::individuals, layer_.next_id); }

  /// Name X with X ⊑ C derivable (positive occurrence).
  int pos(const Concept& c) {
    switch (c.kind()) {
      case ConceptKind::Top: return kTop;
      case ConceptKind::Name: return intern(c.id(), &Layer::names, layer_.next_id);
      default: break;
    }
    if (int id = memo(&Layer::pos_memo, c.text()); id >= 0) return id;
    int x = layer_.next_id++;
    if (c.is_conj()) {
      for (const auto& p : c.parts()) add_nf1(x, pos(p));
    } else {
      add_nf3(x, role(c.role()), pos(c.filler()));
    }
    layer_.pos_memo.emplace(c.text(), x);
    return x;
  }

  /// Name X with C ⊑ X derivable (negative occurrence).
  int neg(const Concept& c) {
    switch (c.kind()) {
      case ConceptKind::Top: return kTop;
      case ConceptKind::Name: return intern(c.id(), &Layer::names, layer_.next_id);
      default: break;
    }
    if (int id = memo(&Layer::neg_memo, c.text()); id >= 0) return id;
    int x;
    if (c.is_conj()) {
      std::vector<int> ids;
      ids.reserve(c.parts().size());
      for (const auto& p : c.parts()) ids.push_back(neg(p));
      int acc = ids.front();
      for (std::size_t i = 1; i < ids.size(); ++i) {
        int y = layer_.next_id++;
        add_nf2(acc, ids[i], y);
        acc = y;
      }
      x = acc;
    } else {
      x = layer_.next_id++;
      layer_.nf4[pack(role(c.role()), neg(c.filler()))].push_back(x);
    }
    layer_.neg_memo.emplace(c.text(), x);
    return x;
  }

 private:
  int role(const std::string& r) { return intern(r, &Layer::roles, layer_.next_role); }

  int intern(const std::string& key, std::unordered_map<std::string, int> Layer::*table,
             int& counter) {
    if (base_ != nullptr)
      if (const int* id = lookup(base_->*table, key)) return *id;
    auto [it, inserted] = (layer_.*table).emplace(key, counter);
    if (inserted) ++counter;
    return it->second;
  }

  int memo(std::unordered_map<std::string, int> Layer::*table, const std::string& key) const {
    if (base_ != nullptr)
      if (const int* id = lookup(base_->*table, key)) return *id;
    if (const int* id = lookup(layer_.*table, key)) return *id;
    return -1;
  }

  void add_nf1(int a, int b) {
    if (a != b && b != kTop) layer_.nf1[a].push_back(b);
  }
  void add_nf2(int a, int b, int c) {
    layer_.nf2[a].emplace_back(b, c);
    if (a != b) layer_.nf2[b].emplace_back(a, c);
  }
  void add_nf3(int a, int r, int b) { layer_.nf3[a].emplace_back(r, b); }

  Layer& layer_;
  const Layer* base_;
};

// Goal-directed completion: only names reachable from the query's left-hand
// name are saturated.
class Saturation {
 public:
  Saturation(const Layer& base, const Layer& overlay) : layers_{&base, &overlay} {}

  bool derives(int x, int y) {
    goal_x_ = x;
    goal_y_ = y;
    activate(x);
    while (!found_ && !queue_.empty()) {
      auto [node, a] = queue_.front();
      queue_.pop_front();
      process(node, a);
    }
    return found_;
  }

 private:
  struct NodeState {
    std::unordered_set<int> subsumers;
    std::vector<int> order;
    std::vector<std::pair<int, int>> preds;  // (predecessor, role)
    std::unordered_set<std::uint64_t> succs;
  };

  void activate(int x) {
    if (nodes_.count(x)) return;
    nodes_[x];
    add(x, x);
    add(x, kTop);
  }

  void add(int x, int a) {
    NodeState& n = nodes_[x];
    if (!n.subsumers.insert(a).second) return;
    n.order.push_back(a);
    if (x == goal_x_ && a == goal_y_) found_ = true;
    queue_.emplace_back(x, a);
  }

  template <typename F>
  void each_nf1(int a, F&& f) const {
    for (const Layer* l : layers_)
      if (const auto* v = lookup(l->nf1, a))
        for (int b : *v) f(b);
  }
  template <typename F>
  void each_nf2(int a, F&& f) const {
    for (const Layer* l : layers_)
      if (const auto* v = lookup(l->nf2, a))
        for (const auto& [o, b] : *v) f(o, b);
  }
  template <typename F>
  void each_nf3(int a, F&& f) const {
    for (const Layer* l : layers_)
      if (const auto* v = lookup(l->nf3, a))
        for (const auto& [r, b] : *v) f(r, b);
  }
  template <typename F>
  void each_nf4(int r, int a, F&& f) const {
    for (const Layer* l : layers_)
      if (const auto* v = lookup(l->nf4, pack(r, a)))
        for (int b : *v) f(b);
  }

  void process(int x, int a) {
    each_nf1(a, [&](int b) { add(x, b); });
    each_nf2(a, [&](int other, int b) {
      if (nodes_[x].subsumers.count(other)) add(x, b);
    });
    each_nf3(a, [&](int r, int b) { link(x, r, b); });
    std::vector<std::pair<int, int>> preds = nodes_[x].preds;
    for (const auto& [z, r] : preds) each_nf4(r, a, [&](int b) { add(z, b); });
  }

  void link(int x, int r, int y) {
    if (!nodes_[x].succs.insert(pack(r, y)).second) return;
    activate(y);
    nodes_[y].preds.emplace_back(x, r);
    std::vector<int> known = nodes_[y].order;
    for (int a : known) each_nf4(r, a, [&](int b) { add(x, b); });
  }

  const Layer* layers_[2];
  std::unordered_map<int, NodeState> nodes_;
  std::deque<std::pair<int, int>> queue_;
  int goal_x_ = -1;
  int goal_y_ = -1;
  bool found_ = false;
};

bool same_role_assertion(const RoleAssertion& a, const RoleAssertion& b) {
  return a.role == b.role && a.subject == b.subject && a.object == b.object;
}

}  // namespace

struct EntailmentContext::Normalized {
  Layer layer;
};

EntailmentContext::EntailmentContext(std::span<const Axiom> axioms)
    : base_(std::make_unique<Normalized>()) {
  Normalizer n(base_->layer, nullptr);
  for (const auto& a : axioms) {
    n.add(a);
    if (a.is_role_assertion()) role_assertions_.push_back(a);
  }
}

EntailmentContext::~EntailmentContext() = default;
EntailmentContext::EntailmentContext(EntailmentContext&&) noexcept = default;
EntailmentContext& EntailmentContext::operator=(EntailmentContext&&) noexcept = default;

bool EntailmentContext::entails(const Axiom& query) const {
  return entails(query, {});
}

bool EntailmentContext::entails(const Axiom& query, std::span<const Axiom> extra) const {
  if (query.is_role_assertion()) {
    const auto& q = query.as_role_assertion();
    for (const auto* set : {&role_assertions_}) {
      for (const auto& a : *set)
        if (same_role_assertion(a.as_role_assertion(), q)) return true;
    }
    for (const auto& a : extra)
      if (a.is_role_assertion() && same_role_assertion(a.as_role_assertion(), q))
        return true;
    return false;
  }

  Layer overlay;
  Normalizer n(overlay, &base_->layer);
  for (const auto& a : extra) n.add(a);

  int x, y;
  if (query.is_gci()) {
    const auto& g = query.as_gci();
    if (subsumes_empty(g.lhs, g.rhs)) return true;
    x = n.pos(g.lhs);
    y = n.neg(g.rhs);
  } else {
    const auto& ca = query.as_concept_assertion();
    if (ca.cls.is_top()) return true;
    x = n.individual(ca.individual);
    y = n.neg(ca.cls);
  }
  if (x == y || y == kTop) return true;
  return Saturation(base_->layer, overlay).derives(x, y);
}

bool entails(std::span<const Axiom> axioms, const Axiom& query) {
  return EntailmentContext(axioms).entails(query);
}

bool entails(std::initializer_list<Axiom> axioms, const Axiom& query) {
  return EntailmentContext(std::span<const Axiom>(axioms.begin(), axioms.size()))
      .entails(query);
}

bool equivalent_axioms(const Axiom& a, const Axiom& b) {
  return entails({a}, b) && entails({b}, a);
}

bool is_tautology(const Axiom& a) {
  if (a.is_gci()) return subsumes_empty(a.as_gci().lhs, a.as_gci().rhs);
  if (a.is_concept_assertion())
    return equivalent_empty(a.as_concept_assertion().cls, Concept::top());
  return false;
}

}  // namespace elgr
