#include "elgr/concept.hpp"

#include <algorithm>
#include <set>

namespace elgr {

Concept::Concept() : Concept(top()) {}

Concept Concept::top() {
  static const std::shared_ptr<const Node> node = [] {
    auto n = std::make_shared<Node>();
    n->kind = ConceptKind::Top;
    n->text = "Top";
    n->size = 1;
    n->msize = 0;
    n->depth = 0;
    return n;
  }();
  return Concept(node);
}

Concept Concept::name(std::string id) {
  auto n = std::make_shared<Node>();
  n->kind = ConceptKind::Name;
  n->text = id;
  n->id = std::move(id);
  n->size = 1;
  n->msize = 1;
  n->depth = 0;
  return Concept(std::move(n));
}

Concept Concept::exists(std::string role, Concept filler) {
  auto n = std::make_shared<Node>();
  n->kind = ConceptKind::Exists;
  n->text.reserve(role.size() + filler.text().size() + 8);
  n->text += "some ";
  n->text += role;
  n->text += '.';
  if (filler.is_conj()) {
    n->text += '(';
    n->text += filler.text();
    n->text += ')';
  } else {
    n->text += filler.text();
  }
  n->size = 1 + filler.size();
  n->msize = 1 + filler.msize();
  n->depth = 1 + filler.role_depth();
  n->id = std::move(role);
  n->parts.push_back(std::move(filler));
  return Concept(std::move(n));
}

Concept Concept::conj(std::vector<Concept> parts) {
  std::vector<Concept> flat;
  flat.reserve(parts.size());
  for (auto& p : parts) {
    if (p.is_conj()) {
      for (const auto& q : p.parts()) flat.push_back(q);
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return top();
  if (flat.size() == 1) return flat.front();

  auto n = std::make_shared<Node>();
  n->kind = ConceptKind::Conj;
  n->size = 0;
  n->msize = 0;
  n->depth = 0;
  std::size_t len = 0;
  for (const auto& p : flat) len += p.text().size() + 5;
  n->text.reserve(len);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (i > 0) n->text += " and ";
    n->text += flat[i].text();
    n->size += flat[i].size();
    n->msize += flat[i].msize();
    n->depth = std::max(n->depth, flat[i].role_depth());
  }
  n->parts = std::move(flat);
  return Concept(std::move(n));
}

const Concept& Concept::filler() const {
  if (node_->kind == ConceptKind::Exists) return node_->parts.front();
  static const Concept top_concept = top();
  return top_concept;
}

std::span<const Concept> Concept::parts() const {
  if (node_->kind == ConceptKind::Conj) return node_->parts;
  return {};
}

std::vector<Concept> Concept::conjuncts() const {
  switch (node_->kind) {
    case ConceptKind::Top:
      return {};
    case ConceptKind::Conj:
      return node_->parts;
    default:
      return {*this};
  }
}

namespace {

void collect(const Concept& c, std::set<std::string>& names,
             std::set<std::string>& roles) {
  switch (c.kind()) {
    case ConceptKind::Top:
      break;
    case ConceptKind::Name:
      names.insert(c.id());
      break;
    case ConceptKind::Exists:
      roles.insert(c.role());
      collect(c.filler(), names, roles);
      break;
    case ConceptKind::Conj:
      for (const auto& p : c.parts()) collect(p, names, roles);
      break;
  }
}

}  // namespace

std::vector<std::string> concept_names(const Concept& c) {
  std::set<std::string> names, roles;
  collect(c, names, roles);
  return {names.begin(), names.end()};
}

std::vector<std::string> role_names(const Concept& c) {
  std::set<std::string> names, roles;
  collect(c, names, roles);
  return {roles.begin(), roles.end()};
}

}  // namespace elgr
