#ifndef ELGR_CONCEPT_HPP
#define ELGR_CONCEPT_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace elgr {

enum class ConceptKind { Top, Name, Conj, Exists };

/// Immutable EL concept: Top, a concept name, a conjunction of at least two
/// parts, or an existential restriction.
///
/// Conjunctions are flattened on construction, so a Conj never has a Conj
/// part. Parts keep the order they were given in; reduce() produces the
/// canonical (sorted, redundancy-free) representative. Copies share the
/// underlying node.
class Concept {
 public:
  Concept();  // Top

  static Concept top();
  static Concept name(std::string id);
  static Concept exists(std::string role, Concept filler);
  /// Flattens nested conjunctions. Zero parts yield Top, one part yields
  /// that part unchanged.
  static Concept conj(std::vector<Concept> parts);

  ConceptKind kind() const { return node_->kind; }
  bool is_top() const { return node_->kind == ConceptKind::Top; }
  bool is_name() const { return node_->kind == ConceptKind::Name; }
  bool is_conj() const { return node_->kind == ConceptKind::Conj; }
  bool is_exists() const { return node_->kind == ConceptKind::Exists; }

  /// Concept name for Name, role name for Exists, empty otherwise.
  const std::string& id() const { return node_->id; }
  const std::string& role() const { return node_->id; }
  /// Filler of an existential restriction; Top for other kinds.
  const Concept& filler() const;
  /// Parts of a conjunction; empty for other kinds.
  std::span<const Concept> parts() const;
  /// Top-level conjuncts: the parts of a Conj, nothing for Top, the concept
  /// itself otherwise.
  std::vector<Concept> conjuncts() const;

  /// Rendering of this exact tree, parts in stored order. For reduced
  /// concepts this is the canonical text.
  const std::string& text() const { return node_->text; }

  /// Occurrences of Top, concept names and role names.
  std::size_t size() const { return node_->size; }
  /// Occurrences of concept names and role names only.
  std::size_t msize() const { return node_->msize; }
  std::size_t role_depth() const { return node_->depth; }

  /// Syntactic identity (same tree, same part order).
  friend bool operator==(const Concept& a, const Concept& b) {
    return a.node_ == b.node_ || a.node_->text == b.node_->text;
  }

 private:
  struct Node {
    ConceptKind kind = ConceptKind::Top;
    std::string id;
    std::vector<Concept> parts;  // Conj parts, or the single Exists filler
    std::string text;
    std::size_t size = 1;
    std::size_t msize = 0;
    std::size_t depth = 0;
  };

  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Orders concepts by their text; used wherever a deterministic order is
/// needed.
struct ConceptTextLess {
  bool operator()(const Concept& a, const Concept& b) const {
    return a.text() < b.text();
  }
};

/// Concept names occurring anywhere in `c`, sorted and unique.
std::vector<std::string> concept_names(const Concept& c);
/// Role names occurring anywhere in `c`, sorted and unique.
std::vector<std::string> role_names(const Concept& c);

}  // namespace elgr

#endif  // ELGR_CONCEPT_HPP
