#ifndef ELGR_RENDER_HPP
#define ELGR_RENDER_HPP

#include <string>

#include "elgr/axiom.hpp"
#include "elgr/concept.hpp"

namespace elgr {

/// Canonical text of the reduced form, conjuncts sorted by their own text.
std::string render(const Concept& c);
/// Canonical axiom text, e.g. "A SubClassOf some r.B", "(A and B)(a)",
/// "r(a, b)". Concepts are reduced first.
std::string render(const Axiom& a);
/// Ontology file text with [static] and [refutable] sections; axioms appear
/// in label order.
std::string render(const Ontology& o);

}  // namespace elgr

#endif  // ELGR_RENDER_HPP
