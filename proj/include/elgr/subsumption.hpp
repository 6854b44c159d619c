#ifndef ELGR_SUBSUMPTION_HPP
#define ELGR_SUBSUMPTION_HPP

#include "elgr/concept.hpp"

namespace elgr {

/// C is subsumed by D with respect to the empty ontology, decided by the
/// recursive structural characterization: every top-level name of D is a
/// top-level name of C, and every top-level restriction some s.Dj of D has a
/// top-level restriction some s.Ci in C with Ci subsumed by Dj.
bool subsumes_empty(const Concept& c, const Concept& d);

bool strictly_subsumed_empty(const Concept& c, const Concept& d);
bool equivalent_empty(const Concept& c, const Concept& d);

/// Reduced form: bottom-up, every conjunct subsumed by a distinct sibling is
/// removed; among equivalent siblings the one with the smaller rendering is
/// kept. Conjuncts of the result are sorted by text, so two concepts are
/// equivalent iff their reduced forms have the same text. Idempotent.
Concept reduce(const Concept& c);

}  // namespace elgr

#endif  // ELGR_SUBSUMPTION_HPP
