#ifndef ELGR_NEIGHBORS_HPP
#define ELGR_NEIGHBORS_HPP

#include <vector>

#include "elgr/concept.hpp"

namespace elgr {

/// Upper neighbors of reduce(c) in the empty-TBox subsumption order: drop one
/// top-level name, or replace one top-level some r.E by the conjunction of
/// some r.F over the upper neighbors F of E. Results are reduced, unique and
/// sorted by text.
std::vector<Concept> upper_neighbors(const Concept& c);

/// Concepts one syntactic-generalization step above c: replace one name or
/// one some r.Top in reduce(c) by Top, reduce, and keep the
/// subsumption-minimal candidates. Sorted by text.
std::vector<Concept> syn_one_step_up(const Concept& c);

/// d is (equivalent to) the result of replacing occurrences of subconcepts
/// of reduce(c) by Top. The reflexive variant accepts zero replacements; the
/// strict variant additionally requires c and d to be inequivalent.
bool syn_generalizes(const Concept& c, const Concept& d);
bool strictly_syn_generalizes(const Concept& c, const Concept& d);

/// All reduced D'' with d ⊑syn D'' and D'' one syntactic step below
/// d_prime, sorted by text. Throws std::invalid_argument unless
/// syn_generalizes(d, d_prime).
std::vector<Concept> syn_one_step_down_toward(const Concept& d, const Concept& d_prime);

}  // namespace elgr

#endif  // ELGR_NEIGHBORS_HPP
