#ifndef ELGR_TRACE_JSON_HPP
#define ELGR_TRACE_JSON_HPP

#include <json.hpp>

#include "elgr/axiom.hpp"
#include "elgr/justifications.hpp"
#include "elgr/repair.hpp"

namespace elgr {

/// {"label": ..., "text": ...}
nlohmann::json axiom_json(const Axiom& a);
/// Axioms in label order.
nlohmann::json axioms_json(const std::vector<Axiom>& axioms);
/// {"static": [...], "refutable": [...]}
nlohmann::json ontology_json(const Ontology& o);
nlohmann::json labels_json(const std::vector<Label>& labels);

/// {algorithm, weakening, iterations: [{justifications, hitting_set,
/// replacements: [{label, old, new}], entailed_after}], final, iteration_count}.
/// "new" is null for removed axioms.
nlohmann::json trace_json(const RepairTrace& trace);

}  // namespace elgr

#endif  // ELGR_TRACE_JSON_HPP
