#ifndef ELGR_PARSER_HPP
#define ELGR_PARSER_HPP

#include <string_view>

#include "elgr/axiom.hpp"
#include "elgr/concept.hpp"

namespace elgr {

// Grammar (`#` comments run to end of line):
//
//   File      ::= ("[static]" AxiomLine*)? ("[refutable]" AxiomLine*)?
//   AxiomLine ::= Concept "SubClassOf" Concept
//               | Atom "(" Ident ")"
//               | Ident "(" Ident "," Ident ")"
//   Concept   ::= Atom ("and" Atom)*
//   Atom      ::= "Top" | Ident | "(" Concept ")" | "some" Ident "." Atom
//
// Identifiers starting with "__" are reserved. All functions throw
// ParseError with the line and column of the offending token.

Concept parse_concept(std::string_view text);
/// A single axiom; the result carries an empty label.
Axiom parse_axiom(std::string_view text);
/// Labels axioms s1, s2, ... and r1, r2, ... in file order.
Ontology parse_ontology(std::string_view text);

}  // namespace elgr

#endif  // ELGR_PARSER_HPP
