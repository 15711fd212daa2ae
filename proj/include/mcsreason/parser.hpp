#pragma once

#include <map>
#include <string>
#include <string_view>

#include "mcsreason/ontology.hpp"

namespace mcsreason {

// Prefix name (without the colon) -> namespace IRI. The owl, rdf, rdfs and
// xsd prefixes are always predeclared.
using PrefixMap = std::map<std::string, std::string>;

PrefixMap standard_prefixes();

struct ParseOptions {
  // Reject axioms that are tautologies or contradictions.
  bool reject_trivial = true;
};

struct ParsedDocument {
  Ontology ontology;
  PrefixMap prefixes;
};

// Parses the functional-syntax fragment:
//
//   Prefix(p:=<iri>)                      namespace declaration
//   Declaration(...)                      accepted and ignored
//   SubClassOf(C D) | EquivalentClasses(C D) | DisjointClasses(C D)
//   ClassAssertion(C a)
//   ObjectPropertyAssertion(r a b) | DataPropertyAssertion(dp a "v")
//   ObjectPropertyDomain(r C) | ObjectPropertyRange(r C) | DataPropertyDomain(dp C)
//   FunctionalObjectProperty(r)
//
// with concepts built from names, ObjectIntersectionOf, ObjectUnionOf,
// Object/DataSomeValuesFrom, Object/DataAllValuesFrom, ObjectHasValue and the
// Object/Data Exact/Min/MaxCardinality restrictions. '#' starts a comment.
// Axioms get ids a1, a2, ... in source order; structural duplicates are
// dropped.
ParsedDocument parse_document(std::string_view text, const ParseOptions& options = {});
Ontology parse_ontology(std::string_view text, const ParseOptions& options = {});

// Parses exactly one axiom statement (no prefix headers). The axiom id is set
// to `id`. Triviality is not checked.
Axiom parse_axiom(std::string_view text, const PrefixMap& prefixes = standard_prefixes(),
                  std::string id = "q");

// Like parse_axiom but reports any failure as MalformedQuery.
Axiom parse_query(std::string_view text, const PrefixMap& prefixes = standard_prefixes(),
                  std::string id = "q");

}  // namespace mcsreason
