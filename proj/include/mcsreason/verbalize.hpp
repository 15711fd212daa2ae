#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcsreason/ontology.hpp"

namespace mcsreason {

struct Sentence {
  std::string id;
  std::string text;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Triple {
  std::string subject;
  std::string relation;
  std::string object;

  friend bool operator==(const Triple&, const Triple&) = default;
};

// Identifier to words: the local part of an IRI is split at camel-case
// boundaries and underscores; digits stay attached to the preceding word.
// Multi-word identifiers are lowercased, single words are kept verbatim, so
// "ExistingStuffType" -> "existing stuff type" and "Grape" -> "Grape".
std::string name_to_words(std::string_view name);

// Natural-language rendering using the phrase templates
//   SubClassOf(A B)          A is a kind of B
//   EquivalentClasses(A B)   A is a kind of B
//   DisjointClasses(A B)     A isn't a kind of B
//   ClassAssertion(A a)      a is a A
//   ObjectPropertyAssertion  a op b
//   DataPropertyAssertion    a dp v
//   *PropertyDomain(op A)    everything that op something is a A
//   ObjectPropertyRange      everything that is op by something is a A
//   FunctionalObjectProperty op has at most one value
// with concept expressions phrased recursively ("op at least one A", ...).
Sentence to_sentence(const Axiom& a);
std::string concept_phrase(const ConceptExpr& c);

// Triple rendering. Complex concepts are kept whole as their functional-syntax
// text. Returns nullopt for kinds without a triple rule (domain, range,
// functional).
std::optional<Triple> to_triple(const Axiom& a);

std::vector<Sentence> to_sentences(const Ontology& onto);

struct AxiomTriple {
  std::string id;
  std::optional<Triple> triple;
};

std::vector<AxiomTriple> to_triples(const Ontology& onto);

}  // namespace mcsreason
