#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mcsreason {

inline constexpr std::string_view kOwlThing = "http://www.w3.org/2002/07/owl#Thing";
inline constexpr std::string_view kOwlNothing = "http://www.w3.org/2002/07/owl#Nothing";
inline constexpr std::string_view kRdfsLiteral = "http://www.w3.org/2000/01/rdf-schema#Literal";

enum class ConceptKind {
  Named,
  IntersectionOf,
  UnionOf,
  SomeValuesFrom,
  AllValuesFrom,
  HasValue,
  ExactCardinality,
  MinCardinality,
  MaxCardinality,
};

// A concept expression tree. Field use depends on kind:
//   Named            name
//   IntersectionOf   operands (>= 2)
//   UnionOf          operands (>= 2)
//   Some/AllValues   role, operands[0] is the filler
//   HasValue         role, individual
//   *Cardinality     cardinality, role, operands[0] is the filler
// `data_role` marks the Data* flavour of a restriction (filler is a datatype).
struct ConceptExpr {
  ConceptKind kind = ConceptKind::Named;
  std::string name;
  std::string role;
  std::string individual;
  std::uint32_t cardinality = 0;
  bool data_role = false;
  std::vector<ConceptExpr> operands;

  static ConceptExpr named(std::string name);
  static ConceptExpr thing();
  static ConceptExpr nothing();
  static ConceptExpr intersection_of(std::vector<ConceptExpr> operands);
  static ConceptExpr union_of(std::vector<ConceptExpr> operands);
  static ConceptExpr some_values_from(std::string role, ConceptExpr filler);
  static ConceptExpr all_values_from(std::string role, ConceptExpr filler);
  static ConceptExpr has_value(std::string role, std::string individual);
  static ConceptExpr cardinality_of(ConceptKind kind, std::uint32_t n, std::string role,
                                    ConceptExpr filler, bool data_role = false);

  bool is_named() const { return kind == ConceptKind::Named; }
  bool is_thing() const { return is_named() && name == kOwlThing; }
  bool is_nothing() const { return is_named() && name == kOwlNothing; }
  const ConceptExpr& filler() const { return operands.at(0); }

  friend bool operator==(const ConceptExpr&, const ConceptExpr&) = default;
};

struct Literal {
  std::string lexical;
  std::string datatype;  // full IRI, empty for plain literals
  std::string language;

  friend bool operator==(const Literal&, const Literal&) = default;
};

enum class AxiomKind {
  SubClassOf,
  EquivalentClasses,
  DisjointClasses,
  ClassAssertion,
  ObjectPropertyAssertion,
  DataPropertyAssertion,
  ObjectPropertyDomain,
  ObjectPropertyRange,
  DataPropertyDomain,
  FunctionalObjectProperty,
};

const char* to_string(AxiomKind kind);

// One ontology statement. `concepts` holds C (and D for the binary class
// axioms); `property` the role; `subject`/`object` individuals; `value` the
// literal of a data assertion.
struct Axiom {
  std::string id;
  AxiomKind kind = AxiomKind::ClassAssertion;
  std::vector<ConceptExpr> concepts;
  std::string property;
  std::string subject;
  std::string object;
  Literal value;
  // Set on assertions added by the conflict injector.
  bool injected = false;

  static Axiom sub_class_of(ConceptExpr sub, ConceptExpr super);
  static Axiom equivalent_classes(ConceptExpr lhs, ConceptExpr rhs);
  static Axiom disjoint_classes(ConceptExpr lhs, ConceptExpr rhs);
  static Axiom class_assertion(ConceptExpr cls, std::string individual);
  static Axiom object_property_assertion(std::string role, std::string subject,
                                         std::string object);
  static Axiom data_property_assertion(std::string role, std::string subject, Literal value);
  static Axiom object_property_domain(std::string role, ConceptExpr cls);
  static Axiom object_property_range(std::string role, ConceptExpr cls);
  static Axiom data_property_domain(std::string role, ConceptExpr cls);
  static Axiom functional_object_property(std::string role);
};

// Equality ignoring id and metadata.
bool structurally_equal(const Axiom& a, const Axiom& b);

std::string render_concept(const ConceptExpr& c);
std::string render_literal(const Literal& l);
std::string render_axiom(const Axiom& a);
// Shortest form of a name: bare, standard-prefixed (owl:, rdf:, rdfs:, xsd:),
// or a full <iri>.
std::string render_name(std::string_view name);

using AxiomIndex = std::size_t;

// Finite ordered set of structurally distinct axioms with unique ids.
// Immutable after construction.
class Ontology {
 public:
  Ontology() = default;
  explicit Ontology(std::vector<Axiom> axioms);

  const std::vector<Axiom>& axioms() const { return axioms_; }
  std::size_t size() const { return axioms_.size(); }
  bool empty() const { return axioms_.empty(); }
  const Axiom& operator[](AxiomIndex i) const { return axioms_[i]; }
  const Axiom& at(AxiomIndex i) const;

  std::optional<AxiomIndex> find_id(std::string_view id) const;
  // Index of the axiom structurally equal to `a`, if any.
  std::optional<AxiomIndex> find(const Axiom& a) const;
  AxiomIndex index_of(std::string_view id) const;  // throws UnknownAxiom

  const std::vector<std::string>& concept_names() const { return concept_names_; }
  const std::vector<std::string>& role_names() const { return role_names_; }
  const std::vector<std::string>& individual_names() const { return individual_names_; }

  // Canonical text, one statement per line; injected axioms carry a trailing
  // "# injected" marker that the parser restores.
  std::string render() const;

  // Copy with extra axioms appended (ids must not collide).
  Ontology with(std::vector<Axiom> extra) const;

 private:
  std::vector<Axiom> axioms_;
  std::unordered_map<std::string, AxiomIndex> by_id_;
  std::vector<std::string> concept_names_;
  std::vector<std::string> role_names_;
  std::vector<std::string> individual_names_;
};

// True iff the axiom is a contradiction ({a} inconsistent) or a tautology
// (entailed by the empty set).
bool is_trivial(const Axiom& a);

}  // namespace mcsreason
