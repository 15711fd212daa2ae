#include "mcsreason/ontology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mcsreason/error.hpp"

namespace mcsreason {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorCode::TrivialAxiom: return "TrivialAxiom";
    case ErrorCode::InconsistentPremises: return "InconsistentPremises";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownAxiom: return "UnknownAxiom";
    case ErrorCode::UnknownSubset: return "UnknownSubset";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::Untranslatable: return "Untranslatable";
    case ErrorCode::EmptySentence: return "EmptySentence";
    case ErrorCode::NoTriples: return "NoTriples";
    case ErrorCode::MissingAxiom: return "MissingAxiom";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NoConflictTargets: return "NoConflictTargets";
    case ErrorCode::GoldMismatch: return "GoldMismatch";
    case ErrorCode::MalformedQuery: return "MalformedQuery";
  }
  return "Unknown";
}

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& what)
    : Error(ErrorCode::SyntaxError,
            "syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
                what),
      line_(line),
      column_(column) {}

const char* to_string(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::SubClassOf: return "SubClassOf";
    case AxiomKind::EquivalentClasses: return "EquivalentClasses";
    case AxiomKind::DisjointClasses: return "DisjointClasses";
    case AxiomKind::ClassAssertion: return "ClassAssertion";
    case AxiomKind::ObjectPropertyAssertion: return "ObjectPropertyAssertion";
    case AxiomKind::DataPropertyAssertion: return "DataPropertyAssertion";
    case AxiomKind::ObjectPropertyDomain: return "ObjectPropertyDomain";
    case AxiomKind::ObjectPropertyRange: return "ObjectPropertyRange";
    case AxiomKind::DataPropertyDomain: return "DataPropertyDomain";
    case AxiomKind::FunctionalObjectProperty: return "FunctionalObjectProperty";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Construction helpers

ConceptExpr ConceptExpr::named(std::string name) {
  ConceptExpr c;
  c.kind = ConceptKind::Named;
  c.name = std::move(name);
  return c;
}

ConceptExpr ConceptExpr::thing() { return named(std::string(kOwlThing)); }
ConceptExpr ConceptExpr::nothing() { return named(std::string(kOwlNothing)); }

ConceptExpr ConceptExpr::intersection_of(std::vector<ConceptExpr> operands) {
  if (operands.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "ObjectIntersectionOf needs at least 2 operands");
  ConceptExpr c;
  c.kind = ConceptKind::IntersectionOf;
  c.operands = std::move(operands);
  return c;
}

ConceptExpr ConceptExpr::union_of(std::vector<ConceptExpr> operands) {
  if (operands.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "ObjectUnionOf needs at least 2 operands");
  ConceptExpr c;
  c.kind = ConceptKind::UnionOf;
  c.operands = std::move(operands);
  return c;
}

ConceptExpr ConceptExpr::some_values_from(std::string role, ConceptExpr filler) {
  ConceptExpr c;
  c.kind = ConceptKind::SomeValuesFrom;
  c.role = std::move(role);
  c.operands.push_back(std::move(filler));
  return c;
}

ConceptExpr ConceptExpr::all_values_from(std::string role, ConceptExpr filler) {
  ConceptExpr c;
  c.kind = ConceptKind::AllValuesFrom;
  c.role = std::move(role);
  c.operands.push_back(std::move(filler));
  return c;
}

ConceptExpr ConceptExpr::has_value(std::string role, std::string individual) {
  ConceptExpr c;
  c.kind = ConceptKind::HasValue;
  c.role = std::move(role);
  c.individual = std::move(individual);
  return c;
}

ConceptExpr ConceptExpr::cardinality_of(ConceptKind kind, std::uint32_t n, std::string role,
                                        ConceptExpr filler, bool data_role) {
  if (kind != ConceptKind::ExactCardinality && kind != ConceptKind::MinCardinality &&
      kind != ConceptKind::MaxCardinality)
    throw Error(ErrorCode::InvalidArgument, "not a cardinality kind");
  ConceptExpr c;
  c.kind = kind;
  c.cardinality = n;
  c.role = std::move(role);
  c.data_role = data_role;
  c.operands.push_back(std::move(filler));
  return c;
}

Axiom Axiom::sub_class_of(ConceptExpr sub, ConceptExpr super) {
  Axiom a;
  a.kind = AxiomKind::SubClassOf;
  a.concepts = {std::move(sub), std::move(super)};
  return a;
}

Axiom Axiom::equivalent_classes(ConceptExpr lhs, ConceptExpr rhs) {
  Axiom a;
  a.kind = AxiomKind::EquivalentClasses;
  a.concepts = {std::move(lhs), std::move(rhs)};
  return a;
}

Axiom Axiom::disjoint_classes(ConceptExpr lhs, ConceptExpr rhs) {
  Axiom a;
  a.kind = AxiomKind::DisjointClasses;
  a.concepts = {std::move(lhs), std::move(rhs)};
  return a;
}

Axiom Axiom::class_assertion(ConceptExpr cls, std::string individual) {
  Axiom a;
  a.kind = AxiomKind::ClassAssertion;
  a.concepts = {std::move(cls)};
  a.subject = std::move(individual);
  return a;
}

Axiom Axiom::object_property_assertion(std::string role, std::string subject,
                                       std::string object) {
  Axiom a;
  a.kind = AxiomKind::ObjectPropertyAssertion;
  a.property = std::move(role);
  a.subject = std::move(subject);
  a.object = std::move(object);
  return a;
}

Axiom Axiom::data_property_assertion(std::string role, std::string subject, Literal value) {
  Axiom a;
  a.kind = AxiomKind::DataPropertyAssertion;
  a.property = std::move(role);
  a.subject = std::move(subject);
  a.value = std::move(value);
  return a;
}

Axiom Axiom::object_property_domain(std::string role, ConceptExpr cls) {
  Axiom a;
  a.kind = AxiomKind::ObjectPropertyDomain;
  a.property = std::move(role);
  a.concepts = {std::move(cls)};
  return a;
}

Axiom Axiom::object_property_range(std::string role, ConceptExpr cls) {
  Axiom a;
  a.kind = AxiomKind::ObjectPropertyRange;
  a.property = std::move(role);
  a.concepts = {std::move(cls)};
  return a;
}

Axiom Axiom::data_property_domain(std::string role, ConceptExpr cls) {
  Axiom a;
  a.kind = AxiomKind::DataPropertyDomain;
  a.property = std::move(role);
  a.concepts = {std::move(cls)};
  return a;
}

Axiom Axiom::functional_object_property(std::string role) {
  Axiom a;
  a.kind = AxiomKind::FunctionalObjectProperty;
  a.property = std::move(role);
  return a;
}

bool structurally_equal(const Axiom& a, const Axiom& b) {
  return a.kind == b.kind && a.concepts == b.concepts && a.property == b.property &&
         a.subject == b.subject && a.object == b.object && a.value == b.value;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

struct StandardPrefix {
  std::string_view prefix;
  std::string_view iri;
};

constexpr StandardPrefix kStandardPrefixes[] = {
    {"owl", "http://www.w3.org/2002/07/owl#"},
    {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
    {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
    {"xsd", "http://www.w3.org/2001/XMLSchema#"},
};

bool bare_char(char ch) {
  return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
         ch == '_' || ch == '-' || ch == '.' || static_cast<unsigned char>(ch) >= 0x80;
}

bool is_bare_name(std::string_view s) {
  if (s.empty() || s.front() == '-' || s.front() == '.' || s.back() == '.') return false;
  return std::all_of(s.begin(), s.end(), bare_char);
}

void render_concept_to(std::ostream& os, const ConceptExpr& c) {
  const char* flavour = c.data_role ? "Data" : "Object";
  switch (c.kind) {
    case ConceptKind::Named:
      os << render_name(c.name);
      return;
    case ConceptKind::IntersectionOf:
    case ConceptKind::UnionOf:
      os << (c.kind == ConceptKind::IntersectionOf ? "ObjectIntersectionOf(" : "ObjectUnionOf(");
      for (std::size_t i = 0; i < c.operands.size(); ++i) {
        if (i) os << ' ';
        render_concept_to(os, c.operands[i]);
      }
      os << ')';
      return;
    case ConceptKind::SomeValuesFrom:
    case ConceptKind::AllValuesFrom:
      os << flavour
         << (c.kind == ConceptKind::SomeValuesFrom ? "SomeValuesFrom(" : "AllValuesFrom(")
         << render_name(c.role) << ' ';
      render_concept_to(os, c.filler());
      os << ')';
      return;
    case ConceptKind::HasValue:
      os << "ObjectHasValue(" << render_name(c.role) << ' ' << render_name(c.individual) << ')';
      return;
    case ConceptKind::ExactCardinality:
    case ConceptKind::MinCardinality:
    case ConceptKind::MaxCardinality: {
      const char* op = c.kind == ConceptKind::ExactCardinality ? "ExactCardinality("
                       : c.kind == ConceptKind::MinCardinality ? "MinCardinality("
                                                               : "MaxCardinality(";
      os << flavour << op << c.cardinality << ' ' << render_name(c.role);
      const ConceptExpr& f = c.filler();
      bool implicit = f.is_named() && f.name == (c.data_role ? kRdfsLiteral : kOwlThing);
      if (!implicit) {
        os << ' ';
        render_concept_to(os, f);
      }
      os << ')';
      return;
    }
  }
}

}  // namespace

std::string render_name(std::string_view name) {
  if (is_bare_name(name)) return std::string(name);
  for (const auto& p : kStandardPrefixes) {
    if (name.size() > p.iri.size() && name.substr(0, p.iri.size()) == p.iri) {
      std::string_view local = name.substr(p.iri.size());
      if (is_bare_name(local)) return std::string(p.prefix) + ":" + std::string(local);
    }
  }
  return "<" + std::string(name) + ">";
}

std::string render_concept(const ConceptExpr& c) {
  std::ostringstream os;
  render_concept_to(os, c);
  return os.str();
}

std::string render_literal(const Literal& l) {
  std::string out = "\"";
  for (char ch : l.lexical) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  if (!l.datatype.empty()) out += "^^" + render_name(l.datatype);
  if (!l.language.empty()) out += "@" + l.language;
  return out;
}

std::string render_axiom(const Axiom& a) {
  std::ostringstream os;
  os << to_string(a.kind) << '(';
  switch (a.kind) {
    case AxiomKind::SubClassOf:
    case AxiomKind::EquivalentClasses:
    case AxiomKind::DisjointClasses:
      os << render_concept(a.concepts.at(0)) << ' ' << render_concept(a.concepts.at(1));
      break;
    case AxiomKind::ClassAssertion:
      os << render_concept(a.concepts.at(0)) << ' ' << render_name(a.subject);
      break;
    case AxiomKind::ObjectPropertyAssertion:
      os << render_name(a.property) << ' ' << render_name(a.subject) << ' '
         << render_name(a.object);
      break;
    case AxiomKind::DataPropertyAssertion:
      os << render_name(a.property) << ' ' << render_name(a.subject) << ' '
         << render_literal(a.value);
      break;
    case AxiomKind::ObjectPropertyDomain:
    case AxiomKind::ObjectPropertyRange:
    case AxiomKind::DataPropertyDomain:
      os << render_name(a.property) << ' ' << render_concept(a.concepts.at(0));
      break;
    case AxiomKind::FunctionalObjectProperty:
      os << render_name(a.property);
      break;
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Ontology

namespace {

struct SignatureCollector {
  std::set<std::string> concepts, roles, individuals;

  void visit(const ConceptExpr& c) {
    if (c.kind == ConceptKind::Named) {
      concepts.insert(c.name);
      return;
    }
    if (!c.role.empty()) roles.insert(c.role);
    if (!c.individual.empty()) individuals.insert(c.individual);
    // data restriction fillers are datatypes, not concepts
    if (c.data_role) return;
    for (const auto& op : c.operands) visit(op);
  }

  void axiom(const Axiom& a) {
    for (const auto& c : a.concepts) visit(c);
    if (!a.property.empty()) roles.insert(a.property);
    if (!a.subject.empty()) individuals.insert(a.subject);
    if (!a.object.empty()) individuals.insert(a.object);
  }
};

}  // namespace

Ontology::Ontology(std::vector<Axiom> axioms) : axioms_(std::move(axioms)) {
  SignatureCollector sig;
  for (AxiomIndex i = 0; i < axioms_.size(); ++i) {
    const Axiom& a = axioms_[i];
    if (a.id.empty()) throw Error(ErrorCode::InvalidArgument, "axiom without id");
    if (!by_id_.emplace(a.id, i).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate axiom id " + a.id);
    for (AxiomIndex j = 0; j < i; ++j) {
      if (structurally_equal(axioms_[j], a))
        throw Error(ErrorCode::InvalidArgument,
                    "axioms " + axioms_[j].id + " and " + a.id + " are structurally identical");
    }
    sig.axiom(a);
  }
  concept_names_.assign(sig.concepts.begin(), sig.concepts.end());
  role_names_.assign(sig.roles.begin(), sig.roles.end());
  individual_names_.assign(sig.individuals.begin(), sig.individuals.end());
}

const Axiom& Ontology::at(AxiomIndex i) const {
  if (i >= axioms_.size())
    throw Error(ErrorCode::UnknownAxiom, "axiom index " + std::to_string(i) + " out of range");
  return axioms_[i];
}

std::optional<AxiomIndex> Ontology::find_id(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<AxiomIndex> Ontology::find(const Axiom& a) const {
  for (AxiomIndex i = 0; i < axioms_.size(); ++i)
    if (structurally_equal(axioms_[i], a)) return i;
  return std::nullopt;
}

AxiomIndex Ontology::index_of(std::string_view id) const {
  auto i = find_id(id);
  if (!i) throw Error(ErrorCode::UnknownAxiom, "unknown axiom id " + std::string(id));
  return *i;
}

std::string Ontology::render() const {
  std::string out;
  for (const auto& a : axioms_) {
    out += render_axiom(a);
    if (a.injected) out += " # injected";
    out += '\n';
  }
  return out;
}

Ontology Ontology::with(std::vector<Axiom> extra) const {
  std::vector<Axiom> all = axioms_;
  all.insert(all.end(), std::make_move_iterator(extra.begin()),
             std::make_move_iterator(extra.end()));
  return Ontology(std::move(all));
}

}  // namespace mcsreason
