#include "mcsreason/consistency.hpp"

#include "mcsreason/error.hpp"
#include "saturation.hpp"

namespace mcsreason {

using detail::NodeId;
using detail::Saturation;

const char* to_string(ClashKind kind) {
  switch (kind) {
    case ClashKind::DisjointnessClash: return "DisjointnessClash";
    case ClashKind::FunctionalClash: return "FunctionalClash";
    case ClashKind::MaxCardinalityClash: return "MaxCardinalityClash";
  }
  return "Unknown";
}

std::vector<const Axiom*> axiom_refs(const Ontology& onto, std::span<const AxiomIndex> subset) {
  std::vector<const Axiom*> out;
  out.reserve(subset.size());
  for (AxiomIndex i : subset) out.push_back(&onto.at(i));
  return out;
}

std::vector<const Axiom*> axiom_refs(std::span<const Axiom> axioms) {
  std::vector<const Axiom*> out;
  out.reserve(axioms.size());
  for (const auto& a : axioms) out.push_back(&a);
  return out;
}

ConsistencyResult check_consistency(std::span<const Axiom* const> axioms) {
  Saturation sat(axioms);
  ConsistencyResult result;
  result.consistent = sat.run();
  result.clash = sat.clash();
  return result;
}

ConsistencyResult check_consistency(std::span<const Axiom> axioms) {
  auto refs = axiom_refs(axioms);
  return check_consistency(refs);
}

ConsistencyResult check_consistency(const Ontology& onto, std::span<const AxiomIndex> subset) {
  auto refs = axiom_refs(onto, subset);
  return check_consistency(refs);
}

ConsistencyResult check_consistency(const Ontology& onto) {
  return check_consistency(std::span<const Axiom>(onto.axioms()));
}

bool is_consistent(std::span<const Axiom* const> axioms) {
  Saturation sat(axioms);
  return sat.run();
}

bool is_consistent(const Ontology& onto, std::span<const AxiomIndex> subset) {
  auto refs = axiom_refs(onto, subset);
  return is_consistent(refs);
}

namespace {

// C ⊑ D holds iff a fresh instance of C is forced into D, or C is
// unsatisfiable.
bool entails_subsumption(std::span<const Axiom* const> axioms, const ConceptExpr& sub,
                         const ConceptExpr& super) {
  if (super.is_thing()) return true;
  Saturation sat(axioms);
  auto lhs = sat.intern(sub);
  auto rhs = sat.intern(super);
  NodeId x = sat.fresh_individual();
  sat.assert_membership(x, lhs, sat.add_source("query"));
  if (!sat.run()) return true;
  return sat.has_membership(x, rhs);
}

}  // namespace

bool entails(std::span<const Axiom* const> axioms, const Axiom& q) {
  if (!is_consistent(axioms))
    throw Error(ErrorCode::InconsistentPremises, "entailment asked of inconsistent premises");

  switch (q.kind) {
    case AxiomKind::ClassAssertion: {
      if (q.concepts[0].is_thing()) return true;
      Saturation sat(axioms);
      auto c = sat.intern(q.concepts[0]);
      NodeId a = sat.individual(q.subject);
      sat.run();
      return sat.has_membership(a, c);
    }
    case AxiomKind::SubClassOf:
      return entails_subsumption(axioms, q.concepts[0], q.concepts[1]);
    case AxiomKind::EquivalentClasses:
      return entails_subsumption(axioms, q.concepts[0], q.concepts[1]) &&
             entails_subsumption(axioms, q.concepts[1], q.concepts[0]);
    case AxiomKind::DisjointClasses: {
      Saturation sat(axioms);
      auto lhs = sat.intern(q.concepts[0]);
      auto rhs = sat.intern(q.concepts[1]);
      NodeId x = sat.fresh_individual();
      auto src = sat.add_source("query");
      sat.assert_membership(x, lhs, src);
      sat.assert_membership(x, rhs, src);
      return !sat.run();
    }
    case AxiomKind::ObjectPropertyAssertion: {
      Saturation sat(axioms);
      sat.run();
      auto s = sat.find_individual(q.subject);
      auto o = sat.find_individual(q.object);
      return s && o && sat.has_role(q.property, *s, *o);
    }
    case AxiomKind::DataPropertyAssertion: {
      Saturation sat(axioms);
      sat.run();
      auto s = sat.find_individual(q.subject);
      auto o = sat.find_literal(q.value);
      return s && o && sat.has_role(q.property, *s, *o);
    }
    case AxiomKind::ObjectPropertyDomain:
    case AxiomKind::ObjectPropertyRange:
    case AxiomKind::DataPropertyDomain: {
      if (q.concepts[0].is_thing()) return true;
      Saturation sat(axioms);
      auto c = sat.intern(q.concepts[0]);
      NodeId x = sat.fresh_individual();
      NodeId y = q.kind == AxiomKind::DataPropertyDomain ? sat.fresh_literal()
                                                          : sat.fresh_individual();
      sat.assert_role(q.property, x, y, sat.add_source("query"));
      if (!sat.run()) return true;
      return sat.has_membership(q.kind == AxiomKind::ObjectPropertyRange ? y : x, c);
    }
    case AxiomKind::FunctionalObjectProperty: {
      Saturation sat(axioms);
      NodeId x = sat.fresh_individual();
      auto src = sat.add_source("query");
      sat.assert_role(q.property, x, sat.fresh_individual(), src);
      sat.assert_role(q.property, x, sat.fresh_individual(), src);
      return !sat.run();
    }
  }
  return false;
}

bool entails(std::span<const Axiom> axioms, const Axiom& q) {
  auto refs = axiom_refs(axioms);
  return entails(refs, q);
}

bool entails(const Ontology& onto, std::span<const AxiomIndex> subset, const Axiom& q) {
  auto refs = axiom_refs(onto, subset);
  return entails(refs, q);
}

SaturationState saturate(std::span<const Axiom* const> axioms) {
  Saturation sat(axioms);
  sat.run();
  return sat.export_state();
}

bool is_trivial(const Axiom& a) {
  const Axiom* self[] = {&a};
  if (!is_consistent(self)) return true;
  return entails(std::span<const Axiom* const>{}, a);
}

}  // namespace mcsreason
