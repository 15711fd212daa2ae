#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "mcsreason/ontology.hpp"

namespace mcsreason {

enum class ClashKind { DisjointnessClash, FunctionalClash, MaxCardinalityClash };

const char* to_string(ClashKind kind);

struct ClashReport {
  ClashKind kind = ClashKind::DisjointnessClash;
  // Ids of the axioms used to derive the clash, in input order. This subset is
  // itself inconsistent.
  std::vector<std::string> axiom_ids;
  // Individuals (and literals, rendered) involved in the clash.
  std::vector<std::string> individuals;
};

struct ConsistencyResult {
  bool consistent = true;
  std::optional<ClashReport> clash;

  explicit operator bool() const { return consistent; }
};

// Fixpoint of the saturation rules, exported for inspection.
struct SaturationState {
  // individual -> rendered concept expressions it belongs to
  std::map<std::string, std::vector<std::string>> memberships;
  // (role, subject, object); literal objects are rendered
  std::vector<std::tuple<std::string, std::string, std::string>> role_assertions;
  // named concept -> named concepts it is told-subsumed by (transitive)
  std::map<std::string, std::vector<std::string>> subsumers;
  std::optional<ClashReport> clash;
};

// Grounded forward-chaining saturation over the reasoning fragment:
// subclass/equivalence propagation through names and intersections,
// domain/range typing, ObjectHasValue, and clash rules for disjointness,
// functional roles and max-cardinality. Individuals and literals follow the
// unique name assumption. Other constructors are treated as atomic concepts.
ConsistencyResult check_consistency(std::span<const Axiom* const> axioms);
ConsistencyResult check_consistency(std::span<const Axiom> axioms);
ConsistencyResult check_consistency(const Ontology& onto, std::span<const AxiomIndex> subset);
ConsistencyResult check_consistency(const Ontology& onto);

bool is_consistent(std::span<const Axiom* const> axioms);
bool is_consistent(const Ontology& onto, std::span<const AxiomIndex> subset);

// True iff `query` is in the deductive closure of `axioms`. Throws
// InconsistentPremises when the premises are inconsistent.
bool entails(std::span<const Axiom* const> axioms, const Axiom& query);
bool entails(std::span<const Axiom> axioms, const Axiom& query);
bool entails(const Ontology& onto, std::span<const AxiomIndex> subset, const Axiom& query);

SaturationState saturate(std::span<const Axiom* const> axioms);

std::vector<const Axiom*> axiom_refs(const Ontology& onto, std::span<const AxiomIndex> subset);
std::vector<const Axiom*> axiom_refs(std::span<const Axiom> axioms);

}  // namespace mcsreason
