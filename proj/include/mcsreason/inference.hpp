#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcsreason/embed.hpp"
#include "mcsreason/mcs.hpp"
#include "mcsreason/ontology.hpp"
#include "mcsreason/scoring.hpp"

namespace mcsreason {

enum class MethodKind { Skeptical, CMCS, SharpMC, Embedding };

const char* to_string(MethodKind kind);
MethodKind parse_method(std::string_view s);

// How preferred MCSs are chosen. Embedding carries the axiom similarity
// matrix; it must have a row for every axiom of the ontology.
struct Method {
  MethodKind kind = MethodKind::Skeptical;
  std::optional<SimilarityMatrix> similarity;

  static Method skeptical() { return {MethodKind::Skeptical, std::nullopt}; }
  static Method cmcs() { return {MethodKind::CMCS, std::nullopt}; }
  static Method sharp_mc() { return {MethodKind::SharpMC, std::nullopt}; }
  static Method embedding(SimilarityMatrix sim) { return {MethodKind::Embedding, std::move(sim)}; }
};

enum class Verdict { Accepted, Rejected, Undetermined };

const char* to_string(Verdict v);  // lowercase
Verdict parse_verdict(std::string_view s);

struct McsVerdict {
  Mcs mcs;
  bool entails = false;
  bool consistent_with_query = true;
};

struct QueryAnswer {
  Verdict verdict = Verdict::Undetermined;
  std::vector<Mcs> preferred;
  std::vector<McsVerdict> records;
};

// Holds the offline stage for one ontology and method: mcs(Σ) and the
// per-axiom scores. Queries then only need entailment checks against the
// preferred subsets.
class Reasoner {
 public:
  Reasoner(Ontology onto, Method method, McsBudget budget = {});

  const Ontology& ontology() const { return onto_; }
  const Method& method() const { return method_; }
  const std::vector<Mcs>& all_mcs() const { return mcs_; }
  const SubsetScorer& scorer() const { return scorer_; }

  // ⪰-maximal members of mcs(Σ).
  const std::vector<Mcs>& preferred() const { return preferred_; }
  // ⪰-maximal members of mcs(Σ, alpha).
  std::vector<Mcs> preferred(const Axiom& alpha) const;

  // alpha |~ beta: every preferred Σi of mcs(Σ, alpha) has Σi ∪ {alpha} ⊨ beta.
  bool infers(const Axiom& alpha, const Axiom& beta) const;

  // Three-valued answer over preferred().
  QueryAnswer answer(const Axiom& query) const;

  // Maximal elements of `candidates` under the method's selection relation.
  std::vector<Mcs> select(std::vector<Mcs> candidates) const;

 private:
  Ontology onto_;
  Method method_;
  McsBudget budget_;
  std::vector<Mcs> mcs_;
  SubsetScorer scorer_;
  std::vector<Mcs> preferred_;
};

// Answers `query` against an already selected preferred set.
QueryAnswer answer_against(const Ontology& onto, const std::vector<Mcs>& preferred,
                           const Axiom& query);

std::vector<Mcs> preferred_mcs(const Ontology& onto, const Axiom& alpha, const Method& method,
                               const McsBudget& budget = {});
bool infers(const Ontology& onto, const Axiom& alpha, const Axiom& beta, const Method& method,
            const McsBudget& budget = {});
QueryAnswer answer_query(const Ontology& onto, const Axiom& query, const Method& method,
                         const McsBudget& budget = {});

}  // namespace mcsreason
