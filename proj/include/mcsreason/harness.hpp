#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "mcsreason/inference.hpp"
#include "mcsreason/mcs.hpp"
#include "mcsreason/ontology.hpp"

namespace mcsreason {

// Adds n conflicts to a consistent ontology. A functional-role conflict adds
// a second ObjectPropertyAssertion with a distinct filler for an asserted
// (role, subject); a disjointness conflict puts one individual into both
// sides of a DisjointClasses over names. New axioms are flagged `injected`
// and get fresh ids a<k>. Throws NoConflictTargets if there are fewer than
// n targets.
Ontology inject_conflicts(const Ontology& onto, std::size_t n, std::uint64_t seed);

// Removes every axiom flagged `injected`.
Ontology strip_injected(const Ontology& onto);

enum class AnswerClass { IA, CA, RA, CIA };

const char* to_string(AnswerClass c);

AnswerClass classify_answer(Verdict method, Verdict gold);

struct GoldRecord {
  std::string id;
  std::string query;
  Verdict gold = Verdict::Undetermined;
};

struct MethodAnswer {
  std::string id;
  Verdict verdict = Verdict::Undetermined;
};

struct EvalReport {
  std::size_t ia = 0, ca = 0, ra = 0, cia = 0, total = 0;
  double ia_rate = 0, icr_rate = 0;

  static EvalReport from_counts(std::size_t ia, std::size_t ca, std::size_t ra, std::size_t cia);
};

// answers and gold must cover the same ids, each once (GoldMismatch).
EvalReport evaluate(std::span<const MethodAnswer> answers, std::span<const GoldRecord> gold);

// Header "id,query,gold"; fields may be double-quoted with "" escapes.
std::vector<GoldRecord> read_gold_csv(std::istream& in);
void write_gold_csv(std::ostream& out, std::span<const GoldRecord> gold);

struct QueryGenConfig {
  std::size_t count = 20;
  std::uint64_t seed = 0;
  // Sampling weight of symbols that occur in some minimal conflict.
  double conflict_weight = 3.0;
};

// Distinct ClassAssertion queries over the signature (concept names x
// individuals). Symbols of axioms missing from at least one MCS, i.e. those
// in some minimal conflict, are weighted by conflict_weight. May return
// fewer than `count` when the signature is exhausted.
std::vector<Axiom> generate_queries(const Ontology& onto, std::span<const Mcs> mcs,
                                    const QueryGenConfig& config);

}  // namespace mcsreason
