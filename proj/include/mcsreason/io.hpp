#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mcsreason/consistency.hpp"
#include "mcsreason/embed.hpp"
#include "mcsreason/harness.hpp"
#include "mcsreason/inference.hpp"
#include "mcsreason/mcs.hpp"
#include "mcsreason/scoring.hpp"
#include "mcsreason/verbalize.hpp"

namespace mcsreason::io {

// Sentences JSONL: {"id": string, "text": string} per line.
void write_sentences(std::ostream& out, std::span<const Sentence> sentences);
std::vector<Sentence> read_sentences(std::istream& in);

// Vectors JSONL: {"id": string, "vector": [numbers]} per line. Read with
// import_vectors.
void write_vectors(std::ostream& out, const AxiomEmbedding& emb);

// Triples TSV: id, subject, relation, object. Tabs, newlines and backslashes
// inside fields are escaped as \t, \n, \\. Axioms without a triple are
// skipped; returns how many were.
std::size_t write_triples(std::ostream& out, std::span<const AxiomTriple> triples);
std::vector<AxiomTriple> read_triples(std::istream& in);

std::string mcs_json(const Ontology& onto, std::span<const Mcs> mcs);
std::string consistency_json(const ConsistencyResult& r);
std::string scored_json(std::span<const ScoredMcs> scored);
std::string report_json(const EvalReport& r);

// One line of `query` output.
struct AnswerRecord {
  std::optional<std::string> id;
  std::string query;
  Verdict verdict = Verdict::Undetermined;
  std::vector<std::vector<std::string>> preferred_mcs;
};

std::string answer_json(const AnswerRecord& r);
std::vector<AnswerRecord> read_answers(std::istream& in);

// Pairs answers with gold records: by "id" when the answer has one, otherwise
// by identical query text. Unmatched answers throw GoldMismatch.
std::vector<MethodAnswer> match_answers(std::span<const AnswerRecord> answers,
                                        std::span<const GoldRecord> gold);

// Sidecar cache written by `select` and read by `query`.
struct SelectionCache {
  std::string key;
  std::string method;
  std::vector<std::vector<std::string>> preferred_mcs;
};

std::string cache_json(const SelectionCache& c);
std::optional<SelectionCache> read_cache(std::istream& in);

}  // namespace mcsreason::io
