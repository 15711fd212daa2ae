#include "mcsreason/inference.hpp"

#include <algorithm>

#include "mcsreason/consistency.hpp"
#include "mcsreason/error.hpp"

namespace mcsreason {

const char* to_string(MethodKind kind) {
  switch (kind) {
    case MethodKind::Skeptical: return "skeptical";
    case MethodKind::CMCS: return "cmcs";
    case MethodKind::SharpMC: return "sharp-mc";
    case MethodKind::Embedding: return "embedding";
  }
  return "?";
}

MethodKind parse_method(std::string_view s) {
  if (s == "skeptical") return MethodKind::Skeptical;
  if (s == "cmcs") return MethodKind::CMCS;
  if (s == "sharp-mc" || s == "sharpmc" || s == "#mc") return MethodKind::SharpMC;
  if (s == "embedding" || s == "mc") return MethodKind::Embedding;
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + std::string(s) + "'");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Accepted: return "accepted";
    case Verdict::Rejected: return "rejected";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

Verdict parse_verdict(std::string_view s) {
  if (s == "accepted") return Verdict::Accepted;
  if (s == "rejected") return Verdict::Rejected;
  if (s == "undetermined") return Verdict::Undetermined;
  throw Error(ErrorCode::InvalidArgument, "unknown verdict '" + std::string(s) + "'");
}

namespace {

AxiomScores method_scores(const Ontology& onto, const std::vector<Mcs>& mcs, const Method& m) {
  switch (m.kind) {
    case MethodKind::Skeptical: return AxiomScores(onto.size(), 0.0);
    case MethodKind::CMCS: return AxiomScores(onto.size(), 1.0);
    case MethodKind::SharpMC: return sharp_mc_scores(onto, mcs);
    case MethodKind::Embedding:
      if (!m.similarity)
        throw Error(ErrorCode::InvalidArgument, "embedding method needs a similarity matrix");
      return mc_scores(onto, mcs, *m.similarity);
  }
  return AxiomScores(onto.size(), 0.0);
}

}  // namespace

Reasoner::Reasoner(Ontology onto, Method method, McsBudget budget)
    : onto_(std::move(onto)),
      method_(std::move(method)),
      budget_(budget),
      mcs_(enumerate_mcs(onto_, budget_)),
      scorer_(method_scores(onto_, mcs_, method_)),
      preferred_(select(mcs_)) {}

std::vector<Mcs> Reasoner::select(std::vector<Mcs> candidates) const {
  if (method_.kind == MethodKind::Skeptical || candidates.size() <= 1) return candidates;
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const Mcs& c : candidates) scores.push_back(scorer_(c.members));
  double best = *std::max_element(scores.begin(), scores.end());
  std::vector<Mcs> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (compare_scores(scores[i], best) == Comparison::Tie) out.push_back(std::move(candidates[i]));
  return out;
}

std::vector<Mcs> Reasoner::preferred(const Axiom& alpha) const {
  return select(enumerate_mcs_with(onto_, alpha, budget_));
}

bool Reasoner::infers(const Axiom& alpha, const Axiom& beta) const {
  for (const Mcs& m : preferred(alpha)) {
    auto refs = axiom_refs(onto_, m.members);
    refs.push_back(&alpha);
    if (!entails(refs, beta)) return false;
  }
  return true;
}

QueryAnswer Reasoner::answer(const Axiom& query) const {
  return answer_against(onto_, preferred_, query);
}

QueryAnswer answer_against(const Ontology& onto, const std::vector<Mcs>& preferred,
                           const Axiom& query) {
  QueryAnswer out;
  out.preferred = preferred;
  bool all_entail = true, all_clash = true;
  for (const Mcs& m : preferred) {
    McsVerdict rec{m, false, true};
    auto refs = axiom_refs(onto, m.members);
    rec.entails = entails(refs, query);
    refs.push_back(&query);
    rec.consistent_with_query = is_consistent(refs);
    all_entail = all_entail && rec.entails;
    all_clash = all_clash && !rec.consistent_with_query;
    out.records.push_back(std::move(rec));
  }
  if (preferred.empty())
    out.verdict = Verdict::Undetermined;
  else if (all_entail)
    out.verdict = Verdict::Accepted;
  else if (all_clash)
    out.verdict = Verdict::Rejected;
  else
    out.verdict = Verdict::Undetermined;
  return out;
}

std::vector<Mcs> preferred_mcs(const Ontology& onto, const Axiom& alpha, const Method& method,
                               const McsBudget& budget) {
  return Reasoner(onto, method, budget).preferred(alpha);
}

bool infers(const Ontology& onto, const Axiom& alpha, const Axiom& beta, const Method& method,
            const McsBudget& budget) {
  return Reasoner(onto, method, budget).infers(alpha, beta);
}

QueryAnswer answer_query(const Ontology& onto, const Axiom& query, const Method& method,
                         const McsBudget& budget) {
  return Reasoner(onto, method, budget).answer(query);
}

}  // namespace mcsreason
