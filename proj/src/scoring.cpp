#include "mcsreason/scoring.hpp"

#include <algorithm>
#include <cmath>

#include "mcsreason/error.hpp"

namespace mcsreason {

namespace {

void require_axiom(const Ontology& onto, AxiomIndex alpha) {
  if (alpha >= onto.size())
    throw Error(ErrorCode::UnknownAxiom, "axiom index " + std::to_string(alpha) + " not in ontology");
}

void require_listed(std::span<const Mcs> mcs_list, const Mcs& subset) {
  if (std::find(mcs_list.begin(), mcs_list.end(), subset) == mcs_list.end())
    throw Error(ErrorCode::UnknownSubset, "subset is not one of the given MCSs");
}

// Row of `sim` for each axiom of the ontology.
std::vector<std::size_t> sim_rows(const Ontology& onto, const SimilarityMatrix& sim) {
  std::vector<std::size_t> rows;
  rows.reserve(onto.size());
  for (const auto& a : onto.axioms()) rows.push_back(sim.index_of(a.id));
  return rows;
}

double agg_rows(const Mcs& subset, AxiomIndex alpha, const SimilarityMatrix& sim,
                const std::vector<std::size_t>& rows) {
  double sum = 0;
  for (AxiomIndex beta : subset.members) sum += sim(rows[alpha], rows[beta]);
  return sum / static_cast<double>(subset.size());
}

}  // namespace

std::size_t count_mc(const Ontology& onto, std::span<const Mcs> mcs_list, AxiomIndex alpha) {
  require_axiom(onto, alpha);
  return static_cast<std::size_t>(std::count_if(
      mcs_list.begin(), mcs_list.end(), [&](const Mcs& m) { return m.contains(alpha); }));
}

std::size_t score_sharp_mc_sum(const Ontology& onto, std::span<const Mcs> mcs_list,
                               const Mcs& subset) {
  require_listed(mcs_list, subset);
  std::size_t total = 0;
  for (AxiomIndex a : subset.members) total += count_mc(onto, mcs_list, a);
  return total;
}

double agg(const Ontology& onto, const Mcs& subset, AxiomIndex alpha, const SimilarityMatrix& sim) {
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "agg over an empty subset");
  require_axiom(onto, alpha);
  if (!subset.contains(alpha))
    throw Error(ErrorCode::NotMember, "axiom " + onto[alpha].id + " is not in the subset");
  return agg_rows(subset, alpha, sim, sim_rows(onto, sim));
}

double mc_score(const Ontology& onto, std::span<const Mcs> mcs_list, AxiomIndex alpha,
                const SimilarityMatrix& sim) {
  require_axiom(onto, alpha);
  auto rows = sim_rows(onto, sim);
  double total = 0;
  for (const Mcs& m : mcs_list)
    if (m.contains(alpha)) total += agg_rows(m, alpha, sim, rows);
  return total;
}

double mcs_score(const Ontology& onto, std::span<const Mcs> mcs_list, const Mcs& subset,
                 const SimilarityMatrix& sim) {
  require_listed(mcs_list, subset);
  return score_subset(onto, mcs_list, subset.members, sim);
}

AxiomScores sharp_mc_scores(const Ontology& onto, std::span<const Mcs> mcs_list) {
  AxiomScores out(onto.size(), 0.0);
  for (const Mcs& m : mcs_list)
    for (AxiomIndex a : m.members) out.at(a) += 1.0;
  return out;
}

AxiomScores mc_scores(const Ontology& onto, std::span<const Mcs> mcs_list,
                      const SimilarityMatrix& sim) {
  auto rows = sim_rows(onto, sim);
  AxiomScores out(onto.size(), 0.0);
  for (const Mcs& m : mcs_list)
    for (AxiomIndex a : m.members) out.at(a) += agg_rows(m, a, sim, rows);
  return out;
}

SubsetScorer::SubsetScorer(AxiomScores scores, Aggregation aggregation)
    : scores_(std::move(scores)), aggregation_(aggregation) {
  for (double s : scores_)
    if (!(s >= 0.0) || !std::isfinite(s))
      throw Error(ErrorCode::InvalidArgument, "axiom scores must be finite and non-negative");
}

double SubsetScorer::operator()(std::span<const AxiomIndex> subset) const {
  switch (aggregation_) {
    case Aggregation::Sum: {
      double total = 0;
      for (AxiomIndex i : subset) total += scores_.at(i);
      return total;
    }
  }
  return 0;
}

double score_subset(const Ontology& onto, std::span<const Mcs> mcs_list,
                    std::span<const AxiomIndex> subset, const SimilarityMatrix& sim) {
  double total = 0;
  for (AxiomIndex a : subset) total += mc_score(onto, mcs_list, a, sim);
  return total;
}

Comparison compare_scores(double first, double second) {
  if (std::abs(first - second) <= kTieTolerance) return Comparison::Tie;
  return first > second ? Comparison::FirstBetter : Comparison::SecondBetter;
}

Comparison compare(std::span<const AxiomIndex> first, std::span<const AxiomIndex> second,
                   const SubsetScorer& scorer) {
  return compare_scores(scorer(first), scorer(second));
}

std::vector<ScoredMcs> rank_mcs(const Ontology& onto, std::span<const Mcs> mcs_list,
                                const SubsetScorer& scorer) {
  std::vector<ScoredMcs> out;
  for (const Mcs& m : mcs_list) out.push_back({m.ids(onto), scorer(m.members)});
  std::stable_sort(out.begin(), out.end(), [](const ScoredMcs& a, const ScoredMcs& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.ids < b.ids;
  });
  return out;
}

}  // namespace mcsreason
