#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mcsreason/embed.hpp"
#include "mcsreason/mcs.hpp"
#include "mcsreason/ontology.hpp"

namespace mcsreason {

// Scores within this distance compare as equal.
inline constexpr double kTieTolerance = 1e-12;

// Number of MCSs containing axiom `alpha`. Throws UnknownAxiom.
std::size_t count_mc(const Ontology& onto, std::span<const Mcs> mcs_list, AxiomIndex alpha);

// Sum of count_mc over the members of `subset`, which must be in mcs_list
// (UnknownSubset otherwise).
std::size_t score_sharp_mc_sum(const Ontology& onto, std::span<const Mcs> mcs_list,
                               const Mcs& subset);

// Mean similarity of `alpha` to every member of `subset`, itself included.
double agg(const Ontology& onto, const Mcs& subset, AxiomIndex alpha, const SimilarityMatrix& sim);

// Sum of agg over the MCSs that contain `alpha`.
double mc_score(const Ontology& onto, std::span<const Mcs> mcs_list, AxiomIndex alpha,
                const SimilarityMatrix& sim);

// Sum of mc_score over the members of `subset` (which must be in mcs_list).
double mcs_score(const Ontology& onto, std::span<const Mcs> mcs_list, const Mcs& subset,
                 const SimilarityMatrix& sim);

// Per-axiom score s(Σ, α) for every axiom of Σ.
using AxiomScores = std::vector<double>;

AxiomScores sharp_mc_scores(const Ontology& onto, std::span<const Mcs> mcs_list);
AxiomScores mc_scores(const Ontology& onto, std::span<const Mcs> mcs_list,
                      const SimilarityMatrix& sim);

// Aggregation of axiom scores into a subset score. Sum is the only one
// shipped.
enum class Aggregation { Sum };

// score^s_{Σ,⊕}(S) for an arbitrary S ⊆ Σ.
class SubsetScorer {
 public:
  SubsetScorer(AxiomScores scores, Aggregation aggregation = Aggregation::Sum);

  double operator()(std::span<const AxiomIndex> subset) const;
  double axiom_score(AxiomIndex i) const { return scores_.at(i); }
  const AxiomScores& axiom_scores() const { return scores_; }

 private:
  AxiomScores scores_;
  Aggregation aggregation_;
};

// Σ_{α∈S} mc_score(α); 0 for the empty set.
double score_subset(const Ontology& onto, std::span<const Mcs> mcs_list,
                    std::span<const AxiomIndex> subset, const SimilarityMatrix& sim);

enum class Comparison { FirstBetter, SecondBetter, Tie };

Comparison compare(std::span<const AxiomIndex> first, std::span<const AxiomIndex> second,
                   const SubsetScorer& scorer);
Comparison compare_scores(double first, double second);

struct ScoredMcs {
  std::vector<std::string> ids;
  double score = 0;
};

// Every MCS with its score, sorted by descending score, then by id list.
std::vector<ScoredMcs> rank_mcs(const Ontology& onto, std::span<const Mcs> mcs_list,
                                const SubsetScorer& scorer);

}  // namespace mcsreason
