#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mcsreason/ontology.hpp"

namespace mcsreason {

// One maximal consistent sub-ontology: sorted indices into its Ontology.
struct Mcs {
  std::vector<AxiomIndex> members;

  bool contains(AxiomIndex i) const;
  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  std::vector<std::string> ids(const Ontology& onto) const;

  friend bool operator==(const Mcs&, const Mcs&) = default;
};

// Orders subsets by their characteristic vector over the ontology's axiom
// order, absent before present. For the four 3-subsets of {1,2,3,4} this
// yields {2,3,4}, {1,3,4}, {1,2,4}, {1,2,3}.
bool characteristic_less(const std::vector<AxiomIndex>& a, const std::vector<AxiomIndex>& b);

struct McsBudget {
  std::size_t max_mcs = 10'000;
  std::size_t max_oracle_calls = 1'000'000;
};

struct McsStats {
  std::size_t oracle_calls = 0;
  std::size_t mcs_found = 0;
  std::size_t mus_found = 0;
};

// All maximal consistent subsets, sorted by characteristic_less. Throws
// BudgetExceeded when a budget is hit.
std::vector<Mcs> enumerate_mcs(const Ontology& onto, const McsBudget& budget = {},
                               McsStats* stats = nullptr);

// {S ⊆ Σ | S ∪ {alpha} ∈ mcs(Σ ∪ {alpha})}. When alpha is structurally present
// in Σ it is excluded from the returned member sets as well.
std::vector<Mcs> enumerate_mcs_with(const Ontology& onto, const Axiom& alpha,
                                    const McsBudget& budget = {}, McsStats* stats = nullptr);

// Reference semantics by exhaustive subset testing; |Σ| <= 16 else TooLarge.
std::vector<Mcs> brute_force_mcs(const Ontology& onto);

inline constexpr std::size_t kBruteForceLimit = 16;

}  // namespace mcsreason
