#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcsreason/mcs.hpp"
#include "mcsreason/scoring.hpp"
#include "support/oracle.hpp"

namespace oracle {

struct Mismatch {
  std::uint64_t seed;
  std::string what;
  std::string ontology;
};

inline std::vector<std::uint64_t> as_masks(const std::vector<mcsreason::Mcs>& mcs) {
  std::vector<std::uint64_t> out;
  for (const auto& m : mcs) {
    std::uint64_t b = 0;
    for (auto i : m.members) b |= std::uint64_t{1} << i;
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// enumerate_mcs vs brute_force_mcs vs model search, and count_mc vs counting
// over the model-search MCSs, on one generated ontology.
inline std::vector<Mismatch> compare_seed(std::uint64_t seed, GeneratorConfig cfg = {}) {
  std::vector<Mismatch> out;
  auto onto = FragmentGenerator(seed, cfg).next();
  auto fast = mcsreason::enumerate_mcs(onto);
  auto brute = mcsreason::brute_force_mcs(onto);
  auto truth = model_mcs(onto);
  if (fast != brute) out.push_back({seed, "enumerate_mcs != brute_force_mcs", onto.render()});
  if (as_masks(brute) != truth) out.push_back({seed, "brute_force_mcs != model search", onto.render()});
  for (mcsreason::AxiomIndex i = 0; i < onto.size(); ++i) {
    std::size_t expected = 0;
    for (auto m : truth) expected += (m >> i) & 1;
    if (mcsreason::count_mc(onto, fast, i) != expected)
      out.push_back({seed, "count_mc(" + onto[i].id + ")", onto.render()});
  }
  return out;
}

}  // namespace oracle
