#include <doctest.h>

#include <algorithm>

#include "mcsreason/consistency.hpp"
#include "mcsreason/error.hpp"
#include "mcsreason/parser.hpp"
#include "mcsreason/scoring.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace mcsreason;

namespace {

SimilarityMatrix ones(const Ontology& onto) {
  std::vector<std::string> ids;
  for (const auto& a : onto.axioms()) ids.push_back(a.id);
  return SimilarityMatrix::constant(ids, 1.0);
}

SimilarityMatrix hashed(const Ontology& onto, std::uint64_t seed = 0) {
  return similarity_matrix(hash_embed(to_sentences(onto), 64, seed), Metric::Cos);
}

// Monument similarities chosen so that {φ1,φ2,φ4} wins.
SimilarityMatrix monument_matrix() {
  double s12 = .41, s13 = .3, s14 = .62, s23 = .35, s24 = .5, s34 = .4;
  return SimilarityMatrix({"a1", "a2", "a3", "a4"}, {1, s12, s13, s14,  //
                                                     s12, 1, s23, s24,  //
                                                     s13, s23, 1, s34,  //
                                                     s14, s24, s34, 1});
}

std::vector<AxiomIndex> members(std::uint64_t mask, std::size_t n) {
  std::vector<AxiomIndex> out;
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1) out.push_back(i);
  return out;
}

const std::vector<std::string> kFixtures = {"monument.ofn", "bioportal.ofn", "wine.ofn", "hashead.ofn",
                                            "icecream.ofn"};

}  // namespace

TEST_CASE("Monument counts") {
  auto onto = load_fixture("monument.ofn");
  auto mcs = enumerate_mcs(onto);
  for (AxiomIndex i = 0; i < 4; ++i) CHECK(count_mc(onto, mcs, i) == 3);
  for (const auto& m : mcs) CHECK(score_sharp_mc_sum(onto, mcs, m) == 9);
  CHECK(compare(mcs[0].members, mcs[1].members, SubsetScorer(sharp_mc_scores(onto, mcs))) == Comparison::Tie);
  CHECK_THROWS_AS(count_mc(onto, mcs, 4), Error);
  try {
    score_sharp_mc_sum(onto, mcs, Mcs{{0, 1}});
    FAIL("expected UnknownSubset");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSubset);
  }
}

TEST_CASE("consistent ontologies") {
  auto onto = load_fixture("icecream.ofn");
  auto mcs = enumerate_mcs(onto);
  for (AxiomIndex i = 0; i < onto.size(); ++i) CHECK(count_mc(onto, mcs, i) == 1);
  CHECK(score_sharp_mc_sum(onto, mcs, mcs[0]) == onto.size());

  auto single = parse_ontology("ClassAssertion(A x)");
  auto one = enumerate_mcs(single);
  CHECK(mc_score(single, one, 0, hashed(single)) == 1.0);

  Ontology empty;
  auto none = enumerate_mcs(empty);
  CHECK(score_sharp_mc_sum(empty, none, none[0]) == 0);
}

TEST_CASE("agg") {
  auto onto = parse_ontology("ClassAssertion(A x)\nClassAssertion(B x)\nClassAssertion(C x)\n");
  auto half = SimilarityMatrix::constant({"a1", "a2", "a3"}, 0.5);
  CHECK(agg(onto, Mcs{{0}}, 0, half) == 1.0);
  CHECK(agg(onto, Mcs{{0, 1}}, 0, half) == 0.75);
  CHECK(agg(onto, Mcs{{0, 1, 2}}, 2, ones(onto)) == 1.0);
  auto code = [&](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code([&] { agg(onto, Mcs{{0, 1}}, 2, half); }) == ErrorCode::NotMember);
  CHECK(code([&] { agg(onto, Mcs{}, 0, half); }) == ErrorCode::EmptySubset);
}

TEST_CASE("Monument with a hand-set matrix") {
  auto onto = load_fixture("monument.ofn");
  auto mcs = enumerate_mcs(onto);
  auto sim = monument_matrix();
  // φ1 is in {1,3,4}, {1,2,4}, {1,2,3}
  double agg134 = (1 + .3 + .62) / 3, agg124 = (1 + .41 + .62) / 3, agg123 = (1 + .41 + .3) / 3;
  CHECK(mc_score(onto, mcs, 0, sim) == doctest::Approx(agg134 + agg124 + agg123).epsilon(1e-12));
  auto scorer = SubsetScorer(mc_scores(onto, mcs, sim));
  auto ranked = rank_mcs(onto, mcs, scorer);
  REQUIRE(ranked.size() == 4);
  CHECK(ranked[0].ids == std::vector<std::string>{"a1", "a2", "a4"});
  for (std::size_t i = 0; i + 1 < ranked.size(); ++i) CHECK(ranked[i].score >= ranked[i + 1].score);
  for (const auto& m : mcs)
    CHECK(mcs_score(onto, mcs, m, sim) == doctest::Approx(score_subset(onto, mcs, m.members, sim)));
}

TEST_CASE("all-ones similarity reduces to counting") {
  for (const auto& name : kFixtures) {
    auto onto = load_fixture(name);
    auto mcs = enumerate_mcs(onto);
    auto sim = ones(onto);
    for (AxiomIndex i = 0; i < onto.size(); ++i)
      CHECK(mc_score(onto, mcs, i, sim) == static_cast<double>(count_mc(onto, mcs, i)));
    for (const auto& m : mcs)
      CHECK(mcs_score(onto, mcs, m, sim) == static_cast<double>(score_sharp_mc_sum(onto, mcs, m)));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto onto = oracle::FragmentGenerator(seed + 9000).next();
    auto mcs = enumerate_mcs(onto);
    auto sim = ones(onto);
    for (const auto& m : mcs)
      CHECK(mcs_score(onto, mcs, m, sim) == static_cast<double>(score_sharp_mc_sum(onto, mcs, m)));
  }
}

TEST_CASE("positivity and strict monotonicity on fixtures and random fragments") {
  std::vector<Ontology> suite;
  for (const auto& name : kFixtures) suite.push_back(load_fixture(name));
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    oracle::GeneratorConfig cfg;
    cfg.max_axioms = 6;
    suite.push_back(oracle::FragmentGenerator(seed + 400, cfg).next());
  }
  for (const auto& onto : suite) {
    REQUIRE(onto.size() <= 6);
    auto mcs = enumerate_mcs(onto);
    for (auto sim : {ones(onto), hashed(onto, 1), similarity_matrix(hash_embed(to_sentences(onto), 64, 2), Metric::Euc)}) {
      for (AxiomIndex i = 0; i < onto.size(); ++i)
        CHECK(mc_score(onto, mcs, i, sim) >= 1.0 / static_cast<double>(onto.size()));
      SubsetScorer scorer(mc_scores(onto, mcs, sim));
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << onto.size()); ++mask) {
        auto s = members(mask, onto.size());
        if (!is_consistent(onto, s)) continue;
        for (AxiomIndex a = 0; a < onto.size(); ++a) {
          if ((mask >> a) & 1) continue;
          auto bigger = members(mask | (std::uint64_t{1} << a), onto.size());
          CHECK(score_subset(onto, mcs, bigger, sim) > score_subset(onto, mcs, s, sim));
          CHECK(compare(bigger, s, scorer) == Comparison::FirstBetter);
        }
      }
    }
  }
}

TEST_CASE("compare is reflexive, total and transitive") {
  auto onto = load_fixture("wine.ofn");
  auto mcs = enumerate_mcs(onto);
  SubsetScorer scorer(mc_scores(onto, mcs, hashed(onto)));
  std::vector<std::vector<AxiomIndex>> family;
  for (std::uint64_t mask = 0; mask < 32; ++mask) family.push_back(members(mask, 5));
  auto geq = [&](const auto& x, const auto& y) { return compare(x, y, scorer) != Comparison::SecondBetter; };
  for (const auto& x : family) {
    CHECK(compare(x, x, scorer) == Comparison::Tie);
    for (const auto& y : family) {
      CHECK((geq(x, y) || geq(y, x)));
      for (const auto& z : family)
        if (geq(x, y) && geq(y, z)) CHECK(geq(x, z));
    }
  }
  CHECK(compare_scores(1.0, 1.0 + 1e-13) == Comparison::Tie);
  CHECK(compare_scores(1.0, 1.0 + 1e-9) == Comparison::SecondBetter);
  CHECK(scorer(std::vector<AxiomIndex>{}) == 0.0);
}
