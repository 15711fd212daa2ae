// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mcsreason/cli.hpp"
#include "mcsreason/consistency.hpp"
#include "mcsreason/harness.hpp"
#include "mcsreason/inference.hpp"
#include "mcsreason/mcs.hpp"
#include "mcsreason/parser.hpp"
#include "mcsreason/scoring.hpp"
#include "support/equivalence.hpp"
#include "support/fixtures.hpp"
#include "support/toy_graph.hpp"

using namespace mcsreason;

namespace {

const std::vector<std::string> kFixtures = {"monument.ofn", "bioportal.ofn", "wine.ofn", "hashead.ofn",
                                            "icecream.ofn"};

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(const std::string& name, double limit_ms, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (limit_ms > 0 && ms >= limit_ms) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "took %.1f ms, limit %.0f ms", ms, limit_ms);
    o.require(false, buf);
  }
  if (!o.ok) ++failures;
  std::printf("%s  %-22s %9.1f ms%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), ms, o.detail.empty() ? "" : "  ",
              o.detail.c_str());
}

SimilarityMatrix ones(const Ontology& onto) {
  std::vector<std::string> ids;
  for (const auto& a : onto.axioms()) ids.push_back(a.id);
  return SimilarityMatrix::constant(ids, 1.0);
}

SimilarityMatrix hashed(const Ontology& onto, Metric metric) {
  return similarity_matrix(hash_embed(to_sentences(onto), 256, 0), metric);
}

std::string percent(double rate) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", rate * 100.0);
  return buf;
}

using IdSets = std::vector<std::vector<std::string>>;

IdSets ids(const Ontology& onto, const std::vector<Mcs>& mcs) {
  IdSets out;
  for (const auto& m : mcs) out.push_back(m.ids(onto));
  return out;
}

}  // namespace

int main() {
  criterion("monument-pipeline", 1000, [](Outcome& o) {
    auto onto = load_fixture("monument.ofn");
    o.require(onto.size() == 4, "expected 4 axioms");
    o.require(!check_consistency(onto).consistent, "expected inconsistent");
    auto mcs = enumerate_mcs(onto);
    o.require(ids(onto, mcs) == IdSets{{"a2", "a3", "a4"}, {"a1", "a3", "a4"}, {"a1", "a2", "a4"}, {"a1", "a2", "a3"}},
              "MCS list differs");
    for (AxiomIndex i = 0; i < onto.size(); ++i) o.require(count_mc(onto, mcs, i) == 3, "#mc != 3");
    for (const auto& m : mcs) o.require(score_sharp_mc_sum(onto, mcs, m) == 9, "#mc sum != 9");
  });

  criterion("bioportal", 1000, [](Outcome& o) {
    auto onto = load_fixture("bioportal.ofn");
    o.require(!check_consistency(onto).consistent, "expected inconsistent");
    auto mcs = enumerate_mcs(onto);
    o.require(mcs == brute_force_mcs(onto), "differs from brute force");
    o.require(mcs.size() == 4, "expected 4 MCSs");
    for (const auto& m : mcs) o.require(m.size() == 3, "expected 3-subsets");
  });

  criterion("oracle-equivalence", 60000, [](Outcome& o) {
    std::size_t mismatches = 0;
    std::string first;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      auto m = oracle::compare_seed(seed);
      if (!m.empty() && first.empty()) first = "seed " + std::to_string(seed) + ": " + m[0].what;
      mismatches += m.size();
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches, " + first);
  });

  criterion("similarity-properties", 0, [](Outcome& o) {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> gauss(0.0, 2.0);
    for (int k = 0; k < 10000; ++k) {
      std::size_t n = 1 + rng() % 32;
      std::vector<double> a(n), b(n);
      for (auto& x : a) x = gauss(rng);
      for (auto& x : b) x = gauss(rng);
      Vector va(a), vb(b);
      double c = sim_cos(va, vb), e = sim_euc(va, vb);
      o.require(c >= 0 && c <= 1, "cos out of range");
      o.require(e > 0 && e <= 1, "euc out of range");
      o.require(std::abs(1 - sim_cos(va, va)) <= 1e-9 && std::abs(1 - sim_euc(va, va)) <= 1e-9, "reflexivity");
      o.require(std::abs(c - sim_cos(vb, va)) <= 1e-12 && std::abs(e - sim_euc(vb, va)) <= 1e-12, "symmetry");
    }
  });

  criterion("reduction-identity", 0, [](Outcome& o) {
    for (const auto& name : kFixtures) {
      auto onto = load_fixture(name);
      auto mcs = enumerate_mcs(onto);
      auto sim = ones(onto);
      for (const auto& m : mcs)
        o.require(mcs_score(onto, mcs, m, sim) == static_cast<double>(score_sharp_mc_sum(onto, mcs, m)),
                  name + ": mcs_score != #mc sum");
    }
  });

  criterion("monotonic-selection", 0, [](Outcome& o) {
    std::size_t checked = 0;
    for (const auto& name : kFixtures) {
      auto onto = load_fixture(name);
      if (onto.size() > 6) continue;
      auto mcs = enumerate_mcs(onto);
      for (auto sim : {hashed(onto, Metric::Cos), hashed(onto, Metric::Euc), ones(onto)}) {
        std::size_t n = onto.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          std::vector<AxiomIndex> s;
          for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) s.push_back(i);
          if (!is_consistent(onto, s)) continue;
          double base = score_subset(onto, mcs, s, sim);
          for (AxiomIndex a = 0; a < n; ++a) {
            if ((mask >> a) & 1) continue;
            auto bigger = s;
            bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), a), a);
            ++checked;
            o.require(score_subset(onto, mcs, bigger, sim) > base, name + ": not strictly larger");
          }
        }
      }
    }
    o.detail = o.ok ? std::to_string(checked) + " extensions" : o.detail;
  });

  criterion("inference-ref", 0, [](Outcome& o) {
    for (const auto& name : kFixtures) {
      auto onto = load_fixture(name);
      std::vector<Method> methods = {Method::skeptical(), Method::cmcs(), Method::sharp_mc(),
                                     Method::embedding(hashed(onto, Metric::Cos))};
      for (const auto& m : methods) {
        Reasoner r(onto, m);
        for (const auto& a : onto.axioms())
          o.require(r.infers(a, a), name + ": " + to_string(m.kind) + " fails Ref on " + a.id);
      }
    }
  });

  criterion("monument-verdicts", 0, [](Outcome& o) {
    auto onto = load_fixture("monument.ofn");
    auto q = parse_axiom("ClassAssertion(ExistingObjectType Monument)");
    o.require(Reasoner(onto, Method::skeptical()).answer(q).verdict == Verdict::Undetermined,
              "skeptical not undetermined");
    double s12 = .41, s13 = .3, s14 = .62, s23 = .35, s24 = .5, s34 = .4;
    SimilarityMatrix sim({"a1", "a2", "a3", "a4"},
                         {1, s12, s13, s14, s12, 1, s23, s24, s13, s23, 1, s34, s14, s24, s34, 1});
    Reasoner emb(onto, Method::embedding(sim));
    o.require(ids(onto, emb.preferred()) == IdSets{{"a1", "a2", "a4"}}, "preferred is not {a1,a2,a4}");
    o.require(emb.answer(q).verdict == Verdict::Accepted, "embedding not accepted");
  });

  criterion("harness-arithmetic", 0, [](Outcome& o) {
    auto aut = EvalReport::from_counts(6, 118, 0, 0);
    o.require(aut.total == 124 && percent(aut.ia_rate) == "4.84" && percent(aut.icr_rate) == "100.00",
              "AUT row: " + percent(aut.ia_rate) + " / " + percent(aut.icr_rate));
    auto uobm = EvalReport::from_counts(71, 12, 5, 4);
    o.require(uobm.total == 92 && percent(uobm.ia_rate) == "77.17" && percent(uobm.icr_rate) == "95.65",
              "UOBM row: " + percent(uobm.ia_rate) + " / " + percent(uobm.icr_rate));
    std::vector<MethodAnswer> answers;
    std::vector<GoldRecord> gold;
    auto add = [&](int n, Verdict m, Verdict g) {
      for (int i = 0; i < n; ++i) {
        std::string id = "q" + std::to_string(gold.size());
        answers.push_back({id, m});
        gold.push_back({id, "ClassAssertion(A x)", g});
      }
    };
    add(71, Verdict::Accepted, Verdict::Accepted);
    add(12, Verdict::Undetermined, Verdict::Accepted);
    add(5, Verdict::Accepted, Verdict::Undetermined);
    add(4, Verdict::Rejected, Verdict::Accepted);
    auto r = evaluate(answers, gold);
    o.require(r.ia == 71 && r.ca == 12 && r.ra == 5 && r.cia == 4 && r.ia_rate == uobm.ia_rate,
              "evaluate disagrees with counts");
  });

  criterion("transe-sanity", 30000, [](Outcome& o) {
    auto triples = toy::graph();
    TransEConfig cfg;
    cfg.seed = 42;
    auto r = train_transe(triples, cfg);
    double rate = toy::ranking_rate(r.model, triples, 42);
    char buf[128];
    std::snprintf(buf, sizeof buf, "loss %.4f -> %.4f, ranking %.0f%%", r.epoch_losses.front(),
                  r.epoch_losses.back(), rate * 100);
    o.require(r.epoch_losses.back() <= r.epoch_losses.front(), std::string("loss rose: ") + buf);
    o.require(rate >= 0.8, std::string("ranking too low: ") + buf);
    if (o.ok) o.detail = buf;
  });

  criterion("score-determinism", 0, [](Outcome& o) {
    for (const auto& backend : {"hash", "transe"}) {
      std::vector<std::string> args = {"score", fixture_path("monument.ofn"), "--backend", backend,
                                       "--metric", "cos", "--seed", "7"};
      std::ostringstream a, b, err;
      int ra = cli::run_subcommand(args, a, err);
      int rb = cli::run_subcommand(args, b, err);
      o.require(ra == 0 && rb == 0, std::string(backend) + ": non-zero exit");
      o.require(!a.str().empty() && a.str() == b.str(), std::string(backend) + ": outputs differ");
    }
  });

  std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
