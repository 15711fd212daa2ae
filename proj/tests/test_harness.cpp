#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "mcsreason/consistency.hpp"
#include "mcsreason/error.hpp"
#include "mcsreason/harness.hpp"
#include "mcsreason/parser.hpp"
#include "support/fixtures.hpp"

using namespace mcsreason;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::string percent(double rate) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", rate * 100.0);
  return buf;
}

// Counts spelled out as per-query answers, then evaluated.
EvalReport replay(std::size_t ia, std::size_t ca, std::size_t ra, std::size_t cia) {
  std::vector<MethodAnswer> answers;
  std::vector<GoldRecord> gold;
  auto add = [&](std::size_t n, Verdict method, Verdict truth) {
    for (std::size_t i = 0; i < n; ++i) {
      std::string id = "q" + std::to_string(gold.size() + 1);
      answers.push_back({id, method});
      gold.push_back({id, "ClassAssertion(A x)", truth});
    }
  };
  add(ia, Verdict::Accepted, Verdict::Accepted);
  add(ca, Verdict::Undetermined, Verdict::Rejected);
  add(ra, Verdict::Rejected, Verdict::Undetermined);
  add(cia, Verdict::Rejected, Verdict::Accepted);
  return evaluate(answers, gold);
}

std::vector<AxiomIndex> indices(const Ontology& onto) {
  std::vector<AxiomIndex> out(onto.size());
  for (std::size_t i = 0; i < onto.size(); ++i) out[i] = i;
  return out;
}

}  // namespace

TEST_CASE("classification grid") {
  using V = Verdict;
  const V all[] = {V::Accepted, V::Rejected, V::Undetermined};
  for (V m : all)
    for (V g : all) {
      AnswerClass expected;
      if (m == g) expected = AnswerClass::IA;
      else if (m == V::Undetermined) expected = AnswerClass::CA;
      else if (g == V::Undetermined) expected = AnswerClass::RA;
      else expected = AnswerClass::CIA;
      CHECK(classify_answer(m, g) == expected);
    }
  CHECK(classify_answer(V::Rejected, V::Accepted) == AnswerClass::CIA);
  CHECK(classify_answer(V::Undetermined, V::Accepted) == AnswerClass::CA);
  CHECK(std::string(to_string(AnswerClass::RA)) == "RA");
}

TEST_CASE("published rows") {
  auto aut = replay(6, 118, 0, 0);
  CHECK(aut.total == 124);
  CHECK(percent(aut.ia_rate) == "4.84");
  CHECK(percent(aut.icr_rate) == "100.00");
  auto uobm = replay(71, 12, 5, 4);
  CHECK(uobm.total == 92);
  CHECK(percent(uobm.ia_rate) == "77.17");
  CHECK(percent(uobm.icr_rate) == "95.65");
  auto perfect = replay(10, 0, 0, 0);
  CHECK(perfect.ia_rate == 1.0);
  CHECK(perfect.icr_rate == 1.0);
  auto direct = EvalReport::from_counts(71, 12, 5, 4);
  CHECK(direct.ia_rate == uobm.ia_rate);
  CHECK(EvalReport::from_counts(0, 0, 0, 0).total == 0);
}

TEST_CASE("evaluate needs matching ids") {
  std::vector<GoldRecord> gold = {{"q1", "ClassAssertion(A x)", Verdict::Accepted},
                                  {"q2", "ClassAssertion(B x)", Verdict::Rejected}};
  std::vector<MethodAnswer> ok = {{"q2", Verdict::Rejected}, {"q1", Verdict::Undetermined}};
  auto r = evaluate(ok, gold);
  CHECK(r.ia == 1);
  CHECK(r.ca == 1);
  std::vector<MethodAnswer> missing = {{"q1", Verdict::Accepted}};
  std::vector<MethodAnswer> extra = {{"q1", Verdict::Accepted}, {"q2", Verdict::Accepted}, {"q3", Verdict::Accepted}};
  std::vector<MethodAnswer> dup = {{"q1", Verdict::Accepted}, {"q1", Verdict::Accepted}};
  CHECK(code_of([&] { evaluate(missing, gold); }) == ErrorCode::GoldMismatch);
  CHECK(code_of([&] { evaluate(extra, gold); }) == ErrorCode::GoldMismatch);
  CHECK(code_of([&] { evaluate(dup, gold); }) == ErrorCode::GoldMismatch);
}

TEST_CASE("gold CSV") {
  std::vector<GoldRecord> gold = {{"q1", "ClassAssertion(A x)", Verdict::Accepted},
                                  {"q,2", "DataPropertyAssertion(p x \"say \"\"hi\"\", ok\")", Verdict::Undetermined}};
  std::ostringstream out;
  write_gold_csv(out, gold);
  std::istringstream in(out.str());
  auto back = read_gold_csv(in);
  REQUIRE(back.size() == 2);
  CHECK(back[1].id == "q,2");
  CHECK(back[1].query == gold[1].query);
  CHECK(back[1].gold == Verdict::Undetermined);

  std::istringstream quoted("id,query,gold\nq1,\"ClassAssertion(A x)\",rejected\n\nq2,SubClassOf(A B),accepted\n");
  auto recs = read_gold_csv(quoted);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].gold == Verdict::Rejected);

  auto bad = [](const std::string& text) {
    std::istringstream s(text);
    return code_of([&] { read_gold_csv(s); });
  };
  CHECK(bad("query,id,gold\n") == ErrorCode::MalformedRecord);
  CHECK(bad("id,query,gold\nq1,ClassAssertion(A x),maybe\n") == ErrorCode::MalformedRecord);
  CHECK(bad("id,query,gold\nq1,ClassAssertion(A x)\n") == ErrorCode::MalformedRecord);
  CHECK(bad("id,query,gold\nq1,\"ClassAssertion(A x),accepted\n") == ErrorCode::MalformedRecord);
  CHECK(bad("") == ErrorCode::MalformedRecord);
}

TEST_CASE("functional conflict on the hasHead toy") {
  auto onto = parse_ontology("FunctionalObjectProperty(hasHead)\nObjectPropertyAssertion(hasHead d1 p1)\n");
  CHECK(inject_conflicts(onto, 0, 1).render() == onto.render());
  auto injected = inject_conflicts(onto, 1, 1);
  REQUIRE(injected.size() == 3);
  const Axiom& added = injected[2];
  CHECK(added.injected);
  CHECK(added.id == "a3");
  CHECK(added.kind == AxiomKind::ObjectPropertyAssertion);
  CHECK(added.property == "hasHead");
  CHECK(added.subject == "d1");
  CHECK(added.object != "p1");
  auto r = check_consistency(injected);
  CHECK_FALSE(r.consistent);
  REQUIRE(r.clash);
  CHECK(r.clash->kind == ClashKind::FunctionalClash);
  CHECK(check_consistency(strip_injected(injected)).consistent);
  CHECK(code_of([&] { inject_conflicts(onto, 2, 1); }) == ErrorCode::NoConflictTargets);
}

TEST_CASE("injector errors") {
  CHECK(code_of([] { inject_conflicts(parse_ontology("ClassAssertion(A x)\n"), 1, 0); }) ==
        ErrorCode::NoConflictTargets);
  CHECK(code_of([] { inject_conflicts(load_fixture("monument.ofn"), 1, 0); }) ==
        ErrorCode::InconsistentPremises);
}

TEST_CASE("every injected assertion lands in a minimal conflict") {
  for (const auto& name : {"hashead.ofn", "icecream.ofn"}) {
    auto onto = load_fixture(name);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      for (std::size_t n = 1; n <= 2; ++n) {
        auto injected = inject_conflicts(onto, n, seed);
        CAPTURE(injected.render());
        CHECK(injected.size() >= onto.size() + n);
        CHECK_FALSE(check_consistency(injected).consistent);
        auto stripped = strip_injected(injected);
        CHECK(stripped.render() == onto.render());
        CHECK(check_consistency(stripped).consistent);
        CHECK(inject_conflicts(onto, n, seed).render() == injected.render());

        auto mcs = brute_force_mcs(injected);
        for (AxiomIndex i = onto.size(); i < injected.size(); ++i) {
          CHECK(injected[i].injected);
          bool in_conflict =
              std::any_of(mcs.begin(), mcs.end(), [&](const Mcs& m) { return !m.contains(i); });
          CHECK(in_conflict);
        }
      }
    }
  }
}

TEST_CASE("disjointness conflicts add one assertion when one side is derivable") {
  auto onto = load_fixture("icecream.ofn");
  auto injected = inject_conflicts(onto, 2, 3);
  CHECK(injected.size() == onto.size() + 2);
  for (AxiomIndex i = onto.size(); i < injected.size(); ++i) {
    CHECK(injected[i].kind == AxiomKind::ClassAssertion);
    CHECK(entails(onto, indices(onto),
                  Axiom::class_assertion(ConceptExpr::named(injected[i].concepts[0].name == "Food" ? "Person" : "Food"),
                                         injected[i].subject)));
  }
}

TEST_CASE("query generation") {
  auto onto = parse_ontology(R"(
DisjointClasses(A B)
ClassAssertion(A x)
ClassAssertion(B x)
ClassAssertion(C y)
ClassAssertion(D z)
)");
  auto mcs = enumerate_mcs(onto);
  QueryGenConfig cfg;
  cfg.count = 100;
  auto all = generate_queries(onto, mcs, cfg);
  CHECK(all.size() == 12);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].id == "q" + std::to_string(i + 1));
    CHECK(all[i].kind == AxiomKind::ClassAssertion);
    seen.insert(render_axiom(all[i]));
  }
  CHECK(seen.size() == 12);
  CHECK(render_axiom(generate_queries(onto, mcs, cfg)[0]) == render_axiom(all[0]));

  // A and B and x are in the conflict: A(x) weighs 9 of a total of 40.
  cfg.count = 1;
  int hits = 0;
  const int runs = 4000;
  for (int s = 0; s < runs; ++s) {
    cfg.seed = static_cast<std::uint64_t>(s);
    auto q = generate_queries(onto, mcs, cfg);
    REQUIRE(q.size() == 1);
    if (render_axiom(q[0]) == "ClassAssertion(A x)") ++hits;
  }
  CHECK(std::abs(static_cast<double>(hits) / runs - 9.0 / 40.0) < 0.03);
}
