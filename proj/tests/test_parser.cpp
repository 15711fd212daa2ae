#include <doctest.h>

#include "mcsreason/error.hpp"
#include "mcsreason/parser.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace mcsreason;

namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_ontology(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("class assertion parses to a named concept") {
  auto onto = parse_ontology("ClassAssertion(ArtifactualFeatureType Monument)");
  REQUIRE(onto.size() == 1);
  const Axiom& a = onto[0];
  CHECK(a.id == "a1");
  CHECK(a.kind == AxiomKind::ClassAssertion);
  CHECK(a.concepts.at(0) == ConceptExpr::named("ArtifactualFeatureType"));
  CHECK(a.subject == "Monument");
}

TEST_CASE("empty and comment-only documents") {
  CHECK(parse_ontology("").empty());
  CHECK(parse_ontology("# nothing here\n\n").empty());
}

TEST_CASE("trivial axioms are rejected") {
  CHECK(code_of("SubClassOf(A A)") == ErrorCode::TrivialAxiom);
  CHECK(code_of("SubClassOf(A owl:Thing)") == ErrorCode::TrivialAxiom);
  CHECK(code_of("ClassAssertion(owl:Nothing x)") == ErrorCode::TrivialAxiom);
  ParseOptions lax;
  lax.reject_trivial = false;
  CHECK(parse_ontology("SubClassOf(A A)", lax).size() == 1);
}

TEST_CASE("is_trivial") {
  CHECK(is_trivial(Axiom::sub_class_of(ConceptExpr::named("A"), ConceptExpr::named("A"))));
  CHECK_FALSE(is_trivial(Axiom::class_assertion(ConceptExpr::named("ExistingStuffType"), "Monument")));
  // A ⊓ (r value b) ⊓ (≤0 r) asserted of a: needs the r-edge to b and forbids it.
  auto self_clash = parse_axiom(
      "ClassAssertion(ObjectIntersectionOf(A ObjectHasValue(r b) ObjectMaxCardinality(0 r)) a)");
  CHECK(is_trivial(self_clash));
  // Only says A is empty: satisfiable and not valid.
  CHECK_FALSE(is_trivial(parse_axiom("DisjointClasses(A A)")));
  CHECK(is_trivial(parse_axiom("SubClassOf(ObjectIntersectionOf(A B) A)")));
  CHECK_FALSE(is_trivial(parse_axiom("SubClassOf(A ObjectIntersectionOf(A B))")));
}

TEST_CASE("rendering") {
  CHECK(render_axiom(Axiom::class_assertion(ConceptExpr::named("ExistingStuffType"), "Monument")) ==
        "ClassAssertion(ExistingStuffType Monument)");
  CHECK(render_axiom(Axiom::sub_class_of(ConceptExpr::named("ArtifactualFeatureType"),
                                         ConceptExpr::named("ExistingObjectType"))) ==
        "SubClassOf(ArtifactualFeatureType ExistingObjectType)");
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_ontology("ClassAssertion(A a)\nSubClassOf(A\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(e.line() >= 2);
  }
  CHECK(code_of("ClassAssertion(A a") == ErrorCode::SyntaxError);
  CHECK(code_of("Foo") == ErrorCode::SyntaxError);
}

TEST_CASE("constructs outside the grammar") {
  CHECK(code_of("SubObjectPropertyOf(r s)") == ErrorCode::UnsupportedConstruct);
  CHECK(code_of("ClassAssertion(ObjectComplementOf(A) a)") == ErrorCode::UnsupportedConstruct);
  CHECK(code_of("DisjointClasses(A B C)") == ErrorCode::UnsupportedConstruct);
}

TEST_CASE("prefixes expand and render back") {
  auto doc = parse_document(
      "Prefix(ex:=<http://example.org/onto#>)\n"
      "SubClassOf(ex:Dog ex:Animal)\n"
      "ClassAssertion(<http://example.org/onto#Dog> ex:rex)\n");
  const auto& onto = doc.ontology;
  REQUIRE(onto.size() == 2);
  CHECK(onto[0].concepts[0].name == "http://example.org/onto#Dog");
  CHECK(onto[1].concepts[0].name == "http://example.org/onto#Dog");
  CHECK(doc.prefixes.at("ex") == "http://example.org/onto#");
  auto again = parse_ontology(onto.render());
  REQUIRE(again.size() == 2);
  CHECK(structurally_equal(again[0], onto[0]));
}

TEST_CASE("Ontology wrapper") {
  auto doc = parse_document(
      "Prefix(:=<http://x.org/o#>)\n"
      "Ontology(<http://x.org/o> <http://x.org/o/1>\n"
      "Import(<http://x.org/other>)\n"
      "Declaration(Class(:A))\n"
      "SubClassOf(:A :B)\n"
      "ClassAssertion(:A :a)\n"
      ")\n");
  REQUIRE(doc.ontology.size() == 2);
  CHECK(doc.ontology[1].subject == "http://x.org/o#a");
  CHECK(parse_ontology("Ontology(ClassAssertion(A x))").size() == 1);
  CHECK(parse_ontology("Ontology()").empty());
  CHECK(code_of("Ontology(<http://x.org/o>\nClassAssertion(A x)\n") == ErrorCode::SyntaxError);
  CHECK(code_of("Ontology(Ontology(ClassAssertion(A x)))") == ErrorCode::UnsupportedConstruct);
  CHECK(code_of("ClassAssertion(A x))") == ErrorCode::SyntaxError);
}

TEST_CASE("duplicates are dropped, ids follow kept statements") {
  auto onto = parse_ontology("ClassAssertion(A a)\nClassAssertion(A a)\nClassAssertion(B a)\n");
  REQUIRE(onto.size() == 2);
  CHECK(onto[1].id == "a2");
  CHECK(onto.concept_names() == std::vector<std::string>{"A", "B"});
}

TEST_CASE("injected marker survives a render round trip") {
  auto onto = parse_ontology("ClassAssertion(A a)\nClassAssertion(B a) # injected\n");
  CHECK_FALSE(onto[0].injected);
  CHECK(onto[1].injected);
  auto again = parse_ontology(onto.render());
  CHECK(again[1].injected);
}

TEST_CASE("every axiom kind and constructor round-trips") {
  const char* text = R"(
SubClassOf(A ObjectSomeValuesFrom(r B))
EquivalentClasses(C ObjectIntersectionOf(A B))
DisjointClasses(A ObjectUnionOf(B C))
ClassAssertion(ObjectAllValuesFrom(r B) x)
ClassAssertion(ObjectHasValue(r y) x)
ClassAssertion(ObjectExactCardinality(2 r B) x)
ClassAssertion(ObjectMinCardinality(1 r) x)
ClassAssertion(ObjectMaxCardinality(1 madeFrom Grape) product145)
ObjectPropertyAssertion(r x y)
DataPropertyAssertion(label x "hello \"world\""@en)
DataPropertyAssertion(age x "42"^^xsd:integer)
ObjectPropertyDomain(r A)
ObjectPropertyRange(r B)
DataPropertyDomain(label A)
FunctionalObjectProperty(r)
SubClassOf(K DataMaxCardinality(1 documentation rdfs:Literal))
SubClassOf(K DataSomeValuesFrom(documentation xsd:string))
)";
  auto onto = parse_ontology(text);
  CHECK(onto.size() == 17);
  auto again = parse_ontology(onto.render());
  REQUIRE(again.size() == onto.size());
  for (std::size_t i = 0; i < onto.size(); ++i) {
    CAPTURE(render_axiom(onto[i]));
    CHECK(structurally_equal(onto[i], again[i]));
    CHECK(again[i].id == onto[i].id);
    CHECK_FALSE(is_trivial(onto[i]));
  }
}

TEST_CASE("fixtures parse") {
  auto monument = load_fixture("monument.ofn");
  CHECK(monument.size() == 4);
  auto bio = load_fixture("bioportal.ofn");
  CHECK(bio.size() == 4);
  CHECK(bio[2].value.lexical == "http://jena.sourceforge.net/ARQ/");
}

TEST_CASE("random fragment ontologies round-trip through text") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto onto = oracle::FragmentGenerator(seed).next();
    auto again = parse_ontology(onto.render());
    REQUIRE(again.size() == onto.size());
    for (std::size_t i = 0; i < onto.size(); ++i) CHECK(structurally_equal(onto[i], again[i]));
  }
}

TEST_CASE("Ontology rejects duplicate ids and structural duplicates") {
  auto a = Axiom::class_assertion(ConceptExpr::named("A"), "x");
  a.id = "a1";
  auto b = Axiom::class_assertion(ConceptExpr::named("B"), "x");
  b.id = "a1";
  CHECK_THROWS_AS(Ontology({a, b}), Error);
  auto c = a;
  c.id = "a2";
  CHECK_THROWS_AS(Ontology({a, c}), Error);
  CHECK_THROWS_AS(Ontology({a}).index_of("zz"), Error);
}
