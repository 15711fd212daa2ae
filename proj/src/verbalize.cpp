#include "mcsreason/verbalize.hpp"

#include <cctype>

#include "mcsreason/error.hpp"

namespace mcsreason {

namespace {

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string_view local_part(std::string_view name) {
  auto hash = name.rfind('#');
  if (hash != std::string_view::npos && hash + 1 < name.size()) return name.substr(hash + 1);
  auto slash = name.rfind('/');
  if (slash != std::string_view::npos && slash + 1 < name.size()) return name.substr(slash + 1);
  return name;
}

std::string number_word(std::uint32_t n) {
  static const char* const kWords[] = {
      "zero",    "one",     "two",       "three",    "four",     "five",    "six",
      "seven",   "eight",   "nine",      "ten",      "eleven",   "twelve",  "thirteen",
      "fourteen", "fifteen", "sixteen",  "seventeen", "eighteen", "nineteen", "twenty"};
  if (n <= 20) return kWords[n];
  return std::to_string(n);
}

}  // namespace

std::string name_to_words(std::string_view name) {
  std::string_view local = local_part(name);
  std::vector<std::string> words;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < local.size(); ++i) {
    char c = local[i];
    if (c == '_' || c == ' ') {
      flush();
      continue;
    }
    if (is_upper(c) && !current.empty()) {
      char prev = current.back();
      bool next_lower = i + 1 < local.size() && is_lower(local[i + 1]);
      if (is_lower(prev) || is_digit(prev) || (is_upper(prev) && next_lower)) flush();
    }
    current += c;
  }
  flush();
  if (words.empty()) return std::string(local);
  if (words.size() == 1) return words.front();
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ' ';
    for (char c : words[i]) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string concept_phrase(const ConceptExpr& c) {
  switch (c.kind) {
    case ConceptKind::Named:
      return name_to_words(c.name);
    case ConceptKind::IntersectionOf:
    case ConceptKind::UnionOf: {
      const char* joiner = c.kind == ConceptKind::IntersectionOf ? " and " : " or ";
      std::string out;
      for (std::size_t i = 0; i < c.operands.size(); ++i) {
        if (i) out += joiner;
        out += concept_phrase(c.operands[i]);
      }
      return out;
    }
    case ConceptKind::SomeValuesFrom:
      return name_to_words(c.role) + " at least one " + concept_phrase(c.filler());
    case ConceptKind::AllValuesFrom:
      return name_to_words(c.role) + " only " + concept_phrase(c.filler());
    case ConceptKind::HasValue:
      return name_to_words(c.role) + " " + name_to_words(c.individual);
    case ConceptKind::ExactCardinality:
      return name_to_words(c.role) + " exactly " + number_word(c.cardinality) + " " +
             concept_phrase(c.filler());
    case ConceptKind::MinCardinality:
      return name_to_words(c.role) + " at least " + number_word(c.cardinality) + " " +
             concept_phrase(c.filler());
    case ConceptKind::MaxCardinality:
      return name_to_words(c.role) + " at most " + number_word(c.cardinality) + " " +
             concept_phrase(c.filler());
  }
  throw Error(ErrorCode::Untranslatable, "unknown concept kind");
}

Sentence to_sentence(const Axiom& a) {
  Sentence s{a.id, {}};
  switch (a.kind) {
    case AxiomKind::SubClassOf:
    case AxiomKind::EquivalentClasses:
      s.text = concept_phrase(a.concepts[0]) + " is a kind of " + concept_phrase(a.concepts[1]);
      break;
    case AxiomKind::DisjointClasses:
      s.text = concept_phrase(a.concepts[0]) + " isn't a kind of " + concept_phrase(a.concepts[1]);
      break;
    case AxiomKind::ClassAssertion:
      s.text = name_to_words(a.subject) + " is a " + concept_phrase(a.concepts[0]);
      break;
    case AxiomKind::ObjectPropertyAssertion:
      s.text = name_to_words(a.subject) + " " + name_to_words(a.property) + " " +
               name_to_words(a.object);
      break;
    case AxiomKind::DataPropertyAssertion:
      s.text = name_to_words(a.subject) + " " + name_to_words(a.property) + " " + a.value.lexical;
      break;
    case AxiomKind::ObjectPropertyDomain:
    case AxiomKind::DataPropertyDomain:
      s.text = "everything that " + name_to_words(a.property) + " something is a " +
               concept_phrase(a.concepts[0]);
      break;
    case AxiomKind::ObjectPropertyRange:
      s.text = "everything that is " + name_to_words(a.property) + " by something is a " +
               concept_phrase(a.concepts[0]);
      break;
    case AxiomKind::FunctionalObjectProperty:
      s.text = name_to_words(a.property) + " has at most one value";
      break;
  }
  if (s.text.empty()) throw Error(ErrorCode::Untranslatable, to_string(a.kind));
  return s;
}

std::optional<Triple> to_triple(const Axiom& a) {
  switch (a.kind) {
    case AxiomKind::SubClassOf:
      return Triple{render_concept(a.concepts[0]), "SubClassOf", render_concept(a.concepts[1])};
    case AxiomKind::DisjointClasses:
      return Triple{render_concept(a.concepts[0]), "Disjointness", render_concept(a.concepts[1])};
    case AxiomKind::EquivalentClasses:
      return Triple{render_concept(a.concepts[0]), "EquivalentClasses",
                    render_concept(a.concepts[1])};
    case AxiomKind::ClassAssertion:
      return Triple{render_name(a.subject), "isInstanceOf", render_concept(a.concepts[0])};
    case AxiomKind::ObjectPropertyAssertion:
      return Triple{render_name(a.subject), render_name(a.property), render_name(a.object)};
    case AxiomKind::DataPropertyAssertion:
      return Triple{render_name(a.subject), render_name(a.property), render_literal(a.value)};
    case AxiomKind::ObjectPropertyDomain:
    case AxiomKind::ObjectPropertyRange:
    case AxiomKind::DataPropertyDomain:
    case AxiomKind::FunctionalObjectProperty:
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Sentence> to_sentences(const Ontology& onto) {
  std::vector<Sentence> out;
  out.reserve(onto.size());
  for (const auto& a : onto.axioms()) out.push_back(to_sentence(a));
  return out;
}

std::vector<AxiomTriple> to_triples(const Ontology& onto) {
  std::vector<AxiomTriple> out;
  out.reserve(onto.size());
  for (const auto& a : onto.axioms()) out.push_back(AxiomTriple{a.id, to_triple(a)});
  return out;
}

}  // namespace mcsreason
