#include "mcsreason/harness.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "mcsreason/consistency.hpp"
#include "mcsreason/error.hpp"

namespace mcsreason {

namespace {

struct FunctionalTarget {
  std::string role, subject;
};

struct DisjointTarget {
  ConceptExpr lhs, rhs;
  std::string individual;
};

// Uniform index in [0, n) that does not depend on the standard library's
// distribution implementation.
std::size_t pick(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

std::string fresh_id(const Ontology& onto, std::set<std::string>& taken, std::size_t& next) {
  for (;; ++next) {
    std::string id = "a" + std::to_string(next);
    if (!onto.find_id(id) && !taken.count(id)) {
      taken.insert(id);
      ++next;
      return id;
    }
  }
}

}  // namespace

Ontology inject_conflicts(const Ontology& onto, std::size_t n, std::uint64_t seed) {
  if (n == 0) return onto;
  if (!check_consistency(onto).consistent)
    throw Error(ErrorCode::InconsistentPremises, "conflicts can only be injected into a consistent ontology");

  std::vector<FunctionalTarget> functional;
  std::vector<DisjointTarget> disjoint;
  for (const Axiom& f : onto.axioms()) {
    if (f.kind != AxiomKind::FunctionalObjectProperty) continue;
    std::set<std::string> subjects;
    for (const Axiom& a : onto.axioms())
      if (a.kind == AxiomKind::ObjectPropertyAssertion && a.property == f.property)
        subjects.insert(a.subject);
    for (const auto& s : subjects) functional.push_back({f.property, s});
  }
  for (const Axiom& d : onto.axioms()) {
    if (d.kind != AxiomKind::DisjointClasses) continue;
    if (!d.concepts[0].is_named() || !d.concepts[1].is_named()) continue;
    for (const auto& x : onto.individual_names()) disjoint.push_back({d.concepts[0], d.concepts[1], x});
  }
  std::size_t available = functional.size() + disjoint.size();
  if (available == 0)
    throw Error(ErrorCode::NoConflictTargets, "no functional role assertion or disjointness to violate");
  if (n > available)
    throw Error(ErrorCode::NoConflictTargets, "requested " + std::to_string(n) +
                                                  " conflicts but only " + std::to_string(available) +
                                                  " targets exist");

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(available);
  for (std::size_t i = 0; i < available; ++i) order[i] = i;
  for (std::size_t i = available; i > 1; --i) std::swap(order[i - 1], order[pick(rng, i)]);

  const auto& individuals = onto.individual_names();
  std::set<std::string> names(individuals.begin(), individuals.end());
  std::set<std::string> taken;
  std::size_t next_id = onto.size() + 1;
  std::size_t next_fresh = 1;
  std::vector<Axiom> added;
  auto add = [&](Axiom a) {
    a.id = fresh_id(onto, taken, next_id);
    a.injected = true;
    added.push_back(std::move(a));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t t = order[k];
    if (t < functional.size()) {
      const auto& [role, subject] = functional[t];
      std::set<std::string> fillers;
      for (const Axiom& a : onto.axioms())
        if (a.kind == AxiomKind::ObjectPropertyAssertion && a.property == role && a.subject == subject)
          fillers.insert(a.object);
      for (const Axiom& a : added)
        if (a.kind == AxiomKind::ObjectPropertyAssertion && a.property == role && a.subject == subject)
          fillers.insert(a.object);
      std::vector<std::string> candidates;
      for (const auto& x : individuals)
        if (x != subject && !fillers.count(x)) candidates.push_back(x);
      std::string filler;
      if (!candidates.empty()) {
        filler = candidates[pick(rng, candidates.size())];
      } else {
        do filler = "injected_" + std::to_string(next_fresh++);
        while (names.count(filler));
        names.insert(filler);
      }
      add(Axiom::object_property_assertion(role, subject, filler));
    } else {
      const auto& [lhs, rhs, x] = disjoint[t - functional.size()];
      auto in_lhs = Axiom::class_assertion(lhs, x);
      auto in_rhs = Axiom::class_assertion(rhs, x);
      auto refs = axiom_refs(onto.axioms());
      bool has_lhs = entails(refs, in_lhs);
      bool has_rhs = entails(refs, in_rhs);
      auto already = [&](const Axiom& a) {
        return std::any_of(added.begin(), added.end(),
                           [&](const Axiom& b) { return structurally_equal(a, b); });
      };
      if (!has_lhs && !already(in_lhs)) add(in_lhs);
      if (!has_rhs && !already(in_rhs)) add(in_rhs);
    }
  }
  return onto.with(std::move(added));
}

Ontology strip_injected(const Ontology& onto) {
  std::vector<Axiom> kept;
  for (const Axiom& a : onto.axioms())
    if (!a.injected) kept.push_back(a);
  return Ontology(std::move(kept));
}

const char* to_string(AnswerClass c) {
  switch (c) {
    case AnswerClass::IA: return "IA";
    case AnswerClass::CA: return "CA";
    case AnswerClass::RA: return "RA";
    case AnswerClass::CIA: return "CIA";
  }
  return "?";
}

AnswerClass classify_answer(Verdict method, Verdict gold) {
  if (method == gold) return AnswerClass::IA;
  if (method == Verdict::Undetermined) return AnswerClass::CA;
  if (gold == Verdict::Undetermined) return AnswerClass::RA;
  return AnswerClass::CIA;
}

EvalReport EvalReport::from_counts(std::size_t ia, std::size_t ca, std::size_t ra, std::size_t cia) {
  EvalReport r;
  r.ia = ia;
  r.ca = ca;
  r.ra = ra;
  r.cia = cia;
  r.total = ia + ca + ra + cia;
  if (r.total > 0) {
    r.ia_rate = static_cast<double>(ia) / static_cast<double>(r.total);
    r.icr_rate = static_cast<double>(ia + ca + ra) / static_cast<double>(r.total);
  }
  return r;
}

EvalReport evaluate(std::span<const MethodAnswer> answers, std::span<const GoldRecord> gold) {
  std::map<std::string, Verdict> expected;
  for (const auto& g : gold)
    if (!expected.emplace(g.id, g.gold).second)
      throw Error(ErrorCode::GoldMismatch, "duplicate gold id " + g.id);
  std::size_t counts[4] = {0, 0, 0, 0};
  std::set<std::string> seen;
  for (const auto& a : answers) {
    auto it = expected.find(a.id);
    if (it == expected.end()) throw Error(ErrorCode::GoldMismatch, "no gold verdict for " + a.id);
    if (!seen.insert(a.id).second) throw Error(ErrorCode::GoldMismatch, "duplicate answer id " + a.id);
    ++counts[static_cast<int>(classify_answer(a.verdict, it->second))];
  }
  for (const auto& [id, v] : expected)
    if (!seen.count(id)) throw Error(ErrorCode::GoldMismatch, "no answer for gold id " + id);
  return EvalReport::from_counts(counts[0], counts[1], counts[2], counts[3]);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line, std::size_t lineno) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false, was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"' && cur.empty() && !was_quoted) {
      quoted = was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
      was_quoted = false;
    } else {
      cur += c;
    }
  }
  if (quoted)
    throw Error(ErrorCode::MalformedRecord, "line " + std::to_string(lineno) + ": unterminated quote");
  fields.push_back(std::move(cur));
  return fields;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<GoldRecord> read_gold_csv(std::istream& in) {
  std::vector<GoldRecord> out;
  std::string line;
  std::size_t lineno = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto f = split_csv_line(line, lineno);
    if (f.size() != 3)
      throw Error(ErrorCode::MalformedRecord, "line " + std::to_string(lineno) + ": expected 3 fields");
    if (header) {
      if (f[0] != "id" || f[1] != "query" || f[2] != "gold")
        throw Error(ErrorCode::MalformedRecord, "gold CSV header must be id,query,gold");
      header = false;
      continue;
    }
    try {
      out.push_back({f[0], f[1], parse_verdict(f[2])});
    } catch (const Error&) {
      throw Error(ErrorCode::MalformedRecord,
                  "line " + std::to_string(lineno) + ": bad gold verdict '" + f[2] + "'");
    }
  }
  if (header) throw Error(ErrorCode::MalformedRecord, "gold CSV is empty");
  return out;
}

void write_gold_csv(std::ostream& out, std::span<const GoldRecord> gold) {
  out << "id,query,gold\n";
  for (const auto& g : gold) {
    bool plain = g.id.find_first_of(",\"\r\n") == std::string::npos;
    out << (plain ? g.id : csv_quote(g.id)) << ',' << csv_quote(g.query) << ',' << to_string(g.gold) << '\n';
  }
}

namespace {

void symbols_of(const ConceptExpr& c, std::set<std::string>& out) {
  if (c.is_named()) out.insert(c.name);
  if (!c.individual.empty()) out.insert(c.individual);
  for (const auto& o : c.operands) symbols_of(o, out);
}

std::set<std::string> symbols_of(const Axiom& a) {
  std::set<std::string> out;
  for (const auto& c : a.concepts) symbols_of(c, out);
  if (!a.subject.empty()) out.insert(a.subject);
  if (!a.object.empty()) out.insert(a.object);
  return out;
}

std::size_t weighted_pick(std::mt19937_64& rng, const std::vector<double>& weights) {
  double total = 0;
  for (double w : weights) total += w;
  // 53 random bits -> [0, 1)
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (u < weights[i]) return i;
    u -= weights[i];
  }
  return weights.size() - 1;
}

}  // namespace

std::vector<Axiom> generate_queries(const Ontology& onto, std::span<const Mcs> mcs,
                                    const QueryGenConfig& config) {
  std::set<std::string> hot;
  for (AxiomIndex i = 0; i < onto.size(); ++i) {
    bool everywhere = std::all_of(mcs.begin(), mcs.end(), [&](const Mcs& m) { return m.contains(i); });
    if (!everywhere) {
      auto s = symbols_of(onto[i]);
      hot.insert(s.begin(), s.end());
    }
  }
  std::vector<std::string> concepts;
  for (const auto& c : onto.concept_names())
    if (c != kOwlThing && c != kOwlNothing) concepts.push_back(c);
  const auto& individuals = onto.individual_names();

  struct Pair {
    std::size_t c, x;
  };
  std::vector<Pair> pool;
  std::vector<double> weights;
  for (std::size_t c = 0; c < concepts.size(); ++c)
    for (std::size_t x = 0; x < individuals.size(); ++x) {
      pool.push_back({c, x});
      double w = (hot.count(concepts[c]) ? config.conflict_weight : 1.0) *
                 (hot.count(individuals[x]) ? config.conflict_weight : 1.0);
      weights.push_back(w);
    }

  std::mt19937_64 rng(config.seed);
  std::vector<Axiom> out;
  std::size_t counter = 0;
  while (out.size() < config.count && !pool.empty()) {
    std::size_t k = weighted_pick(rng, weights);
    auto q = Axiom::class_assertion(ConceptExpr::named(concepts[pool[k].c]), individuals[pool[k].x]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
    weights.erase(weights.begin() + static_cast<std::ptrdiff_t>(k));
    if (is_trivial(q)) continue;
    q.id = "q" + std::to_string(++counter);
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace mcsreason
