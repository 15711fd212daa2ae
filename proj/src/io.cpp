#include "mcsreason/io.hpp"

#include <json.hpp>
#include <map>

#include "mcsreason/error.hpp"
#include "mcsreason/parser.hpp"

namespace mcsreason::io {

using nlohmann::json;

namespace {

std::string at_line(std::size_t n) { return "line " + std::to_string(n) + ": "; }

json parse_record(const std::string& line, std::size_t lineno) {
  try {
    json j = json::parse(line);
    if (!j.is_object()) throw Error(ErrorCode::MalformedRecord, at_line(lineno) + "expected an object");
    return j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedRecord, at_line(lineno) + e.what());
  }
}

std::string string_field(const json& j, const char* key, std::size_t lineno) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string())
    throw Error(ErrorCode::MalformedRecord, at_line(lineno) + "missing string field \"" + key + "\"");
  return it->get<std::string>();
}

std::string escape_tsv(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_tsv(const std::string& s, std::size_t lineno) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (++i == s.size()) throw Error(ErrorCode::MalformedRecord, at_line(lineno) + "dangling escape");
    switch (s[i]) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case '\\': out += '\\'; break;
      default: throw Error(ErrorCode::MalformedRecord, at_line(lineno) + "unknown escape");
    }
  }
  return out;
}

// Canonical text of a query so that formatting differences do not matter.
std::string normalize_query(const std::string& text) {
  try {
    return render_axiom(parse_query(text));
  } catch (const Error&) {
    return text;
  }
}

}  // namespace

void write_sentences(std::ostream& out, std::span<const Sentence> sentences) {
  for (const auto& s : sentences) out << json{{"id", s.id}, {"text", s.text}}.dump() << '\n';
}

std::vector<Sentence> read_sentences(std::istream& in) {
  std::vector<Sentence> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = parse_record(line, lineno);
    out.push_back({string_field(j, "id", lineno), string_field(j, "text", lineno)});
  }
  return out;
}

void write_vectors(std::ostream& out, const AxiomEmbedding& emb) {
  for (std::size_t i = 0; i < emb.size(); ++i) {
    auto v = emb.vector(i).values();
    json rec{{"id", emb.ids()[i]}, {"vector", std::vector<double>(v.begin(), v.end())}};
    out << rec.dump() << '\n';
  }
}

std::size_t write_triples(std::ostream& out, std::span<const AxiomTriple> triples) {
  std::size_t skipped = 0;
  for (const auto& t : triples) {
    if (!t.triple) {
      ++skipped;
      continue;
    }
    out << escape_tsv(t.id) << '\t' << escape_tsv(t.triple->subject) << '\t'
        << escape_tsv(t.triple->relation) << '\t' << escape_tsv(t.triple->object) << '\n';
  }
  return skipped;
}

std::vector<AxiomTriple> read_triples(std::istream& in) {
  std::vector<AxiomTriple> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (;;) {
      auto tab = line.find('\t', start);
      f.push_back(unescape_tsv(line.substr(start, tab - start), lineno));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (f.size() != 4) throw Error(ErrorCode::MalformedRecord, at_line(lineno) + "expected 4 fields");
    out.push_back({f[0], Triple{f[1], f[2], f[3]}});
  }
  return out;
}

std::string mcs_json(const Ontology& onto, std::span<const Mcs> mcs) {
  json arr = json::array();
  for (const auto& m : mcs) arr.push_back(m.ids(onto));
  return arr.dump();
}

std::string consistency_json(const ConsistencyResult& r) {
  json j{{"consistent", r.consistent}};
  if (r.clash)
    j["clash"] = json{{"kind", to_string(r.clash->kind)},
                      {"axioms", r.clash->axiom_ids},
                      {"individuals", r.clash->individuals}};
  return j.dump();
}

std::string scored_json(std::span<const ScoredMcs> scored) {
  json arr = json::array();
  for (const auto& s : scored) arr.push_back(json{{"mcs", s.ids}, {"score", s.score}});
  return arr.dump();
}

std::string report_json(const EvalReport& r) {
  // Key order fixed by ordered_json.
  nlohmann::ordered_json j;
  j["ia"] = r.ia;
  j["ca"] = r.ca;
  j["ra"] = r.ra;
  j["cia"] = r.cia;
  j["total"] = r.total;
  j["ia_rate"] = r.ia_rate;
  j["icr_rate"] = r.icr_rate;
  return j.dump();
}

std::string answer_json(const AnswerRecord& r) {
  nlohmann::ordered_json j;
  if (r.id) j["id"] = *r.id;
  j["query"] = r.query;
  j["verdict"] = to_string(r.verdict);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& l : r.preferred_mcs) arr.push_back(l);
  j["preferred_mcs"] = arr;
  return j.dump();
}

std::vector<AnswerRecord> read_answers(std::istream& in) {
  std::vector<AnswerRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = parse_record(line, lineno);
    AnswerRecord r;
    if (j.contains("id")) r.id = string_field(j, "id", lineno);
    r.query = string_field(j, "query", lineno);
    try {
      r.verdict = parse_verdict(string_field(j, "verdict", lineno));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::MalformedRecord) throw;
      throw Error(ErrorCode::MalformedRecord, at_line(lineno) + e.what());
    }
    if (auto it = j.find("preferred_mcs"); it != j.end()) {
      try {
        r.preferred_mcs = it->get<std::vector<std::vector<std::string>>>();
      } catch (const json::exception& e) {
        throw Error(ErrorCode::MalformedRecord, at_line(lineno) + e.what());
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<MethodAnswer> match_answers(std::span<const AnswerRecord> answers,
                                        std::span<const GoldRecord> gold) {
  std::map<std::string, std::string> id_by_query;
  for (const auto& g : gold) id_by_query.emplace(normalize_query(g.query), g.id);
  std::vector<MethodAnswer> out;
  for (const auto& a : answers) {
    if (a.id) {
      out.push_back({*a.id, a.verdict});
      continue;
    }
    auto it = id_by_query.find(normalize_query(a.query));
    if (it == id_by_query.end())
      throw Error(ErrorCode::GoldMismatch, "no gold record for query " + a.query);
    out.push_back({it->second, a.verdict});
  }
  return out;
}

std::string cache_json(const SelectionCache& c) {
  nlohmann::ordered_json j;
  j["key"] = c.key;
  j["method"] = c.method;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& l : c.preferred_mcs) arr.push_back(l);
  j["preferred_mcs"] = arr;
  return j.dump();
}

std::optional<SelectionCache> read_cache(std::istream& in) {
  try {
    json j = json::parse(in);
    SelectionCache c;
    c.key = j.at("key").get<std::string>();
    c.method = j.at("method").get<std::string>();
    c.preferred_mcs = j.at("preferred_mcs").get<std::vector<std::vector<std::string>>>();
    return c;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

}  // namespace mcsreason::io
