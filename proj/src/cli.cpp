#include "mcsreason/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mcsreason/consistency.hpp"
#include "mcsreason/embed.hpp"
#include "mcsreason/error.hpp"
#include "mcsreason/harness.hpp"
#include "mcsreason/inference.hpp"
#include "mcsreason/io.hpp"
#include "mcsreason/mcs.hpp"
#include "mcsreason/parser.hpp"
#include "mcsreason/scoring.hpp"
#include "mcsreason/verbalize.hpp"

namespace mcsreason::cli {

namespace {

struct Options {
  std::string input;
  std::string out_path;
  std::string backend = "hash";
  std::string metric = "cos";
  std::string method;
  std::string vectors;
  std::string mode = "sentences";
  std::string query;
  std::string queries;
  std::string alpha, beta;
  std::string answers, gold;
  std::string cache;
  std::uint64_t seed = 0;
  std::size_t dim = 0;
  std::size_t epochs = 200;
  std::size_t conflicts = 1;
  std::size_t budget_mcs = McsBudget{}.max_mcs;
  std::size_t budget_oracle = McsBudget{}.max_oracle_calls;
};

// Raised for flag combinations CLI11 cannot express; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mcsreason::Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

McsBudget budget_of(const Options& o) { return {o.budget_mcs, o.budget_oracle}; }

std::size_t effective_dim(const Options& o) {
  if (o.dim) return o.dim;
  return o.backend == "transe" ? TransEConfig{}.dimension : 256;
}

AxiomEmbedding build_embedding(const Ontology& onto, const Options& o, std::ostream& err) {
  if (o.backend == "hash") return hash_embed(to_sentences(onto), effective_dim(o), o.seed);
  if (o.backend == "transe") {
    TransEConfig cfg;
    cfg.dimension = effective_dim(o);
    cfg.epochs = o.epochs;
    cfg.seed = o.seed;
    auto result = train_transe(to_triples(onto), cfg);
    std::size_t placeholders = 0;
    for (std::size_t i = 0; i < result.embedding.size(); ++i)
      placeholders += result.embedding.is_placeholder(i) ? 1 : 0;
    if (placeholders)
      err << "note: " << placeholders << " axiom(s) have no triple form and got zero vectors\n";
    return std::move(result.embedding);
  }
  if (o.vectors.empty()) throw UsageError("--backend import requires --vectors");
  std::istringstream in(read_file(o.vectors));
  return import_vectors(in, onto);
}

Method build_method(const Ontology& onto, const Options& o, std::ostream& err) {
  MethodKind kind = parse_method(o.method.empty() ? "embedding" : o.method);
  if (kind != MethodKind::Embedding) return Method{kind, std::nullopt};
  auto emb = build_embedding(onto, o, err);
  return Method::embedding(similarity_matrix(emb, parse_metric(o.metric)));
}

// Identifies the selection inputs so a stale cache is never reused.
std::string selection_key(const Ontology& onto, const Options& o) {
  std::string method = o.method.empty() ? "embedding" : o.method;
  std::uint64_t h = fnv1a(onto.render());
  h = fnv1a("\x1f" + method, h);
  if (parse_method(method) == MethodKind::Embedding) {
    h = fnv1a("\x1f" + o.backend + "\x1f" + o.metric + "\x1f" + std::to_string(o.seed) + "\x1f" +
                  std::to_string(effective_dim(o)) + "\x1f" + std::to_string(o.epochs),
              h);
    if (o.backend == "import") h = fnv1a(read_file(o.vectors), h);
  }
  h = fnv1a("\x1f" + std::to_string(o.budget_mcs) + "\x1f" + std::to_string(o.budget_oracle), h);
  std::ostringstream ss;
  ss << std::hex << h;
  return ss.str();
}

std::string cache_path(const Options& o) {
  return o.cache.empty() ? o.input + ".select.json" : o.cache;
}

std::vector<std::vector<std::string>> id_lists(const Ontology& onto, const std::vector<Mcs>& mcs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& m : mcs) out.push_back(m.ids(onto));
  return out;
}

std::vector<Mcs> from_id_lists(const Ontology& onto,
                               const std::vector<std::vector<std::string>>& lists) {
  std::vector<Mcs> out;
  for (const auto& l : lists) {
    Mcs m;
    for (const auto& id : l) m.members.push_back(onto.index_of(id));
    std::sort(m.members.begin(), m.members.end());
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::string> read_query_lines(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line.substr(first));
  }
  return out;
}

void cmd_parse(const Options& o, std::ostream& out, std::ostream&) {
  out << parse_ontology(read_file(o.input)).render();
}

void cmd_check(const Options& o, std::ostream& out, std::ostream&) {
  out << io::consistency_json(check_consistency(parse_ontology(read_file(o.input)))) << '\n';
}

void cmd_mcs(const Options& o, std::ostream& out, std::ostream& err) {
  auto onto = parse_ontology(read_file(o.input));
  McsStats stats;
  auto mcs = enumerate_mcs(onto, budget_of(o), &stats);
  err << mcs.size() << " MCS(s), " << stats.oracle_calls << " consistency checks\n";
  out << io::mcs_json(onto, mcs) << '\n';
}

void cmd_verbalize(const Options& o, std::ostream& out, std::ostream& err) {
  auto onto = parse_ontology(read_file(o.input));
  if (o.mode == "sentences") {
    io::write_sentences(out, to_sentences(onto));
    return;
  }
  std::size_t skipped = io::write_triples(out, to_triples(onto));
  if (skipped) err << "skipped " << skipped << " axiom(s) without a triple form\n";
}

void cmd_embed(const Options& o, std::ostream& out, std::ostream& err) {
  auto onto = parse_ontology(read_file(o.input));
  io::write_vectors(out, build_embedding(onto, o, err));
}

void cmd_score(const Options& o, std::ostream& out, std::ostream& err) {
  auto onto = parse_ontology(read_file(o.input));
  Reasoner r(onto, build_method(onto, o, err), budget_of(o));
  out << io::scored_json(rank_mcs(r.ontology(), r.all_mcs(), r.scorer())) << '\n';
}

void cmd_select(const Options& o, std::ostream& out, std::ostream& err) {
  auto onto = parse_ontology(read_file(o.input));
  Reasoner r(onto, build_method(onto, o, err), budget_of(o));
  io::SelectionCache c{selection_key(onto, o), to_string(r.method().kind),
                       id_lists(onto, r.preferred())};
  std::string text = io::cache_json(c) + "\n";
  std::ofstream f(cache_path(o), std::ios::binary);
  if (!f) throw mcsreason::Error(ErrorCode::InvalidArgument, "cannot write " + cache_path(o));
  f << text;
  err << "selection cached in " << cache_path(o) << '\n';
  out << text;
}

void cmd_query(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.query.empty() == o.queries.empty()) throw UsageError("exactly one of --query or --queries is required");
  auto doc = parse_document(read_file(o.input));
  const Ontology& onto = doc.ontology;
  std::vector<std::string> texts = o.queries.empty() ? std::vector<std::string>{o.query}
                                                     : read_query_lines(o.queries);
  std::vector<Axiom> qs;
  for (const auto& t : texts) qs.push_back(parse_query(t, doc.prefixes));

  std::optional<std::vector<Mcs>> preferred;
  std::string key = selection_key(onto, o);
  if (std::filesystem::exists(cache_path(o))) {
    std::istringstream in(read_file(cache_path(o)));
    auto c = io::read_cache(in);
    if (c && c->key == key) {
      preferred = from_id_lists(onto, c->preferred_mcs);
      err << "using cached selection from " << cache_path(o) << '\n';
    } else {
      err << "ignoring stale selection cache " << cache_path(o) << '\n';
    }
  }
  if (!preferred) preferred = Reasoner(onto, build_method(onto, o, err), budget_of(o)).preferred();

  for (std::size_t i = 0; i < qs.size(); ++i) {
    auto ans = answer_against(onto, *preferred, qs[i]);
    io::AnswerRecord rec{std::nullopt, texts[i], ans.verdict, id_lists(onto, ans.preferred)};
    out << io::answer_json(rec) << '\n';
  }
}

void cmd_infer(const Options& o, std::ostream& out, std::ostream& err) {
  auto doc = parse_document(read_file(o.input));
  auto alpha = parse_query(o.alpha, doc.prefixes, "alpha");
  auto beta = parse_query(o.beta, doc.prefixes, "beta");
  Reasoner r(doc.ontology, build_method(doc.ontology, o, err), budget_of(o));
  auto preferred = r.preferred(alpha);
  nlohmann::ordered_json j;
  j["alpha"] = o.alpha;
  j["beta"] = o.beta;
  j["infers"] = r.infers(alpha, beta);
  j["preferred_mcs"] = id_lists(doc.ontology, preferred);
  out << j.dump() << '\n';
}

void cmd_inject(const Options& o, std::ostream& out, std::ostream&) {
  auto onto = parse_ontology(read_file(o.input));
  out << inject_conflicts(onto, o.conflicts, o.seed).render();
}

void cmd_eval(const Options& o, std::ostream& out, std::ostream&) {
  std::istringstream a(read_file(o.answers));
  std::istringstream g(read_file(o.gold));
  auto answers = io::read_answers(a);
  auto gold = read_gold_csv(g);
  out << io::report_json(evaluate(io::match_answers(answers, gold), gold)) << '\n';
}

}  // namespace

int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Reasoning with inconsistent ontologies via maximal consistent subsets", "mcsreason"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  const std::vector<std::string> methods = {"skeptical", "cmcs", "sharpmc", "sharp-mc", "embedding"};
  auto input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Ontology file (functional syntax)")->required();
    sub->add_option("--out", o.out_path, "Write data here instead of stdout");
  };
  auto budgets = [&](CLI::App* sub) {
    sub->add_option("--budget-mcs", o.budget_mcs, "Maximum number of MCSs")->capture_default_str();
    sub->add_option("--budget-oracle", o.budget_oracle, "Maximum consistency checks")->capture_default_str();
  };
  auto embedding = [&](CLI::App* sub) {
    sub->add_option("--backend", o.backend, "Embedding backend")
        ->check(CLI::IsMember({"hash", "transe", "import"}))
        ->capture_default_str();
    sub->add_option("--vectors", o.vectors, "Vectors JSONL for --backend import");
    sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    sub->add_option("--dim", o.dim, "Embedding dimension (hash 256, transe 50)");
    sub->add_option("--epochs", o.epochs, "TransE epochs")->capture_default_str();
  };
  auto method = [&](CLI::App* sub) {
    embedding(sub);
    budgets(sub);
    sub->add_option("--metric", o.metric, "Similarity metric")
        ->check(CLI::IsMember({"cos", "euc"}))
        ->capture_default_str();
    sub->add_option("--method", o.method, "Selection method (default embedding)")
        ->check(CLI::IsMember(methods));
  };

  std::map<std::string, void (*)(const Options&, std::ostream&, std::ostream&)> handlers;
  auto sub = [&](const char* name, const char* help, auto fn) {
    handlers[name] = fn;
    return app.add_subcommand(name, help);
  };

  input(sub("parse", "Parse and print the canonical ontology", cmd_parse));
  input(sub("check", "Consistency check with clash report", cmd_check));
  {
    auto* s = sub("mcs", "Enumerate maximal consistent subsets", cmd_mcs);
    input(s);
    budgets(s);
  }
  {
    auto* s = sub("verbalize", "Axioms as sentences or triples", cmd_verbalize);
    input(s);
    s->add_option("--mode", o.mode, "sentences or triples")
        ->check(CLI::IsMember({"sentences", "triples"}))
        ->capture_default_str();
  }
  {
    auto* s = sub("embed", "Axiom vectors as JSONL", cmd_embed);
    input(s);
    embedding(s);
  }
  {
    auto* s = sub("score", "Score every MCS", cmd_score);
    input(s);
    method(s);
  }
  {
    auto* s = sub("select", "Select and cache the preferred MCSs", cmd_select);
    input(s);
    method(s);
    s->add_option("--cache", o.cache, "Cache file (default <input>.select.json)");
  }
  {
    auto* s = sub("query", "Answer queries against the preferred MCSs", cmd_query);
    input(s);
    method(s);
    s->add_option("--query", o.query, "One query axiom");
    s->add_option("--queries", o.queries, "File with one query axiom per line");
    s->add_option("--cache", o.cache, "Cache file (default <input>.select.json)");
  }
  {
    auto* s = sub("infer", "Decide alpha |~ beta", cmd_infer);
    input(s);
    method(s);
    s->add_option("--alpha", o.alpha, "Antecedent axiom")->required();
    s->add_option("--beta", o.beta, "Consequent axiom")->required();
  }
  {
    auto* s = sub("inject", "Add conflicts to a consistent ontology", cmd_inject);
    input(s);
    s->add_option("--conflicts", o.conflicts, "Number of conflicts")->capture_default_str();
    s->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  }
  {
    auto* s = sub("eval", "Compare answers with a gold standard", cmd_eval);
    s->add_option("--answers", o.answers, "Answers JSONL from query")->required();
    s->add_option("--gold", o.gold, "Gold CSV (id,query,gold)")->required();
    s->add_option("--out", o.out_path, "Write data here instead of stdout");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  auto* chosen = app.get_subcommands().front();
  try {
    std::ostringstream data;
    handlers.at(chosen->get_name())(o, data, err);
    if (o.out_path.empty()) {
      out << data.str();
    } else {
      std::ofstream f(o.out_path, std::ios::binary);
      if (!f) throw mcsreason::Error(ErrorCode::InvalidArgument, "cannot write " + o.out_path);
      f << data.str();
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const mcsreason::Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  }
}

}  // namespace mcsreason::cli
