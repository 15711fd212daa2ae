#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace mcsreason;

namespace {

std::vector<std::vector<std::string>> id_lists(const Ontology& onto, const std::vector<Mcs>& mcs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& m : mcs) out.push_back(m.ids(onto));
  return out;
}

Method make_method(const Ontology& onto, const std::string& name, const std::string& backend,
                   const std::string& metric, std::uint64_t seed, std::size_t dim,
                   const std::string& vectors) {
  MethodKind kind = parse_method(name);
  if (kind != MethodKind::Embedding) return Method{kind, std::nullopt};
  AxiomEmbedding emb;
  if (backend == "hash") {
    emb = hash_embed(to_sentences(onto), dim ? dim : 256, seed);
  } else if (backend == "transe") {
    TransEConfig cfg;
    cfg.seed = seed;
    if (dim) cfg.dimension = dim;
    emb = train_transe(to_triples(onto), cfg).embedding;
  } else if (backend == "import") {
    std::istringstream in(vectors);
    emb = import_vectors(in, onto);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown backend '" + backend + "'");
  }
  return Method::embedding(similarity_matrix(emb, parse_metric(metric)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "MCS-based reasoning over inconsistent ontologies";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object value = py::make_tuple(to_string(e.code()), e.what());
      PyErr_SetObject(error.ptr(), value.ptr());
    }
  });

  py::class_<Ontology>(m, "Ontology")
      .def_property_readonly("ids", [](const Ontology& o) {
        std::vector<std::string> ids;
        for (const auto& a : o.axioms()) ids.push_back(a.id);
        return ids;
      })
      .def("axiom", [](const Ontology& o, const std::string& id) { return render_axiom(o[o.index_of(id)]); })
      .def("is_injected", [](const Ontology& o, const std::string& id) { return o[o.index_of(id)].injected; })
      .def("render", &Ontology::render)
      .def("__len__", &Ontology::size)
      .def("__repr__", [](const Ontology& o) { return "<Ontology with " + std::to_string(o.size()) + " axioms>"; });

  m.def("parse", [](const std::string& text) { return parse_ontology(text); }, py::arg("text"));

  m.def("check", [](const Ontology& o) {
    auto r = check_consistency(o);
    py::dict d;
    d["consistent"] = r.consistent;
    if (r.clash) {
      d["kind"] = to_string(r.clash->kind);
      d["axioms"] = r.clash->axiom_ids;
      d["individuals"] = r.clash->individuals;
    }
    return d;
  });

  m.def("entails", [](const Ontology& o, const std::string& query) {
    std::vector<AxiomIndex> all(o.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return entails(o, all, parse_query(query));
  });

  m.def(
      "mcs",
      [](const Ontology& o, std::size_t max_mcs, std::size_t max_oracle_calls) {
        return id_lists(o, enumerate_mcs(o, {max_mcs, max_oracle_calls}));
      },
      py::arg("onto"), py::arg("max_mcs") = McsBudget{}.max_mcs,
      py::arg("max_oracle_calls") = McsBudget{}.max_oracle_calls);
  m.def("brute_force_mcs", [](const Ontology& o) { return id_lists(o, brute_force_mcs(o)); });

  m.def("sentences", [](const Ontology& o) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& s : to_sentences(o)) out.emplace_back(s.id, s.text);
    return out;
  });
  m.def("triples", [](const Ontology& o) {
    std::vector<std::tuple<std::string, std::string, std::string, std::string>> out;
    for (const auto& t : to_triples(o))
      if (t.triple) out.emplace_back(t.id, t.triple->subject, t.triple->relation, t.triple->object);
    return out;
  });

  m.def(
      "hash_vectors",
      [](const Ontology& o, std::size_t dim, std::uint64_t seed) {
        std::ostringstream out;
        io::write_vectors(out, hash_embed(to_sentences(o), dim, seed));
        return out.str();
      },
      py::arg("onto"), py::arg("dim") = 256, py::arg("seed") = 0,
      "Vectors JSONL text for the hash embedder.");

  m.def("sim_cos", [](const std::vector<double>& a, const std::vector<double>& b) {
    return sim_cos(Vector(a), Vector(b));
  });
  m.def("sim_euc", [](const std::vector<double>& a, const std::vector<double>& b) {
    return sim_euc(Vector(a), Vector(b));
  });

  m.def(
      "score",
      [](const Ontology& o, const std::string& method, const std::string& backend,
         const std::string& metric, std::uint64_t seed, std::size_t dim, const std::string& vectors) {
        Reasoner r(o, make_method(o, method, backend, metric, seed, dim, vectors));
        std::vector<std::pair<std::vector<std::string>, double>> out;
        for (auto& s : rank_mcs(o, r.all_mcs(), r.scorer())) out.emplace_back(std::move(s.ids), s.score);
        return out;
      },
      py::arg("onto"), py::arg("method") = "embedding", py::arg("backend") = "hash",
      py::arg("metric") = "cos", py::arg("seed") = 0, py::arg("dim") = 0, py::arg("vectors") = "");

  m.def(
      "query",
      [](const Ontology& o, const std::string& query, const std::string& method,
         const std::string& backend, const std::string& metric, std::uint64_t seed, std::size_t dim,
         const std::string& vectors) {
        Reasoner r(o, make_method(o, method, backend, metric, seed, dim, vectors));
        auto ans = r.answer(parse_query(query));
        return std::make_pair(std::string(to_string(ans.verdict)), id_lists(o, ans.preferred));
      },
      py::arg("onto"), py::arg("query"), py::arg("method") = "skeptical", py::arg("backend") = "hash",
      py::arg("metric") = "cos", py::arg("seed") = 0, py::arg("dim") = 0, py::arg("vectors") = "",
      "Returns (verdict, preferred MCS id lists).");

  m.def(
      "infers",
      [](const Ontology& o, const std::string& alpha, const std::string& beta, const std::string& method) {
        return infers(o, parse_query(alpha), parse_query(beta), make_method(o, method, "hash", "cos", 0, 0, ""));
      },
      py::arg("onto"), py::arg("alpha"), py::arg("beta"), py::arg("method") = "skeptical");

  m.def("inject", &inject_conflicts, py::arg("onto"), py::arg("n"), py::arg("seed") = 0);

  m.def("classify", [](const std::string& method, const std::string& gold) {
    return std::string(to_string(classify_answer(parse_verdict(method), parse_verdict(gold))));
  });
  m.def("report", [](std::size_t ia, std::size_t ca, std::size_t ra, std::size_t cia) {
    auto r = EvalReport::from_counts(ia, ca, ra, cia);
    py::dict d;
    d["ia"] = r.ia;
    d["ca"] = r.ca;
    d["ra"] = r.ra;
    d["cia"] = r.cia;
    d["total"] = r.total;
    d["ia_rate"] = r.ia_rate;
    d["icr_rate"] = r.icr_rate;
    return d;
  });
}
