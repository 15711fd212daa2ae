#include "mcsreason/embed.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "mcsreason/error.hpp"

namespace mcsreason {

// ---------------------------------------------------------------------------
// Vector / AxiomEmbedding

Vector::Vector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::InvalidArgument, "vector arity must be >= 1");
  for (double x : values_)
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "vector component not finite");
}

double Vector::norm() const {
  return std::sqrt(std::inner_product(values_.begin(), values_.end(), values_.begin(), 0.0));
}

bool Vector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double x) { return x == 0.0; });
}

Vector Vector::zeros(std::size_t arity) { return Vector(std::vector<double>(arity, 0.0)); }

AxiomEmbedding::AxiomEmbedding(std::string backend, std::vector<std::string> ids,
                               std::vector<Vector> vectors, std::vector<bool> placeholder)
    : backend_(std::move(backend)),
      ids_(std::move(ids)),
      vectors_(std::move(vectors)),
      placeholder_(std::move(placeholder)) {
  if (ids_.size() != vectors_.size())
    throw Error(ErrorCode::InvalidArgument, "ids and vectors differ in length");
  if (placeholder_.empty()) placeholder_.assign(ids_.size(), false);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i == 0) arity_ = vectors_[i].arity();
    if (vectors_[i].arity() != arity_)
      throw Error(ErrorCode::ArityMismatch, "vector for " + ids_[i] + " has arity " +
                                                std::to_string(vectors_[i].arity()) + ", expected " +
                                                std::to_string(arity_));
    if (!index_.emplace(ids_[i], i).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate embedding id " + ids_[i]);
  }
}

const Vector& AxiomEmbedding::at(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::MissingAxiom, "no vector for " + std::string(id));
  return vectors_[it->second];
}

void AxiomEmbedding::require_complete(const Ontology& onto) const {
  for (const auto& a : onto.axioms())
    if (!index_.count(a.id)) throw Error(ErrorCode::MissingAxiom, "no vector for " + a.id);
}

// ---------------------------------------------------------------------------
// Hash embedder

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t token_hash(std::string_view token, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ splitmix64(seed);
  for (unsigned char c : token) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(h);
}

}  // namespace

AxiomEmbedding hash_embed(std::span<const Sentence> sentences, std::size_t dim,
                          std::uint64_t seed) {
  if (dim < 8) throw Error(ErrorCode::InvalidArgument, "hash embedding dimension must be >= 8");
  std::vector<std::string> ids;
  std::vector<Vector> vectors;
  for (const auto& s : sentences) {
    std::string lowered;
    for (char c : s.text) lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    std::istringstream tokens(lowered);
    std::vector<double> v(dim, 0.0);
    std::size_t count = 0;
    for (std::string tok; tokens >> tok; ++count) {
      std::uint64_t h = token_hash(tok, seed);
      v[h % dim] += (h >> 63) ? -1.0 : 1.0;
    }
    if (count == 0) throw Error(ErrorCode::EmptySentence, "sentence " + s.id + " has no tokens");
    double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    // colliding opposite signs can cancel every bucket
    if (norm > 0)
      for (double& x : v) x /= norm;
    ids.push_back(s.id);
    vectors.emplace_back(std::move(v));
  }
  return AxiomEmbedding("hash", std::move(ids), std::move(vectors));
}

// ---------------------------------------------------------------------------
// TransE

double TransEModel::distance(const std::string& subject, const std::string& relation,
                             const std::string& object) const {
  const Vector& s = entities.at(subject);
  const Vector& r = relations.at(relation);
  const Vector& o = entities.at(object);
  double sum = 0;
  for (std::size_t i = 0; i < s.arity(); ++i) {
    double d = s[i] + r[i] - o[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

namespace {

using Row = std::vector<double>;

void normalize(Row& v) {
  double n = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
  if (n > 0)
    for (double& x : v) x /= n;
}

// s + r - o, and its L2 norm
double residual(const Row& s, const Row& r, const Row& o, Row& out) {
  double sum = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[i] = s[i] + r[i] - o[i];
    sum += out[i] * out[i];
  }
  return std::sqrt(sum);
}

}  // namespace

TransEResult train_transe(std::span<const AxiomTriple> triples, const TransEConfig& config) {
  if (config.dimension == 0 || config.epochs == 0 || config.learning_rate <= 0 ||
      config.margin <= 0 || config.negatives == 0)
    throw Error(ErrorCode::InvalidArgument, "TransE hyperparameters must be positive");

  std::vector<std::string> entity_names, relation_names;
  std::map<std::string, std::size_t> entity_index, relation_index;
  auto intern = [](std::vector<std::string>& names, std::map<std::string, std::size_t>& index,
                   const std::string& name) {
    auto [it, inserted] = index.emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  };
  struct Encoded {
    std::size_t s, r, o;
  };
  std::vector<Encoded> training;
  for (const auto& at : triples) {
    if (!at.triple) continue;
    std::size_t s = intern(entity_names, entity_index, at.triple->subject);
    std::size_t r = intern(relation_names, relation_index, at.triple->relation);
    std::size_t o = intern(entity_names, entity_index, at.triple->object);
    training.push_back({s, r, o});
  }
  if (training.empty()) throw Error(ErrorCode::NoTriples, "no axiom has a triple form");

  const std::size_t d = config.dimension;
  std::mt19937_64 rng(config.seed);
  const double bound = 6.0 / std::sqrt(static_cast<double>(d));
  std::uniform_real_distribution<double> init(-bound, bound);
  std::vector<Row> E(entity_names.size(), Row(d)), R(relation_names.size(), Row(d));
  for (auto& row : R) {
    for (double& x : row) x = init(rng);
    normalize(row);
  }
  for (auto& row : E) {
    for (double& x : row) x = init(rng);
    normalize(row);
  }

  TransEResult result;
  std::vector<std::size_t> order(training.size());
  std::iota(order.begin(), order.end(), 0);
  std::uniform_int_distribution<std::size_t> pick_entity(0, E.size() - 1);
  std::bernoulli_distribution corrupt_head(0.5);
  Row pos(d), neg(d);
  const double lr = config.learning_rate;

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    double total = 0;
    for (std::size_t idx : order) {
      const Encoded& t = training[idx];
      for (std::size_t k = 0; k < config.negatives; ++k) {
        std::size_t cs = t.s, co = t.o;
        bool head = corrupt_head(rng);
        if (E.size() > 1) {
          std::size_t& slot = head ? cs : co;
          std::size_t original = slot;
          do slot = pick_entity(rng);
          while (slot == original);
        }
        double dp = residual(E[t.s], R[t.r], E[t.o], pos);
        double dn = residual(E[cs], R[t.r], E[co], neg);
        double loss = config.margin + dp - dn;
        if (loss <= 0) continue;
        total += loss;
        // d||x||/dx = x / ||x||
        for (std::size_t i = 0; i < d; ++i) {
          double gp = dp > 1e-12 ? pos[i] / dp : 0.0;
          double gn = dn > 1e-12 ? neg[i] / dn : 0.0;
          E[t.s][i] -= lr * gp;
          E[t.o][i] += lr * gp;
          R[t.r][i] -= lr * (gp - gn);
          E[cs][i] += lr * gn;
          E[co][i] -= lr * gn;
        }
        normalize(E[t.s]);
        normalize(E[t.o]);
        normalize(E[cs]);
        normalize(E[co]);
      }
    }
    result.epoch_losses.push_back(total / static_cast<double>(training.size() * config.negatives));
  }

  for (std::size_t i = 0; i < E.size(); ++i) result.model.entities.emplace(entity_names[i], Vector(E[i]));
  for (std::size_t i = 0; i < R.size(); ++i)
    result.model.relations.emplace(relation_names[i], Vector(R[i]));

  std::vector<std::string> ids;
  std::vector<Vector> vectors;
  std::vector<bool> placeholder;
  for (const auto& at : triples) {
    ids.push_back(at.id);
    if (!at.triple) {
      vectors.push_back(Vector::zeros(3 * d));
      placeholder.push_back(true);
      continue;
    }
    std::vector<double> v;
    v.reserve(3 * d);
    const Row& s = E[entity_index.at(at.triple->subject)];
    const Row& r = R[relation_index.at(at.triple->relation)];
    const Row& o = E[entity_index.at(at.triple->object)];
    v.insert(v.end(), s.begin(), s.end());
    v.insert(v.end(), r.begin(), r.end());
    v.insert(v.end(), o.begin(), o.end());
    vectors.emplace_back(std::move(v));
    placeholder.push_back(false);
  }
  bool any_placeholder = std::find(placeholder.begin(), placeholder.end(), true) != placeholder.end();
  result.embedding = AxiomEmbedding(any_placeholder ? "transe+placeholder" : "transe",
                                    std::move(ids), std::move(vectors), std::move(placeholder));
  return result;
}

// ---------------------------------------------------------------------------
// Import

AxiomEmbedding import_vectors(std::istream& in, const Ontology& onto, const std::string& backend) {
  std::map<std::string, Vector> by_id;
  std::string line;
  std::size_t lineno = 0;
  std::size_t arity = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }))
      continue;
    auto malformed = [&](const std::string& why) {
      return Error(ErrorCode::MalformedRecord,
                   "malformed vector record at line " + std::to_string(lineno) + ": " + why);
    };
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw malformed(e.what());
    }
    if (!rec.is_object() || !rec.contains("id") || !rec["id"].is_string() ||
        !rec.contains("vector") || !rec["vector"].is_array())
      throw malformed("expected {\"id\": string, \"vector\": [numbers]}");
    std::vector<double> values;
    for (const auto& x : rec["vector"]) {
      if (!x.is_number()) throw malformed("non-numeric component");
      double v = x.get<double>();
      if (!std::isfinite(v)) throw malformed("non-finite component");
      values.push_back(v);
    }
    if (values.empty()) throw malformed("empty vector");
    if (arity == 0) arity = values.size();
    if (values.size() != arity)
      throw Error(ErrorCode::ArityMismatch, "line " + std::to_string(lineno) + " has arity " +
                                                std::to_string(values.size()) + ", expected " +
                                                std::to_string(arity));
    std::string id = rec["id"].get<std::string>();
    if (by_id.count(id)) throw malformed("duplicate id " + id);
    by_id.emplace(std::move(id), Vector(std::move(values)));
  }
  std::vector<std::string> ids;
  std::vector<Vector> vectors;
  for (const auto& a : onto.axioms()) {
    auto it = by_id.find(a.id);
    if (it == by_id.end()) throw Error(ErrorCode::MissingAxiom, "no vector for axiom " + a.id);
    ids.push_back(a.id);
    vectors.push_back(it->second);
  }
  return AxiomEmbedding(backend, std::move(ids), std::move(vectors));
}

// ---------------------------------------------------------------------------
// Similarity

const char* to_string(Metric m) { return m == Metric::Cos ? "cos" : "euc"; }

Metric parse_metric(std::string_view s) {
  if (s == "cos") return Metric::Cos;
  if (s == "euc") return Metric::Euc;
  throw Error(ErrorCode::InvalidArgument, "unknown metric " + std::string(s));
}

double sim_cos(const Vector& a, const Vector& b) {
  if (a.arity() != b.arity()) throw Error(ErrorCode::ArityMismatch, "vectors differ in arity");
  double na = a.norm(), nb = b.norm();
  if (na == 0 || nb == 0) throw Error(ErrorCode::ZeroVector, "cosine of a zero vector");
  double dot = 0;
  for (std::size_t i = 0; i < a.arity(); ++i) dot += a[i] * b[i];
  double cos = std::clamp(dot / (na * nb), -1.0, 1.0);
  return 0.5 * (1.0 + cos);
}

double sim_euc(const Vector& a, const Vector& b) {
  if (a.arity() != b.arity()) throw Error(ErrorCode::ArityMismatch, "vectors differ in arity");
  double sum = 0;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    double d = a[i] - b[i];
    sum += d * d;
  }
  return 1.0 / (1.0 + std::sqrt(std::sqrt(sum)));
}

SimilarityMatrix::SimilarityMatrix(std::vector<std::string> ids, std::vector<double> values)
    : ids_(std::move(ids)), values_(std::move(values)) {
  const std::size_t n = ids_.size();
  if (values_.size() != n * n) throw Error(ErrorCode::InvalidArgument, "matrix must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(ids_[i], i).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate id " + ids_[i]);
    for (std::size_t j = 0; j < n; ++j) {
      double v = values_[i * n + j];
      if (!(v >= 0.0 && v <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "similarity outside [0,1]");
      if (v != values_[j * n + i]) throw Error(ErrorCode::InvalidArgument, "matrix not symmetric");
    }
    if (values_[i * n + i] != 1.0) throw Error(ErrorCode::InvalidArgument, "diagonal must be 1");
  }
}

SimilarityMatrix SimilarityMatrix::constant(std::vector<std::string> ids, double off_diagonal) {
  const std::size_t n = ids.size();
  std::vector<double> values(n * n, off_diagonal);
  for (std::size_t i = 0; i < n; ++i) values[i * n + i] = 1.0;
  return SimilarityMatrix(std::move(ids), std::move(values));
}

std::size_t SimilarityMatrix::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::UnknownAxiom, "no similarity row for " + std::string(id));
  return it->second;
}

double SimilarityMatrix::at(std::string_view a, std::string_view b) const {
  return (*this)(index_of(a), index_of(b));
}

SimilarityMatrix similarity_matrix(const AxiomEmbedding& emb, Metric metric) {
  const std::size_t n = emb.size();
  std::vector<double> values(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& a = emb.vector(i);
      const Vector& b = emb.vector(j);
      double s;
      if (metric == Metric::Cos) s = (a.is_zero() || b.is_zero()) ? 0.5 : sim_cos(a, b);
      else s = sim_euc(a, b);
      values[i * n + j] = values[j * n + i] = s;
    }
  }
  return SimilarityMatrix(emb.ids(), std::move(values));
}

}  // namespace mcsreason
