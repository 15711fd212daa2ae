#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mcsreason/ontology.hpp"
#include "mcsreason/verbalize.hpp"

namespace mcsreason {

// Fixed-arity real vector; arity >= 1 and every component finite.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<double> values);

  std::size_t arity() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double norm() const;
  bool is_zero() const;

  static Vector zeros(std::size_t arity);

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> values_;
};

// One vector per axiom, aligned with the ontology's axiom order.
class AxiomEmbedding {
 public:
  AxiomEmbedding() = default;
  AxiomEmbedding(std::string backend, std::vector<std::string> ids, std::vector<Vector> vectors,
                 std::vector<bool> placeholder = {});

  const std::string& backend() const { return backend_; }
  std::size_t arity() const { return arity_; }
  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const Vector& vector(std::size_t i) const { return vectors_.at(i); }
  const Vector& at(std::string_view id) const;
  // True for axioms that received a zero placeholder (no triple form).
  bool is_placeholder(std::size_t i) const { return placeholder_.at(i); }

  // Throws MissingAxiom unless every axiom of `onto` has a vector.
  void require_complete(const Ontology& onto) const;

 private:
  std::string backend_;
  std::vector<std::string> ids_;
  std::vector<Vector> vectors_;
  std::vector<bool> placeholder_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::size_t arity_ = 0;
};

// Seeded signed feature hashing of lowercased whitespace tokens, L2
// normalised. dim >= 8.
AxiomEmbedding hash_embed(std::span<const Sentence> sentences, std::size_t dim,
                          std::uint64_t seed);

struct TransEConfig {
  std::size_t dimension = 50;
  std::size_t epochs = 200;
  double learning_rate = 0.01;
  double margin = 1.0;
  std::size_t negatives = 1;
  std::uint64_t seed = 0;
};

struct TransEModel {
  std::map<std::string, Vector> entities;
  std::map<std::string, Vector> relations;

  // ||s + r - o||_2
  double distance(const std::string& subject, const std::string& relation,
                  const std::string& object) const;
};

struct TransEResult {
  AxiomEmbedding embedding;
  TransEModel model;
  std::vector<double> epoch_losses;  // mean margin loss per epoch
};

// Margin-ranking TransE by SGD with uniform head/tail corruption. Each axiom
// vector is subject ++ relation ++ object; axioms without a triple get a
// zero placeholder of the same arity.
TransEResult train_transe(std::span<const AxiomTriple> triples, const TransEConfig& config);

// Vectors JSONL: {"id": string, "vector": [numbers]} per line.
AxiomEmbedding import_vectors(std::istream& in, const Ontology& onto,
                              const std::string& backend = "import");

enum class Metric { Cos, Euc };

const char* to_string(Metric m);
Metric parse_metric(std::string_view s);

// (1 + cos angle) / 2
double sim_cos(const Vector& a, const Vector& b);
// 1 / (1 + sqrt(||a - b||))
double sim_euc(const Vector& a, const Vector& b);

// Symmetric axiom-by-axiom similarity with unit diagonal, indexed like the
// embedding.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(std::vector<std::string> ids, std::vector<double> values);

  static SimilarityMatrix constant(std::vector<std::string> ids, double off_diagonal);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * ids_.size() + j]; }
  double at(std::string_view a, std::string_view b) const;
  std::size_t index_of(std::string_view id) const;

 private:
  std::vector<std::string> ids_;
  std::vector<double> values_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// Pairs involving a zero vector under the cosine metric get 0.5.
SimilarityMatrix similarity_matrix(const AxiomEmbedding& emb, Metric metric);

}  // namespace mcsreason
