#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rdil/dataset.hpp"
#include "rdil/preprocess.hpp"
#include "rdil/weights.hpp"

namespace rdil {

enum class LearnerKind { Mlp, TreeC45, Knn5, RandomForest, Ripper, NaiveBayes };

constexpr int kLearnerKindCount = 6;

const char* to_string(LearnerKind kind);
LearnerKind learner_kind_from_string(const std::string& name);

struct MlpParams {
  int hidden_units = 0;  // 0: max(2, ceil((F + Y) / 2))
  int epochs = 500;
  double learning_rate = 0.3;
  double momentum = 0.2;
  bool operator==(const MlpParams&) const = default;
};

struct TreeParams {
  double min_leaf_weight = 2.0;
  double pruning_confidence = 0.25;
  bool prune = true;
  bool operator==(const TreeParams&) const = default;
};

struct KnnParams {
  int k = 5;
  bool operator==(const KnnParams&) const = default;
};

struct ForestParams {
  int tree_count = 50;
  int candidate_attributes = 0;  // 0: ceil(sqrt(F))
  bool operator==(const ForestParams&) const = default;
};

struct RipperParams {
  double grow_fraction = 2.0 / 3.0;
  bool operator==(const RipperParams&) const = default;
};

struct LearnerSpec {
  LearnerKind kind = LearnerKind::NaiveBayes;
  std::uint64_t seed = 0;
  MlpParams mlp;
  TreeParams tree;
  KnnParams knn;
  ForestParams forest;
  RipperParams ripper;

  void validate() const;  // throws DataError on bad hyperparameters
  std::string name() const { return to_string(kind); }

  // Identity for ensemble duplicate checks: kind plus the hyperparameters the
  // kind actually consumes. Seeds are excluded.
  bool same_configuration(const LearnerSpec& other) const;
};

LearnerSpec default_spec(LearnerKind kind, std::uint64_t seed = 0);

// A trained hypothesis. Prediction is the argmax of the per-class scores with
// ties broken toward the lowest class index; the score definition is
// kind-specific (leaf purity, neighbor agreement mass, normalized network
// outputs, rule coverage purity, class posterior).
class Model {
public:
  virtual ~Model() = default;

  int predict(std::span<const double> x) const;
  std::vector<double> scores(std::span<const double> x) const;
  double score(std::span<const double> x, int label) const;

  const Schema& schema() const { return schema_; }
  const LearnerSpec& spec() const { return spec_; }
  int class_count() const { return schema_.class_count(); }

  // Hash of (spec, training set shape and labels, weights); provenance only.
  std::uint64_t training_fingerprint() const { return fingerprint_; }

  // Versioned self-describing text form; load restores an equivalent model.
  void save(std::ostream& out) const;
  static std::unique_ptr<Model> load(std::istream& in);

protected:
  Model(LearnerSpec spec, Schema schema, Preprocessor prep, std::uint64_t fingerprint)
      : spec_(std::move(spec)),
        schema_(std::move(schema)),
        prep_(std::move(prep)),
        fingerprint_(fingerprint) {}

  virtual std::vector<double> scores_impl(std::span<const double> x) const = 0;

  // Throws DataError unless x matches the schema arity and nominal ranges.
  void check_conforms(std::span<const double> x) const;

  LearnerSpec spec_;
  Schema schema_;
  Preprocessor prep_;
  std::uint64_t fingerprint_ = 0;

  friend struct ModelIo;
};

// Weighted training per the kind-specific integration: gradient scaling (mlp),
// weighted counts (tree/ripper/naive bayes), vote mass (knn), bootstrap
// sampling distribution (random forest).
std::unique_ptr<Model> train(const LearnerSpec& spec, const Dataset& d, const WeightVector& w);

// Unweighted path.
std::unique_ptr<Model> train(const LearnerSpec& spec, const Dataset& d);

int argmax_lowest(std::span<const double> scores);

}  // namespace rdil
