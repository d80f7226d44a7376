#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "rdil/dataset.hpp"
#include "rdil/learner.hpp"
#include "rdil/weights.hpp"

namespace rdil {

enum class Voting { Delta, Score };

const char* to_string(Voting v);
Voting voting_from_string(const std::string& name);

struct EnsembleSpec {
  std::vector<LearnerSpec> members;
  int folds = 10;
  std::uint64_t seed = 0;

  void validate() const;  // non-empty, duplicate-free by configuration, folds >= 2
};

// All six learner kinds with default hyperparameters.
EnsembleSpec default_ensemble(std::uint64_t seed, int folds = 10);

// Per-instance estimate of p(label | features): the mean over ensemble members
// of each member's cross-validated vote on the instance's given label.
struct DetrimentalityEstimate {
  WeightVector weights;
  std::vector<std::vector<double>> votes;  // [instance][member]
  std::vector<std::string> member_names;
  Voting voting = Voting::Delta;
  std::vector<int> fold_of;  // CV fold whose held-out part contained each instance
};

// Member j's vote on instance i comes from a hypothesis trained with i held
// out: folds are stratified_kfold(d, spec.folds, spec.seed), shared across
// members, and member j's model for fold f is trained with seed
// mix_seed(spec.seed, {j, f}). Delta voting contributes 1 when the held-out
// prediction matches the given label, 0 otherwise; score voting contributes
// the member's classifier score for the given label.
DetrimentalityEstimate estimate_ensemble(const Dataset& d, const EnsembleSpec& spec,
                                         Voting voting, int threads = 1);

// Singleton-ensemble estimate from the learner that will consume the weights.
DetrimentalityEstimate estimate_biased(const Dataset& d, const LearnerSpec& learner, int folds,
                                       Voting voting);

struct RdilEstimator {
  bool biased = false;
  EnsembleSpec ensemble;  // used when !biased
  int folds = 10;         // used when biased
};

struct RdilResult {
  std::unique_ptr<Model> model;
  DetrimentalityEstimate estimate;
};

// Two passes: estimate detrimentality weights, then train the target learner
// with them.
RdilResult rdil_train(const Dataset& d, const LearnerSpec& target, const RdilEstimator& estimator,
                      Voting voting, int threads = 1);

void write_estimate_csv(std::ostream& out, const DetrimentalityEstimate& est);
DetrimentalityEstimate read_estimate_csv(std::istream& in);

WeightVector read_weights_csv(std::istream& in);

}  // namespace rdil
