#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rdil/dataset.hpp"
#include "rdil/detrimentality.hpp"

namespace rdil {

// Binary noise handling: which instances survive, and why the rest were cut.
struct FilterResult {
  std::vector<int> retained_ids;  // ascending
  std::vector<int> removed_ids;   // ascending
  std::string method;
  int rounds = 0;  // renn only
  // Per removed id, the triggering evidence: misclassification vote fraction
  // for the ensemble/biased filters, removal round for renn.
  std::vector<double> evidence;
  // Set when the class-preservation guard had to intervene (a removal would
  // have emptied a class, or a renn pass was abandoned).
  bool degenerate_guard = false;
};

// Removes instance i when the fraction of members misclassifying it
// (1 - weights[i]) reaches the threshold. Requires a delta-voting estimate.
// When removal would empty a class, that class's highest-weight instance is
// kept and the result is flagged.
FilterResult ensemble_filter(const Dataset& d, const DetrimentalityEstimate& est,
                             double threshold = 0.5);

// Removes any instance misclassified under cross-validation by the learner
// that will consume the training set.
FilterResult biased_filter(const Dataset& d, const LearnerSpec& learner, int folds = 10);

// Repeated Wilson editing: each pass removes every instance misclassified by
// 3-NN (leave-one-out within the surviving set) until a pass removes nothing
// or would empty a class.
FilterResult renn(const Dataset& d);

void write_filter_csv(std::ostream& out, const FilterResult& result, std::size_t dataset_size);

}  // namespace rdil
