#pragma once

#include <span>
#include <vector>

#include "rdil/dataset.hpp"
#include "rdil/weights.hpp"

namespace rdil {

// Per-training-set feature statistics, fitted once and reused at prediction
// time: weighted mean (numeric) / weighted mode (nominal) for imputing missing
// cells, and min/range for [0,1] scaling of numerics. Instances with zero
// weight do not contribute, so fitting on a filtered subset and fitting on the
// full set with 0/1 weights agree exactly.
struct Preprocessor {
  struct AttributeStats {
    AttributeKind kind = AttributeKind::Numeric;
    double impute = 0.0;  // mean, or mode index for nominal
    double min = 0.0;
    double range = 1.0;  // max - min, floored at a tiny positive value
  };

  std::vector<AttributeStats> stats;

  static Preprocessor fit(const Dataset& d, const WeightVector& w);

  // Missing cells replaced, raw scale.
  std::vector<double> imputed(std::span<const double> x) const;
  // Missing cells replaced and numerics scaled to [0,1] over the training range.
  std::vector<double> normalized(std::span<const double> x) const;

  bool operator==(const Preprocessor&) const = default;
};

// HEOM on preprocessed vectors: plain difference on (already range-scaled)
// numerics, 0/1 overlap on nominal indices.
double heom_distance(const std::vector<AttributeKind>& kinds, std::span<const double> a,
                     std::span<const double> b);

std::vector<AttributeKind> feature_kinds(const Schema& schema);

}  // namespace rdil
