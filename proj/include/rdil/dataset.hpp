#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "rdil/error.hpp"

namespace rdil {

enum class AttributeKind { Numeric, Nominal };

struct Attribute {
  std::string name;
  AttributeKind kind = AttributeKind::Numeric;
  std::vector<std::string> values;  // nominal only

  bool is_numeric() const { return kind == AttributeKind::Numeric; }
  bool operator==(const Attribute&) const = default;
};

// Feature value storage: numeric attributes hold the measurement, nominal
// attributes hold the value-list index, missing cells hold NaN.
inline double missing_value() { return std::numeric_limits<double>::quiet_NaN(); }
inline bool is_missing(double v) { return std::isnan(v); }

struct Schema {
  std::string relation;  // dataset name, preserved across file round-trips
  std::vector<Attribute> features;
  Attribute class_attribute;

  std::size_t feature_count() const { return features.size(); }
  int class_count() const { return static_cast<int>(class_attribute.values.size()); }

  // Throws DataError when an invariant is broken (duplicate nominal values,
  // empty class value list, numeric class attribute).
  void validate() const;

  bool operator==(const Schema&) const = default;
};

struct Instance {
  int id = 0;
  std::vector<double> x;  // aligned with Schema::features
  int label = 0;
};

bool feature_vectors_equal(const std::vector<double>& a, const std::vector<double>& b);

inline bool operator==(const Instance& a, const Instance& b) {
  return a.id == b.id && a.label == b.label && feature_vectors_equal(a.x, b.x);
}

struct Dataset {
  Schema schema;
  std::vector<Instance> instances;

  std::size_t size() const { return instances.size(); }

  // Structural checks: schema validity, ids 0..N-1, feature arity, label and
  // nominal index ranges.
  void validate() const;
  // Additionally requires >= 2 instances and >= 2 distinct labels.
  void validate_for_training() const;

  // Instance count per class label.
  std::vector<int> label_counts() const;

  bool operator==(const Dataset&) const = default;
};

// New dataset holding the given instances (in the order of `ids`), renumbered 0..M-1.
Dataset subset(const Dataset& d, const std::vector<int>& ids);

}  // namespace rdil
