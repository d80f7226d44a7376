#pragma once

#include <cstddef>
#include <vector>

#include "rdil/dataset.hpp"

namespace rdil {

// Per-instance detrimentality weight in [0,1], aligned by position with a
// dataset. uniform(n) is the canonical "no weighting" element.
class WeightVector {
public:
  WeightVector() = default;
  explicit WeightVector(std::vector<double> values);  // validates range

  static WeightVector uniform(std::size_t n, double value = 1.0);

  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  const std::vector<double>& values() const { return w_; }

  double total() const;
  void validate_for(const Dataset& d) const;

  bool operator==(const WeightVector&) const = default;

private:
  std::vector<double> w_;
};

}  // namespace rdil
