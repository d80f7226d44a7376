#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rdil/rng.hpp"

namespace rdil {

// One-hidden-layer sigmoid network with a packed parameter view. Kept separate
// from the Model wrapper so the weighted backprop gradient can be checked
// against finite differences of the loss.
struct MlpNetwork {
  int inputs = 0;
  int hidden = 0;
  int outputs = 0;
  std::vector<double> w1;  // hidden x inputs, row-major
  std::vector<double> b1;  // hidden
  std::vector<double> w2;  // outputs x hidden, row-major
  std::vector<double> b2;  // outputs

  static MlpNetwork init(int inputs, int hidden, int outputs, Rng& rng);

  void forward(std::span<const double> x, std::vector<double>& hidden_act,
               std::vector<double>& output_act) const;
  std::vector<double> output(std::span<const double> x) const;

  // Loss for one instance: w * 0.5 * ||target - output||^2.
  double loss(std::span<const double> x, std::span<const double> target, double w) const;

  // Gradient of the weighted per-instance loss with respect to the packed
  // parameters [w1, b1, w2, b2].
  std::vector<double> gradient(std::span<const double> x, std::span<const double> target,
                               double w) const;

  std::size_t parameter_count() const { return w1.size() + b1.size() + w2.size() + b2.size(); }
  double& parameter(std::size_t i);
  double parameter(std::size_t i) const;
};

}  // namespace rdil
