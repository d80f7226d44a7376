#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "rdil/dataset.hpp"
#include "rdil/weights.hpp"

namespace rdil {

struct PwemOptions {
  int restarts = 5;
  int max_iterations = 200;
  double rel_tolerance = 1e-6;
  int max_clusters = 10;
};

// Mixture component over the feature space: diagonal Gaussian per numeric
// attribute, independent categorical per nominal attribute.
struct MixtureComponent {
  double mixing = 1.0;
  std::vector<double> means;                      // per feature; unused for nominal
  std::vector<double> variances;                  // per feature; unused for nominal
  std::vector<std::vector<double>> categoricals;  // per feature; empty for numeric
};

struct EmModel {
  std::vector<AttributeKind> kinds;
  std::vector<MixtureComponent> components;

  int k() const { return static_cast<int>(components.size()); }
  // Posterior p(c | x) over components; x must be imputed.
  std::vector<double> responsibilities(std::span<const double> x) const;
  double log_likelihood_of(std::span<const double> x) const;
  std::size_t free_parameters() const;
};

struct EmFit {
  EmModel model;
  double log_likelihood = 0.0;
  double bic = 0.0;
  std::vector<double> ll_trace;  // per accepted iteration
  bool converged = false;
};

// Best of `restarts` seeded runs of EM with k components on the dataset's
// (imputed) feature rows. Labels are ignored.
EmFit em_fit(const Dataset& points, int k, std::uint64_t seed, const PwemOptions& opts = {});

// k in k_range minimizing BIC = -2 log L + params ln N; ties go to the
// smaller k. Throws DegenerateError when every k fails to fit.
int select_k_bic(const Dataset& points, const std::vector<int>& k_range, std::uint64_t seed,
                 const PwemOptions& opts = {});

// Per-class-pair clustering: EM on the instances of the two classes (labels
// hidden), k selected by BIC, plus the per-cluster label distribution.
struct ClusteringModel {
  int class_a = 0;
  int class_b = 0;
  EmModel em;
  std::vector<std::array<double, 2>> label_given_cluster;  // [cluster][{a,b}]
  bool fallback = false;  // subset too small for BIC selection
  std::map<int, double> bic_by_k;

  std::vector<double> responsibilities(std::span<const double> imputed_x) const {
    return em.responsibilities(imputed_x);
  }
};

ClusteringModel fit_pair(const Dataset& d, int class_a, int class_b, std::uint64_t seed,
                         const PwemOptions& opts = {});

// PWEM weights: for instance i, the mean over the Y-1 pair models containing
// its label of  sum_c p(label_i | c, theta) p(c | x_i, theta), clamped to [0,1].
WeightVector pwem_weights(const Dataset& d, std::uint64_t seed, const PwemOptions& opts = {},
                          int threads = 1);

}  // namespace rdil
