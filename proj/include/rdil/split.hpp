#pragma once

#include <cstdint>
#include <vector>

#include "rdil/dataset.hpp"

namespace rdil {

struct SplitResult {
  Dataset train;
  Dataset test;
  std::vector<int> train_ids;  // original ids, ascending
  std::vector<int> test_ids;
};

// Per class c with n_c members the train side receives round-half-up of
// fraction*n_c, chosen by seeded shuffle; a singleton class always goes to
// train. Deterministic per seed.
SplitResult stratified_split(const Dataset& d, double train_fraction, std::uint64_t seed);

struct Fold {
  std::vector<int> train_ids;
  std::vector<int> test_ids;
};

// k disjoint test folds covering all ids; per-class counts across folds differ
// by at most one.
std::vector<Fold> stratified_kfold(const Dataset& d, int k, std::uint64_t seed);

}  // namespace rdil
