#pragma once

#include <cstdint>
#include <map>

#include "rdil/dataset.hpp"

namespace rdil {

// Ground truth of which labels a noise injection flipped.
struct CorruptionRecord {
  struct Flip {
    int original_label = 0;
    int injected_label = 0;
  };
  std::map<int, Flip> flipped;  // instance id -> flip
  double rate = 0.0;
  std::uint64_t seed = 0;
};

struct NoiseResult {
  Dataset noisy;
  CorruptionRecord record;
};

// Flips round-half-up(rate*N) labels, chosen uniformly without replacement;
// each new label is drawn uniformly from the other Y-1 classes. rate 0 is the
// identity.
NoiseResult inject_noise(const Dataset& d, double rate, std::uint64_t seed);

// Restores the original labels recorded by inject_noise.
Dataset undo_noise(const Dataset& noisy, const CorruptionRecord& record);

}  // namespace rdil
