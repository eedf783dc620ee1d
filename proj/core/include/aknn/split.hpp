#pragma once

#include <cstdint>

#include "aknn/types.hpp"

namespace aknn {

struct SplitSpec {
  double train_fraction = 0.7;
  std::uint64_t seed = 0;
  bool stratified = false;
};

struct SplitResult {
  Dataset train;
  Dataset test;
};

/// Disjoint seeded partition of a fully labeled dataset. Train size is
/// round(train_fraction * n); the same seed reproduces the identical split.
/// Stratified mode keeps per-class proportions to within one instance per
/// class. Instances keep their original relative order within each side.
SplitResult split(const Dataset& d, const SplitSpec& spec);

}  // namespace aknn
