#pragma once

#include <cstdint>

#include "aknn/aknn.hpp"

namespace aknn {

struct UnknownGenSpec {
  std::size_t count = 20;
  std::uint64_t seed = 0;
  double near_factor = 2.0;
  double far_factor = 5.0;
  std::size_t max_attempts_per_point = 10000;
};

/// Synthesizes open-set test points far from every training class.
///
/// Let bound = near_factor * max class area of `model`. Points are rejection
/// sampled in an annulus around the training centroid (uniform direction,
/// radius uniform in [near_factor, far_factor] * max area) until each kept
/// point lies strictly farther than `bound` from every training instance and
/// the model classifies it Unknown. Seed-deterministic; emitted points carry
/// the reserved "unknown" label.
///
/// Throws GenerationFailed when every class area is zero or the attempt
/// budget runs out (too-tight geometry; raise far_factor).
Dataset generate_unknowns(const Dataset& train, const AknnModel& model,
                          const UnknownGenSpec& spec);

}  // namespace aknn
