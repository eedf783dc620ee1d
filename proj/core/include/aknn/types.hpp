#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace aknn {

/// Ordered, unitless feature values of one observation.
using FeatureVector = std::vector<double>;

/// Class label. Comparison is exact byte equality, no case folding.
using Label = std::string;

/// Reserved truth token marking injected open-set instances in CSV files.
/// load_csv keeps it as an ordinary label unless the caller opts in to
/// reserved handling.
inline constexpr const char* kUnknownLabel = "unknown";

struct Instance {
  FeatureVector features;
  std::optional<Label> label;
};

/// Ordered instance collection with a fixed feature dimensionality.
struct Dataset {
  std::vector<Instance> instances;
  std::size_t dim = 0;

  std::size_t size() const { return instances.size(); }
  bool fully_labeled() const;

  /// Distinct labels present, sorted ascending. Unlabeled instances are
  /// skipped.
  std::vector<Label> label_alphabet() const;
};

/// Checks every Dataset invariant: non-empty, per-instance feature length
/// equals dim, all features finite. Throws Error on the first violation.
void validate_dataset(const Dataset& d);

}  // namespace aknn
