#include "aknn/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "aknn/error.hpp"

namespace aknn {

bool Dataset::fully_labeled() const {
  return std::all_of(instances.begin(), instances.end(),
                     [](const Instance& i) { return i.label.has_value(); });
}

std::vector<Label> Dataset::label_alphabet() const {
  std::set<Label> seen;
  for (const auto& instance : instances) {
    if (instance.label) {
      seen.insert(*instance.label);
    }
  }
  return {seen.begin(), seen.end()};
}

void validate_dataset(const Dataset& d) {
  if (d.instances.empty()) {
    raise(ErrorCode::EmptyDataset, "dataset has no instances");
  }
  if (d.dim == 0) {
    raise(ErrorCode::DimensionMismatch, "dataset dim must be positive");
  }
  for (std::size_t i = 0; i < d.instances.size(); ++i) {
    const auto& features = d.instances[i].features;
    if (features.size() != d.dim) {
      raise(ErrorCode::DimensionMismatch,
            "instance " + std::to_string(i) + " has " +
                std::to_string(features.size()) + " features, expected " +
                std::to_string(d.dim));
    }
    for (std::size_t j = 0; j < features.size(); ++j) {
      if (!std::isfinite(features[j])) {
        raise(ErrorCode::NonFiniteFeature,
              "instance " + std::to_string(i) + ", feature " +
                  std::to_string(j) + " is not finite");
      }
    }
    if (d.instances[i].label && d.instances[i].label->empty()) {
      raise(ErrorCode::InvalidArgument,
            "instance " + std::to_string(i) + " has an empty label token");
    }
  }
}

}  // namespace aknn
