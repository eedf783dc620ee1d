#pragma once

#include "aknn/metric.hpp"
#include "aknn/types.hpp"

namespace aknn {

struct HyperParams {
  std::size_t k = 1;
  DistanceMetric metric = DistanceMetric::euclidean();
  double gc = 1.5;  // gap constant; unused by plain kNN
};

/// One entry of a nearest-neighbor query result.
struct Neighbor {
  std::size_t index;  // position in the fitted training set
  double distance;
  Label label;
};

/// Majority label among already-ranked neighbors. A frequency tie goes to
/// the label of the nearest neighbor within the tied set.
Label majority_label(const std::vector<Neighbor>& neighbors);

/// Exhaustive-scan k-nearest-neighbor classifier. Fitting stores the
/// training set verbatim; the data is the model. Immutable after fit and
/// safe to query from multiple threads.
class KnnModel {
 public:
  /// Validates the dataset, requires every instance labeled and
  /// k <= instance count.
  static KnnModel fit(Dataset training, HyperParams params);

  /// The k nearest training entries, ascending by distance. Equal distances
  /// rank by smaller training-set index.
  std::vector<Neighbor> neighbors(const FeatureVector& query) const;

  /// Majority label of the k nearest neighbors.
  Label classify(const FeatureVector& query) const;

  const Dataset& training() const { return training_; }
  const HyperParams& params() const { return params_; }
  std::size_t dim() const { return training_.dim; }
  std::size_t k() const { return params_.k; }

 private:
  KnnModel(Dataset training, HyperParams params);

  Dataset training_;
  HyperParams params_;
};

}  // namespace aknn
