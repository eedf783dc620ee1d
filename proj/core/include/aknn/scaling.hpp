#pragma once

#include "aknn/types.hpp"

namespace aknn {

/// Per-column min-max scaler mapping training ranges onto [0, 1]. Columns
/// with zero range map to 0.
class MinMaxScaler {
 public:
  static MinMaxScaler fit(const Dataset& d);

  FeatureVector transform(const FeatureVector& v) const;
  Dataset transform(const Dataset& d) const;

  const std::vector<double>& mins() const { return mins_; }
  const std::vector<double>& maxs() const { return maxs_; }

 private:
  std::vector<double> mins_;
  std::vector<double> maxs_;
};

}  // namespace aknn
