#include "aknn/scaling.hpp"

#include <string>

#include "aknn/error.hpp"

namespace aknn {

MinMaxScaler MinMaxScaler::fit(const Dataset& d) {
  validate_dataset(d);
  MinMaxScaler s;
  s.mins_ = d.instances.front().features;
  s.maxs_ = d.instances.front().features;
  for (const auto& instance : d.instances) {
    for (std::size_t j = 0; j < d.dim; ++j) {
      s.mins_[j] = std::min(s.mins_[j], instance.features[j]);
      s.maxs_[j] = std::max(s.maxs_[j], instance.features[j]);
    }
  }
  return s;
}

FeatureVector MinMaxScaler::transform(const FeatureVector& v) const {
  if (v.size() != mins_.size()) {
    raise(ErrorCode::DimensionMismatch,
          "vector has " + std::to_string(v.size()) +
              " features, scaler expects " + std::to_string(mins_.size()));
  }
  FeatureVector out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double range = maxs_[j] - mins_[j];
    out[j] = range == 0.0 ? 0.0 : (v[j] - mins_[j]) / range;
  }
  return out;
}

Dataset MinMaxScaler::transform(const Dataset& d) const {
  Dataset out;
  out.dim = d.dim;
  out.instances.reserve(d.size());
  for (const auto& instance : d.instances) {
    out.instances.push_back({transform(instance.features), instance.label});
  }
  return out;
}

}  // namespace aknn
