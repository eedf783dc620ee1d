#include "aknn/unknowns.hpp"

#include <string>

#include "aknn/error.hpp"
#include "aknn/rng.hpp"

namespace aknn {

Dataset generate_unknowns(const Dataset& train, const AknnModel& model,
                          const UnknownGenSpec& spec) {
  if (!(spec.near_factor > 1.0)) {
    raise(ErrorCode::InvalidArgument,
          "near_factor must exceed 1, got " + std::to_string(spec.near_factor));
  }
  if (!(spec.far_factor >= spec.near_factor)) {
    raise(ErrorCode::InvalidArgument, "far_factor must be >= near_factor");
  }

  Dataset out;
  out.dim = train.dim;
  if (spec.count == 0) {
    return out;
  }

  validate_dataset(train);
  if (train.dim != model.dim()) {
    raise(ErrorCode::DimensionMismatch,
          "training set dimension differs from the model's");
  }

  double max_area = 0.0;
  for (const auto& [label, region] : model.regions()) {
    max_area = std::max(max_area, region.area);
  }
  if (!(max_area > 0.0)) {
    raise(ErrorCode::GenerationFailed,
          "every class area is zero (all classes are single points or "
          "identical); no scale exists to place unknown instances at");
  }

  FeatureVector centroid(train.dim, 0.0);
  for (const auto& instance : train.instances) {
    for (std::size_t j = 0; j < train.dim; ++j) {
      centroid[j] += instance.features[j];
    }
  }
  for (double& c : centroid) {
    c /= static_cast<double>(train.size());
  }

  const DistanceMetric& metric = model.base().params().metric;
  const double bound = spec.near_factor * max_area;
  const double radius_lo = spec.near_factor * max_area;
  const double radius_hi = spec.far_factor * max_area;

  rng::Engine engine(spec.seed);
  out.instances.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    bool placed = false;
    for (std::size_t attempt = 0;
         attempt < spec.max_attempts_per_point && !placed; ++attempt) {
      const auto direction = rng::unit_direction(engine, train.dim);
      const double radius = rng::uniform(engine, radius_lo, radius_hi);
      FeatureVector candidate(train.dim);
      for (std::size_t j = 0; j < train.dim; ++j) {
        candidate[j] = centroid[j] + radius * direction[j];
      }

      bool far_enough = true;
      for (const auto& instance : train.instances) {
        if (distance(metric, candidate, instance.features) <= bound) {
          far_enough = false;
          break;
        }
      }
      // Self-check: the generating model itself must reject the point.
      if (far_enough && model.classify(candidate).is_unknown()) {
        out.instances.push_back({std::move(candidate), Label(kUnknownLabel)});
        placed = true;
      }
    }
    if (!placed) {
      raise(ErrorCode::GenerationFailed,
            "could not place unknown instance " + std::to_string(i + 1) +
                " of " + std::to_string(spec.count) + " within " +
                std::to_string(spec.max_attempts_per_point) +
                " attempts; the sampling annulus is too tight around the "
                "training data - raise far_factor");
    }
  }
  return out;
}

}  // namespace aknn
