#include "aknn/aknn.hpp"

#include <limits>
#include <string>
#include <utility>

#include "aknn/error.hpp"

namespace aknn {

std::optional<Label> Prediction::label() const {
  if (outcome == Outcome::Unknown) {
    return std::nullopt;
  }
  return expected_class;
}

const char* to_string(MinDistMode mode) {
  switch (mode) {
    case MinDistMode::GlobalMin:
      return "global-min";
    case MinDistMode::ExpectedClassMin:
      return "expected-class-min";
  }
  return "?";
}

double tca(std::span<const FeatureVector> class_instances,
           const DistanceMetric& metric) {
  if (class_instances.empty()) {
    raise(ErrorCode::EmptyClass, "cannot compute the diameter of an empty class");
  }
  double max_dist = 0.0;
  for (std::size_t i = 0; i < class_instances.size(); ++i) {
    for (std::size_t j = i + 1; j < class_instances.size(); ++j) {
      max_dist = std::max(
          max_dist, distance(metric, class_instances[i], class_instances[j]));
    }
  }
  return max_dist;
}

AknnModel::AknnModel(KnnModel base, std::map<Label, ClassRegion> regions,
                     double gc, MinDistMode mode,
                     std::vector<std::string> warnings)
    : base_(std::move(base)),
      regions_(std::move(regions)),
      gc_(gc),
      mode_(mode),
      warnings_(std::move(warnings)) {}

AknnModel AknnModel::fit(Dataset training, HyperParams params,
                         MinDistMode mode) {
  if (!(params.gc > 0.0)) {
    raise(ErrorCode::NonPositiveGc,
          "gap constant must be positive, got " + std::to_string(params.gc));
  }
  const double gc = params.gc;
  KnnModel base = KnnModel::fit(std::move(training), std::move(params));

  std::map<Label, std::vector<FeatureVector>> by_class;
  for (const auto& instance : base.training().instances) {
    by_class[*instance.label].push_back(instance.features);
  }

  std::map<Label, ClassRegion> regions;
  std::vector<std::string> warnings;
  for (const auto& [label, members] : by_class) {
    ClassRegion region;
    region.label = label;
    region.support = members.size();
    region.tca = tca(members, base.params().metric);
    region.area = gc * region.tca;
    if (region.tca == 0.0) {
      warnings.push_back(
          "class \"" + label + "\" has zero diameter (support " +
          std::to_string(region.support) +
          "); every non-coincident query near it will be rejected");
    }
    regions.emplace(label, std::move(region));
  }
  return AknnModel(std::move(base), std::move(regions), gc, mode,
                   std::move(warnings));
}

const ClassRegion& AknnModel::region(const Label& label) const {
  auto it = regions_.find(label);
  if (it == regions_.end()) {
    raise(ErrorCode::InvalidArgument, "no region for label \"" + label + "\"");
  }
  return it->second;
}

Prediction AknnModel::classify(const FeatureVector& query) const {
  const std::vector<Neighbor> nbrs = base_.neighbors(query);

  Prediction p;
  p.expected_class = majority_label(nbrs);
  p.neighbor_indices.reserve(nbrs.size());
  for (const auto& n : nbrs) {
    p.neighbor_indices.push_back(n.index);
  }

  if (mode_ == MinDistMode::GlobalMin) {
    p.min_dist = nbrs.front().distance;  // ascending order; global nearest
  } else {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& n : nbrs) {
      if (n.label == p.expected_class) {
        best = std::min(best, n.distance);
      }
    }
    p.min_dist = best;  // the majority class always appears in the top k
  }

  p.area_of_expected = region(p.expected_class).area;
  // Strict comparison: equality classifies as Known.
  p.outcome = p.min_dist > p.area_of_expected ? Outcome::Unknown
                                              : Outcome::Known;
  return p;
}

AknnModel AknnModel::with_gap_constant(double gc) const {
  if (!(gc > 0.0)) {
    raise(ErrorCode::NonPositiveGc,
          "gap constant must be positive, got " + std::to_string(gc));
  }
  std::map<Label, ClassRegion> rescaled = regions_;
  for (auto& [label, region] : rescaled) {
    region.area = gc * region.tca;
  }
  HyperParams params = base_.params();
  params.gc = gc;
  KnnModel base = KnnModel::fit(base_.training(), params);
  return AknnModel(std::move(base), std::move(rescaled), gc, mode_, warnings_);
}

}  // namespace aknn
