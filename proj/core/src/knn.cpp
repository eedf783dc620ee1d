#include "aknn/knn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "aknn/error.hpp"

namespace aknn {
namespace {

void check_query(const FeatureVector& query, std::size_t dim) {
  if (query.size() != dim) {
    raise(ErrorCode::DimensionMismatch,
          "query has " + std::to_string(query.size()) +
              " features, model expects " + std::to_string(dim));
  }
  for (double x : query) {
    if (!std::isfinite(x)) {
      raise(ErrorCode::NonFiniteFeature, "query contains a non-finite value");
    }
  }
}

}  // namespace

Label majority_label(const std::vector<Neighbor>& neighbors) {
  if (neighbors.empty()) {
    raise(ErrorCode::InvalidArgument, "no neighbors to vote on");
  }
  std::map<Label, std::size_t> counts;
  for (const auto& n : neighbors) {
    ++counts[n.label];
  }
  std::size_t best = 0;
  for (const auto& [label, count] : counts) {
    best = std::max(best, count);
  }
  // Frequency tie: the nearest neighbor within the tied set wins.
  for (const auto& n : neighbors) {
    if (counts[n.label] == best) {
      return n.label;
    }
  }
  return neighbors.front().label;  // unreachable
}

KnnModel::KnnModel(Dataset training, HyperParams params)
    : training_(std::move(training)), params_(std::move(params)) {}

KnnModel KnnModel::fit(Dataset training, HyperParams params) {
  validate_dataset(training);
  if (!training.fully_labeled()) {
    raise(ErrorCode::UnlabeledInstance,
          "every training instance must carry a label");
  }
  if (params.k == 0) {
    raise(ErrorCode::InvalidArgument, "k must be at least 1");
  }
  if (params.k > training.size()) {
    raise(ErrorCode::KTooLarge,
          "k=" + std::to_string(params.k) + " exceeds training size " +
              std::to_string(training.size()));
  }
  if (params.metric.kind == MetricKind::Minkowski && !(params.metric.q >= 1.0)) {
    raise(ErrorCode::InvalidArgument, "Minkowski order must be >= 1");
  }
  return KnnModel(std::move(training), std::move(params));
}

std::vector<Neighbor> KnnModel::neighbors(const FeatureVector& query) const {
  check_query(query, training_.dim);

  std::vector<std::pair<double, std::size_t>> ranked;
  ranked.reserve(training_.size());
  for (std::size_t i = 0; i < training_.size(); ++i) {
    ranked.emplace_back(
        distance(params_.metric, training_.instances[i].features, query), i);
  }
  // Ties at the k-th rank break by smaller training-set index.
  const std::size_t k = params_.k;
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k),
                    ranked.end());

  std::vector<Neighbor> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& [dist, index] = ranked[i];
    out.push_back({index, dist, *training_.instances[index].label});
  }
  return out;
}

Label KnnModel::classify(const FeatureVector& query) const {
  return majority_label(neighbors(query));
}

}  // namespace aknn
