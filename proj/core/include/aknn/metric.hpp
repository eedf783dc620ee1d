#pragma once

#include <span>

#include "aknn/types.hpp"

namespace aknn {

enum class MetricKind { Euclidean, Manhattan, Minkowski };

const char* to_string(MetricKind kind);

/// Named, parameterized distance function descriptor. The Minkowski order q
/// is ignored by the other kinds.
struct DistanceMetric {
  MetricKind kind = MetricKind::Euclidean;
  double q = 2.0;

  static DistanceMetric euclidean() { return {MetricKind::Euclidean, 2.0}; }
  static DistanceMetric manhattan() { return {MetricKind::Manhattan, 1.0}; }
  static DistanceMetric minkowski(double q);
};

/// Distance between two equal-length vectors under the given metric.
/// Summation runs in natural index order. Throws DimensionMismatch when the
/// lengths differ and InvalidArgument for a Minkowski order below 1.
double distance(const DistanceMetric& m, std::span<const double> a,
                std::span<const double> b);

}  // namespace aknn
