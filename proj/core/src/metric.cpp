#include "aknn/metric.hpp"

#include <cmath>
#include <string>

#include "aknn/error.hpp"

namespace aknn {

const char* to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::Euclidean:
      return "euclidean";
    case MetricKind::Manhattan:
      return "manhattan";
    case MetricKind::Minkowski:
      return "minkowski";
  }
  return "?";
}

DistanceMetric DistanceMetric::minkowski(double q) {
  if (!(q >= 1.0)) {
    raise(ErrorCode::InvalidArgument,
          "Minkowski order must be >= 1, got " + std::to_string(q));
  }
  return {MetricKind::Minkowski, q};
}

double distance(const DistanceMetric& m, std::span<const double> a,
                std::span<const double> b) {
  if (a.size() != b.size()) {
    raise(ErrorCode::DimensionMismatch,
          "vector lengths differ: " + std::to_string(a.size()) + " vs " +
              std::to_string(b.size()));
  }
  if (a.empty()) {
    raise(ErrorCode::DimensionMismatch, "vectors must be non-empty");
  }
  switch (m.kind) {
    case MetricKind::Euclidean: {
      double sum = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
      }
      return std::sqrt(sum);
    }
    case MetricKind::Manhattan: {
      double sum = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::abs(a[i] - b[i]);
      }
      return sum;
    }
    case MetricKind::Minkowski: {
      if (!(m.q >= 1.0)) {
        raise(ErrorCode::InvalidArgument,
              "Minkowski order must be >= 1, got " + std::to_string(m.q));
      }
      double sum = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::pow(std::abs(a[i] - b[i]), m.q);
      }
      return std::pow(sum, 1.0 / m.q);
    }
  }
  raise(ErrorCode::InvalidArgument, "unknown metric kind");
}

}  // namespace aknn
