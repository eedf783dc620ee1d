#include <benchmark/benchmark.h>

#include "aknn/aknn.hpp"
#include "aknn/knn.hpp"
#include "aknn/metric.hpp"
#include "aknn/rng.hpp"
#include "aknn/types.hpp"

namespace {

using aknn::Dataset;
using aknn::DistanceMetric;
using aknn::FeatureVector;

FeatureVector random_vector(aknn::rng::Engine& g, std::size_t dim) {
  FeatureVector v(dim);
  for (auto& x : v) {
    x = aknn::rng::uniform(g, -10.0, 10.0);
  }
  return v;
}

Dataset random_dataset(std::size_t n, std::size_t dim, std::size_t classes) {
  aknn::rng::Engine g(1);
  Dataset d;
  d.dim = dim;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t cls =
        i < classes ? i : aknn::rng::uniform_index(g, classes);
    d.instances.push_back(
        {random_vector(g, dim), aknn::Label("c" + std::to_string(cls))});
  }
  return d;
}

void BM_Distance(benchmark::State& state, DistanceMetric metric) {
  aknn::rng::Engine g(2);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto a = random_vector(g, dim);
  const auto b = random_vector(g, dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(aknn::distance(metric, a, b));
  }
}
BENCHMARK_CAPTURE(BM_Distance, euclidean, DistanceMetric::euclidean())
    ->Arg(4)
    ->Arg(64);
BENCHMARK_CAPTURE(BM_Distance, manhattan, DistanceMetric::manhattan())
    ->Arg(4)
    ->Arg(64);
BENCHMARK_CAPTURE(BM_Distance, minkowski3, DistanceMetric::minkowski(3.0))
    ->Arg(4)
    ->Arg(64);

void BM_Neighbors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto data = random_dataset(n, 4, 3);
  const auto model = aknn::KnnModel::fit(data, {7, DistanceMetric::euclidean()});
  aknn::rng::Engine g(3);
  const auto query = random_vector(g, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.neighbors(query));
  }
}
BENCHMARK(BM_Neighbors)->Arg(105)->Arg(1000)->Arg(10000);

void BM_Tca(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  aknn::rng::Engine g(4);
  std::vector<FeatureVector> points;
  for (std::size_t i = 0; i < n; ++i) {
    points.push_back(random_vector(g, 4));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(aknn::tca(points, DistanceMetric::euclidean()));
  }
}
BENCHMARK(BM_Tca)->Arg(35)->Arg(500);

void BM_FitAknn(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto data = random_dataset(n, 4, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        aknn::AknnModel::fit(data, {7, DistanceMetric::euclidean(), 1.5}));
  }
}
BENCHMARK(BM_FitAknn)->Arg(105)->Arg(1000);

void BM_AknnClassify(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto data = random_dataset(n, 4, 3);
  const auto model =
      aknn::AknnModel::fit(data, {7, DistanceMetric::euclidean(), 1.5});
  aknn::rng::Engine g(5);
  const auto query = random_vector(g, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.classify(query));
  }
}
BENCHMARK(BM_AknnClassify)->Arg(105)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
