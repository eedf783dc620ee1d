#include "aknn/synthetic.hpp"

#include "aknn/rng.hpp"

namespace aknn {

Dataset make_two_blob_dataset(std::size_t count, std::uint64_t seed) {
  Dataset d;
  d.dim = 2;
  d.instances.reserve(count);
  rng::Engine engine(seed);
  // Centers ten sigma apart keep the blobs cleanly separable.
  const double centers[2][2] = {{0.0, 0.0}, {10.0, 10.0}};
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t blob = i % 2;
    FeatureVector features{
        centers[blob][0] + rng::standard_normal(engine),
        centers[blob][1] + rng::standard_normal(engine),
    };
    d.instances.push_back({std::move(features), Label(blob == 0 ? "0" : "1")});
  }
  return d;
}

}  // namespace aknn
