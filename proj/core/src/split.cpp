#include "aknn/split.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "aknn/error.hpp"
#include "aknn/rng.hpp"

namespace aknn {
namespace {

Dataset gather(const Dataset& d, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  Dataset out;
  out.dim = d.dim;
  out.instances.reserve(indices.size());
  for (std::size_t i : indices) {
    out.instances.push_back(d.instances[i]);
  }
  return out;
}

// Per-class train quotas via largest remainder, summing to total_train and
// staying within one instance of the proportional share per class.
std::map<Label, std::size_t> stratified_quotas(
    const std::map<Label, std::vector<std::size_t>>& by_class,
    double fraction, std::size_t total_train) {
  std::map<Label, std::size_t> quota;
  std::vector<std::pair<double, Label>> remainders;
  std::size_t assigned = 0;
  for (const auto& [label, members] : by_class) {
    const double target = fraction * static_cast<double>(members.size());
    const auto base = static_cast<std::size_t>(std::floor(target));
    quota[label] = base;
    assigned += base;
    remainders.emplace_back(target - std::floor(target), label);
  }
  // Largest remainder first; ties by label for determinism.
  std::sort(remainders.begin(), remainders.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first > b.first;
              return a.second < b.second;
            });
  for (const auto& [rem, label] : remainders) {
    if (assigned >= total_train) break;
    if (quota[label] < by_class.at(label).size()) {
      ++quota[label];
      ++assigned;
    }
  }
  return quota;
}

}  // namespace

SplitResult split(const Dataset& d, const SplitSpec& spec) {
  validate_dataset(d);
  if (!d.fully_labeled()) {
    raise(ErrorCode::UnlabeledInstance,
          "split requires a fully labeled dataset");
  }
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
    raise(ErrorCode::InvalidArgument,
          "train_fraction must lie in (0, 1), got " +
              std::to_string(spec.train_fraction));
  }

  const std::size_t n = d.size();
  const auto n_train = static_cast<std::size_t>(
      std::llround(spec.train_fraction * static_cast<double>(n)));

  rng::Engine engine(spec.seed);
  std::vector<std::size_t> train_indices;
  std::vector<std::size_t> test_indices;

  if (!spec.stratified) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    rng::shuffle(order, engine);
    train_indices.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
    test_indices.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train), order.end());
  } else {
    std::map<Label, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < n; ++i) {
      by_class[*d.instances[i].label].push_back(i);
    }
    const auto quota = stratified_quotas(by_class, spec.train_fraction, n_train);
    for (auto& [label, members] : by_class) {
      rng::shuffle(members, engine);
      const std::size_t take = quota.at(label);
      train_indices.insert(train_indices.end(), members.begin(),
                           members.begin() + static_cast<std::ptrdiff_t>(take));
      test_indices.insert(test_indices.end(),
                          members.begin() + static_cast<std::ptrdiff_t>(take),
                          members.end());
    }
  }

  return {gather(d, std::move(train_indices)),
          gather(d, std::move(test_indices))};
}

}  // namespace aknn
