#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace aknn::rng {

// std::mt19937_64 output is fully specified by the standard; the helpers
// below avoid std::*_distribution, whose results vary across standard
// library implementations. Seeds therefore reproduce byte-identical streams
// on every platform.

using Engine = std::mt19937_64;

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Engine& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform(Engine& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

/// Unbiased uniform index in [0, n). n must be positive.
inline std::uint64_t uniform_index(Engine& g, std::uint64_t n) {
  const std::uint64_t limit = n * (UINT64_MAX / n);
  std::uint64_t x;
  do {
    x = g();
  } while (x >= limit);
  return x % n;
}

/// Standard normal via Box-Muller.
inline double standard_normal(Engine& g) {
  double u;
  do {
    u = uniform01(g);
  } while (u == 0.0);
  const double v = uniform01(g);
  return std::sqrt(-2.0 * std::log(u)) *
         std::cos(2.0 * std::numbers::pi * v);
}

template <typename T>
void shuffle(std::vector<T>& v, Engine& g) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_index(g, i));
    std::swap(v[i - 1], v[j]);
  }
}

/// Uniform direction on the unit sphere in `dim` dimensions.
std::vector<double> unit_direction(Engine& g, std::size_t dim);

}  // namespace aknn::rng
