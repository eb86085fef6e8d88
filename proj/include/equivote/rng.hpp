#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace equivote::rng {

// std::mt19937_64 output is pinned by the standard; the transforms below are
// hand-rolled so that sampled values are identical across standard libraries.
using Engine = std::mt19937_64;

// Unbiased integer in [0, n) via rejection sampling.
inline std::uint64_t bounded(Engine& eng, std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return x % n;
}

// Uniform double in [0, 1) with 53 bits of precision.
inline double uniform01(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi).
inline double uniform(Engine& eng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(eng);
}

// Standard normal via Box-Muller.
inline double gaussian(Engine& eng) {
  double u1 = uniform01(eng);
  while (u1 <= 0.0) u1 = uniform01(eng);
  const double u2 = uniform01(eng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

// Discrete truncated power law on {1, ..., max_value} with density ~ x^-alpha.
// Inverse-CDF of the continuous Pareto, floored and clamped.
inline std::int64_t power_law(Engine& eng, double alpha, std::int64_t max_value) {
  if (max_value <= 1) return 1;
  const double u = uniform01(eng);
  const double x = std::pow(1.0 - u, -1.0 / (alpha - 1.0));
  const auto v = static_cast<std::int64_t>(x);
  return v < 1 ? 1 : (v > max_value ? max_value : v);
}

template <typename T>
void shuffle(std::vector<T>& items, Engine& eng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded(eng, i));
    std::swap(items[i - 1], items[j]);
  }
}

// k distinct indices from [0, n), in selection order.
inline std::vector<std::size_t> sample_indices(Engine& eng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  if (k > n) k = n;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(bounded(eng, n - i));
    std::swap(all[i], all[j]);
  }
  all.resize(k);
  return all;
}

}  // namespace equivote::rng
