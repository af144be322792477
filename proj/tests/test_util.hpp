#pragma once

#include <cstdint>
#include <random>

#include "rieszcheck/grid.hpp"

namespace rieszcheck::testing {

inline Field uniform_field(const GridSpec& spec, std::uint64_t seed, double lo = 0.0, double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  Field f(spec);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = dist(rng);
  return f;
}

/// Random values on the cells at least `margin` cells from every face.
inline Field compact_field(const GridSpec& spec, std::uint64_t seed, std::size_t margin) {
  Field f = uniform_field(spec, seed);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const MultiIndex k = spec.unflatten(i);
    for (int a = 0; a < spec.d; ++a) {
      if (k[a] < static_cast<std::int64_t>(margin) ||
          k[a] >= static_cast<std::int64_t>(spec.n - margin)) {
        f[i] = 0.0;
      }
    }
  }
  return f;
}

inline Field constant_field(const GridSpec& spec, double c) {
  Field f(spec);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = c;
  return f;
}

inline double max_abs_diff(const Field& a, const Field& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace rieszcheck::testing
