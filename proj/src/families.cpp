#include "rieszcheck/families.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rieszcheck/error.hpp"
#include "rieszcheck/quadrature.hpp"

namespace rieszcheck {

double origin_cell_average(int d, double beta, double h) {
  if (!(beta >= 0.0) || !(beta < d)) {
    throw Error(ErrorCode::InvalidArgument, "power weight needs 0 <= beta < d");
  }
  if (beta == 0.0) return 1.0;
  if (d == 1) return std::pow(0.5 * h, -beta) / (1.0 - beta);
  return std::pow(h, -beta) * quadrature::unit_cube_kernel_integral(d, d - beta);
}

Field power_weight(const GridSpec& spec, double beta, double scale, double cutoff) {
  spec.validate();
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::InvalidArgument, "power weight scale must be nonnegative");
  }
  if (!(cutoff > 0.0) || cutoff > 0.5 * spec.extent() * (1.0 + 1e-12)) {
    throw Error(ErrorCode::InvalidArgument, "cutoff exceeds grid half-extent");
  }
  const double center_value = origin_cell_average(spec.d, beta, spec.h);
  const double tiny = 1e-9 * spec.h;
  return sample(spec, [&](const Point& x) {
    const double r = norm(x, spec.d);
    if (r > cutoff) return 0.0;
    if (r < tiny) return scale * center_value;
    return scale * std::pow(r, -beta);
  });
}

Field indicator_weight(const GridSpec& spec, double radius, const Point& center) {
  return sample(spec, [&](const Point& x) {
    return distance(x, center, spec.d) <= radius ? 1.0 : 0.0;
  });
}

Field box_weight(const GridSpec& spec, double half_width) {
  return sample(spec, [&](const Point& x) {
    for (int a = 0; a < spec.d; ++a) {
      if (std::abs(x[a]) > half_width) return 0.0;
    }
    return 1.0;
  });
}

std::size_t boundary_band(const GridSpec& spec) { return spec.n / 8; }

Field random_weight(std::uint64_t seed, const GridSpec& spec, double smoothness, double floor) {
  spec.validate();
  if (!(smoothness > 0.0)) throw Error(ErrorCode::InvalidArgument, "smoothness must be positive");
  if (!(floor >= 0.0)) throw Error(ErrorCode::InvalidArgument, "floor must be nonnegative");
  constexpr int kBumps = 12;
  constexpr std::size_t kReferencePoints = 97;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> amp(0.0, 1.0);
  // Centers and normalization depend only on the box, so the same seed gives
  // the same function at every resolution.
  const double lo = spec.origin[0] + static_cast<double>(boundary_band(spec)) * spec.h;
  const double hi = spec.origin[0] + static_cast<double>(spec.n - boundary_band(spec)) * spec.h;
  std::uniform_real_distribution<double> pos(lo, hi);
  std::vector<double> amps(kBumps);
  std::vector<Point> centers(kBumps, Point{0.0, 0.0, 0.0});
  for (int j = 0; j < kBumps; ++j) {
    amps[j] = amp(rng);
    for (int a = 0; a < spec.d; ++a) centers[j][a] = pos(rng);
  }
  const double inv = 1.0 / (2.0 * smoothness * smoothness);
  auto eval = [&](const Point& x) {
    double s = 0.0;
    for (int j = 0; j < kBumps; ++j) {
      const double r = distance(x, centers[j], spec.d);
      s += amps[j] * std::exp(-r * r * inv);
    }
    return s * s;
  };
  GridSpec reference;
  reference.d = spec.d;
  reference.n = kReferencePoints;
  reference.h = (hi - lo) / static_cast<double>(kReferencePoints - 1);
  for (int a = 0; a < spec.d; ++a) reference.origin[a] = lo;
  const double top = std::max(sample(reference, eval).max_abs(), 1e-300);
  const Field g = sample(spec, eval);
  const auto band = static_cast<std::int64_t>(boundary_band(spec));
  const auto n = static_cast<std::int64_t>(spec.n);
  Field out(spec);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const MultiIndex idx = spec.unflatten(i);
    bool inside = true;
    for (int a = 0; a < spec.d; ++a) inside = inside && idx[a] >= band && idx[a] < n - band;
    out[i] = inside ? floor + g[i] / top : 0.0;
  }
  return out;
}

Field gaussian_source(const GridSpec& spec, double sigma, const Point& center) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::InvalidArgument, "sigma must be positive");
  const double inv = 1.0 / (2.0 * sigma * sigma);
  return sample(spec, [&](const Point& x) {
    const double r = distance(x, center, spec.d);
    return std::exp(-r * r * inv);
  });
}

Field random_source(std::uint64_t seed, const GridSpec& spec) {
  constexpr int kBumps = 3;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(0.5, 1.0);
  std::uniform_real_distribution<double> pos(-0.3, 0.3);
  std::uniform_real_distribution<double> width(0.08, 0.12);
  Field out(spec);
  for (int j = 0; j < kBumps; ++j) {
    const double a = amp(rng);
    Point c{0.0, 0.0, 0.0};
    for (int k = 0; k < spec.d; ++k) c[k] = pos(rng);
    const double s = width(rng);
    const Field bump = gaussian_source(spec, s, c);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * bump[i];
  }
  return out;
}

}  // namespace rieszcheck
