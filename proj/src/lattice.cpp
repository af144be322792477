#include "rieszcheck/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace rieszcheck {

std::vector<LatticeOffset> sorted_offsets(int d, std::int64_t reach) {
  const std::int64_t side = 2 * reach + 1;
  std::int64_t total = 1;
  for (int a = 0; a < d; ++a) total *= side;
  std::vector<LatticeOffset> out;
  out.reserve(static_cast<std::size_t>(total));
  for (std::int64_t i = 0; i < total; ++i) {
    LatticeOffset o;
    std::int64_t rest = i;
    for (int a = d - 1; a >= 0; --a) {
      o.k[a] = rest % side - reach;
      rest /= side;
      o.m += o.k[a] * o.k[a];
    }
    out.push_back(o);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const LatticeOffset& x, const LatticeOffset& y) { return x.m < y.m; });
  return out;
}

namespace {

// #{j in Z : j^2 <= m}
std::int64_t line_count(std::int64_t m) {
  if (m < 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
  while (r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  return 2 * r + 1;
}

}  // namespace

std::int64_t lattice_count(int d, std::int64_t m_max) {
  if (m_max < 0) return 0;
  if (d == 1) return line_count(m_max);
  const std::int64_t r = line_count(m_max) / 2;
  std::int64_t total = 0;
  for (std::int64_t j = -r; j <= r; ++j) total += lattice_count(d - 1, m_max - j * j);
  return total;
}

std::int64_t ball_threshold(double radius, double h) {
  if (!(radius > 0.0)) return -1;
  const double t = (radius / h) * (radius / h);
  // Radii that are exact lattice distances sit on the open-ball boundary.
  return static_cast<std::int64_t>(std::ceil(t - 1e-9)) - 1;
}

std::int64_t farthest_corner_m(int d, const MultiIndex& idx, const MultiIndex& lo,
                               const MultiIndex& hi) {
  std::int64_t m = 0;
  for (int a = 0; a < d; ++a) {
    const std::int64_t e = std::max(std::abs(idx[a] - lo[a]), std::abs(hi[a] - idx[a]));
    m += e * e;
  }
  return m;
}

bool support_box(const Field& f, MultiIndex& lo, MultiIndex& hi) {
  const GridSpec& spec = f.spec();
  bool any = false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0.0) continue;
    const MultiIndex idx = spec.unflatten(i);
    if (!any) {
      lo = idx;
      hi = idx;
      any = true;
    } else {
      for (int a = 0; a < spec.d; ++a) {
        lo[a] = std::min(lo[a], idx[a]);
        hi[a] = std::max(hi[a], idx[a]);
      }
    }
  }
  return any;
}

}  // namespace rieszcheck
