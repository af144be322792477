#include "rieszcheck/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rieszcheck/error.hpp"

namespace rieszcheck {

void GridSpec::validate(std::size_t point_cap) const {
  if (d < 1 || d > 3) {
    throw Error(ErrorCode::UnsupportedDimension, "unsupported dimension");
  }
  if (n < 4) throw Error(ErrorCode::InvalidArgument, "grid needs n >= 4");
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorCode::InvalidArgument, "grid spacing must be positive");
  }
  for (int k = 0; k < d; ++k) {
    if (!std::isfinite(origin[k])) {
      throw Error(ErrorCode::InvalidArgument, "grid origin must be finite");
    }
  }
  double total = 1.0;
  for (int k = 0; k < d; ++k) total *= static_cast<double>(n);
  if (total > static_cast<double>(point_cap)) {
    std::ostringstream os;
    os << "grid has " << total << " points, cap is " << point_cap;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

std::size_t GridSpec::size() const {
  std::size_t total = 1;
  for (int k = 0; k < d; ++k) total *= n;
  return total;
}

double GridSpec::cell_volume() const { return std::pow(h, d); }

double GridSpec::diameter() const { return extent() * std::sqrt(static_cast<double>(d)); }

MultiIndex GridSpec::unflatten(std::size_t flat) const {
  MultiIndex idx{0, 0, 0};
  for (int k = d - 1; k >= 0; --k) {
    idx[k] = static_cast<std::int64_t>(flat % n);
    flat /= n;
  }
  return idx;
}

std::size_t GridSpec::flatten(const MultiIndex& idx) const {
  std::size_t flat = 0;
  for (int k = 0; k < d; ++k) flat = flat * n + static_cast<std::size_t>(idx[k]);
  return flat;
}

bool GridSpec::contains(const MultiIndex& idx) const {
  const auto nn = static_cast<std::int64_t>(n);
  for (int k = 0; k < d; ++k) {
    if (idx[k] < 0 || idx[k] >= nn) return false;
  }
  return true;
}

Point GridSpec::coordinate(const MultiIndex& idx) const {
  Point x{0.0, 0.0, 0.0};
  for (int k = 0; k < d; ++k) x[k] = origin[k] + static_cast<double>(idx[k]) * h;
  return x;
}

bool GridSpec::box_contains(const Point& x) const {
  for (int k = 0; k < d; ++k) {
    const double lo = origin[k] - 0.5 * h;
    const double hi = lo + extent();
    if (x[k] < lo || x[k] > hi) return false;
  }
  return true;
}

MultiIndex GridSpec::nearest_index(const Point& x) const {
  MultiIndex idx{0, 0, 0};
  const auto last = static_cast<std::int64_t>(n) - 1;
  for (int k = 0; k < d; ++k) {
    const auto i = static_cast<std::int64_t>(std::llround((x[k] - origin[k]) / h));
    idx[k] = std::clamp<std::int64_t>(i, 0, last);
  }
  return idx;
}

GridSpec centered_grid(int d, std::size_t n, double extent) {
  GridSpec spec;
  spec.d = d;
  spec.n = n;
  spec.h = extent / static_cast<double>(n);
  const double lo = -static_cast<double>(n / 2) * spec.h;
  for (int k = 0; k < d; ++k) spec.origin[k] = lo;
  spec.validate();
  return spec;
}

Field::Field(GridSpec spec) : spec_(spec), values_(spec.size(), 0.0) {}

Field::Field(GridSpec spec, std::vector<double> values)
    : spec_(spec), values_(std::move(values)) {
  if (values_.size() != spec_.size()) {
    throw Error(ErrorCode::InvalidArgument, "field size does not match grid");
  }
}

double Field::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double Field::min() const {
  return values_.empty() ? 0.0 : *std::min_element(values_.begin(), values_.end());
}

bool Field::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

bool Field::is_nonnegative() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v >= 0.0; });
}

bool Field::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

Field sample(const GridSpec& spec, const std::function<double(const Point&)>& fn) {
  Field out(spec);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = fn(spec.coordinate(i));
  return out;
}

Field map(const Field& f, const std::function<double(double)>& fn) {
  Field out(f.spec());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = fn(f[i]);
  return out;
}

Field abs_pow(const Field& f, double s) {
  return map(f, [s](double v) { return std::pow(std::abs(v), s); });
}

namespace {

void require_same_spec(const Field& a, const Field& b) {
  if (!(a.spec() == b.spec())) {
    throw Error(ErrorCode::InvalidArgument, "fields live on different grids");
  }
}

}  // namespace

Field multiply(const Field& a, const Field& b) {
  require_same_spec(a, b);
  Field out(a.spec());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

Field add(const Field& a, const Field& b) {
  require_same_spec(a, b);
  Field out(a.spec());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Field scale(const Field& f, double c) {
  return map(f, [c](double v) { return c * v; });
}

Field shift(const Field& f, int axis, std::int64_t cells) {
  const GridSpec& spec = f.spec();
  Field out(spec);
  for (std::size_t i = 0; i < f.size(); ++i) {
    MultiIndex idx = spec.unflatten(i);
    idx[axis] -= cells;
    if (spec.contains(idx)) out[i] = f[spec.flatten(idx)];
  }
  return out;
}

double distance(const Point& a, const Point& b, int d) {
  double s = 0.0;
  for (int k = 0; k < d; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

double norm(const Point& x, int d) { return distance(x, Point{0.0, 0.0, 0.0}, d); }

double unit_ball_volume(int d) {
  switch (d) {
    case 1: return 2.0;
    case 2: return std::numbers::pi;
    case 3: return 4.0 * std::numbers::pi / 3.0;
    default: throw Error(ErrorCode::UnsupportedDimension, "unsupported dimension");
  }
}

double unit_sphere_area(int d) { return d * unit_ball_volume(d); }

double lp_norm(const Field& f, double s) {
  if (!(s >= 1.0)) throw Error(ErrorCode::InvalidArgument, "lp_norm needs s >= 1");
  double sum = 0.0;
  for (double v : f.values()) sum += std::pow(std::abs(v), s);
  return std::pow(sum * f.spec().cell_volume(), 1.0 / s);
}

double integral(const Field& f) {
  double sum = 0.0;
  for (double v : f.values()) sum += v;
  return sum * f.spec().cell_volume();
}

double inner_product(const Field& a, const Field& b) {
  require_same_spec(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum * a.spec().cell_volume();
}

namespace {

template <typename Visit>
void for_each_cell_in_ball(const GridSpec& spec, const Ball& ball, Visit&& visit) {
  // Only the index range overlapping the ball's bounding box is scanned.
  MultiIndex lo{0, 0, 0};
  MultiIndex hi{0, 0, 0};
  const auto last = static_cast<std::int64_t>(spec.n) - 1;
  for (int k = 0; k < spec.d; ++k) {
    const double a = (ball.center[k] - ball.radius - spec.origin[k]) / spec.h;
    const double b = (ball.center[k] + ball.radius - spec.origin[k]) / spec.h;
    lo[k] = std::clamp<std::int64_t>(static_cast<std::int64_t>(std::floor(a)), 0, last + 1);
    hi[k] = std::clamp<std::int64_t>(static_cast<std::int64_t>(std::ceil(b)), -1, last);
  }
  const double r2 = ball.radius * ball.radius;
  MultiIndex idx{0, 0, 0};
  for (idx[0] = lo[0]; idx[0] <= hi[0]; ++idx[0]) {
    for (idx[1] = (spec.d > 1 ? lo[1] : 0); idx[1] <= (spec.d > 1 ? hi[1] : 0); ++idx[1]) {
      for (idx[2] = (spec.d > 2 ? lo[2] : 0); idx[2] <= (spec.d > 2 ? hi[2] : 0); ++idx[2]) {
        const Point x = spec.coordinate(idx);
        double s = 0.0;
        for (int k = 0; k < spec.d; ++k) s += (x[k] - ball.center[k]) * (x[k] - ball.center[k]);
        if (s < r2) visit(spec.flatten(idx));
      }
    }
  }
}

}  // namespace

double ball_integral(const Field& f, const Ball& ball) {
  double sum = 0.0;
  for_each_cell_in_ball(f.spec(), ball, [&](std::size_t i) { sum += f[i]; });
  return sum * f.spec().cell_volume();
}

std::size_t ball_cell_count(const GridSpec& spec, const Ball& ball) {
  std::size_t count = 0;
  for_each_cell_in_ball(spec, ball, [&](std::size_t) { ++count; });
  return count;
}

}  // namespace rieszcheck
