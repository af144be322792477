#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rieszcheck {

using Point = std::array<double, 3>;
using MultiIndex = std::array<std::int64_t, 3>;

inline constexpr std::size_t kDefaultPointCap = std::size_t{1} << 22;

/// Uniform cubic grid in dimension 1..3. Point i has coordinate
/// origin + i*h on every axis; each point is the center of a cell of side h.
struct GridSpec {
  int d = 1;
  std::size_t n = 0;
  double h = 0.0;
  Point origin{0.0, 0.0, 0.0};

  /// Throws Error(InvalidArgument / UnsupportedDimension) on violation.
  void validate(std::size_t point_cap = kDefaultPointCap) const;

  std::size_t size() const;
  double cell_volume() const;
  /// Side length n*h of the box covered by the cells.
  double extent() const { return static_cast<double>(n) * h; }
  /// Euclidean diameter of the cell box.
  double diameter() const;

  MultiIndex unflatten(std::size_t flat) const;
  std::size_t flatten(const MultiIndex& idx) const;
  bool contains(const MultiIndex& idx) const;
  Point coordinate(const MultiIndex& idx) const;
  Point coordinate(std::size_t flat) const { return coordinate(unflatten(flat)); }
  /// True when x lies in the closed cell box.
  bool box_contains(const Point& x) const;
  /// Grid index whose cell contains x (clamped to the box).
  MultiIndex nearest_index(const Point& x) const;

  bool operator==(const GridSpec&) const = default;
};

/// Grid with n points per axis and side length `extent`, arranged so that
/// point n/2 sits at the coordinate origin.
GridSpec centered_grid(int d, std::size_t n, double extent);

/// Real samples on a GridSpec, row-major (axis 0 slowest).
class Field {
 public:
  Field() = default;
  explicit Field(GridSpec spec);
  Field(GridSpec spec, std::vector<double> values);

  const GridSpec& spec() const { return spec_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<double> mutable_values() { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  double max_abs() const;
  double min() const;
  bool all_finite() const;
  bool is_nonnegative() const;
  bool is_zero() const;

 private:
  GridSpec spec_;
  std::vector<double> values_;
};

/// Builds a field by evaluating fn at every grid point.
Field sample(const GridSpec& spec, const std::function<double(const Point&)>& fn);

/// Elementwise helpers. Binary ones require matching specs.
Field map(const Field& f, const std::function<double(double)>& fn);
Field abs_pow(const Field& f, double s);
Field multiply(const Field& a, const Field& b);
Field add(const Field& a, const Field& b);
Field scale(const Field& f, double c);
/// Shifts values by `shift` cells along `axis`, filling with zeros.
Field shift(const Field& f, int axis, std::int64_t shift);

/// Open ball {y : |y - center| < radius}.
struct Ball {
  Point center{0.0, 0.0, 0.0};
  double radius = 0.0;
};

double distance(const Point& a, const Point& b, int d);
double norm(const Point& x, int d);

/// Volume of the unit ball in dimension d.
double unit_ball_volume(int d);
/// Surface measure of the unit sphere in dimension d.
double unit_sphere_area(int d);

/// (sum |f_i|^s h^d)^(1/s). Throws for s < 1.
double lp_norm(const Field& f, double s);
/// sum f_i h^d.
double integral(const Field& f);
/// sum a_i b_i h^d.
double inner_product(const Field& a, const Field& b);
/// Sum of f over cells whose centers lie in the ball, times h^d.
double ball_integral(const Field& f, const Ball& ball);
/// Number of grid cells whose centers lie in the ball.
std::size_t ball_cell_count(const GridSpec& spec, const Ball& ball);

}  // namespace rieszcheck
