#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rieszcheck/grid.hpp"
#include "rieszcheck/lattice.hpp"

namespace rieszcheck {

enum class LadderKind {
  /// Integer multiples h..8h plus a geometric sequence of ratio 1.25.
  Standard,
  /// Every distinct discrete ball realizable on the grid.
  Full,
};

std::string_view to_string(LadderKind kind);
LadderKind parse_ladder_kind(std::string_view name);

/// Candidate radii of the centered maximal operator, increasing, starting
/// at h (the own cell) and reaching past the grid diameter.
struct RadiusLadder {
  LadderKind kind = LadderKind::Standard;
  std::vector<double> radii;

  static RadiusLadder standard(const GridSpec& spec);
  static RadiusLadder full(const GridSpec& spec);
  static RadiusLadder make(LadderKind kind, const GridSpec& spec);

  /// Distinct discrete thresholds m (ball = {|k|^2 <= m}) in increasing order.
  std::vector<std::int64_t> thresholds(double h) const;
};

/// Centered maximal function, with ball sums computed by FFT convolution.
/// Averages use the lattice cell count of the
/// ball (cells outside the box count as zeros), so M c = c and M f >= |f|
/// hold exactly.
Field maximal(const Field& f, const RadiusLadder& ladder);
Field maximal(const Field& f, LadderKind kind = LadderKind::Standard);

/// Maximal function at a single grid point by direct summation over the
/// cells of each ball.
double maximal_at(const Field& f, const MultiIndex& idx, const RadiusLadder& ladder);

/// m(x) = 1 for |x| <= rho, rho^d / |x|^d otherwise.
double maximal_indicator_majorant(double rho, const Point& x, int d);

/// Indicator of the closed ball |x - center| <= rho sampled at cell centers.
Field ball_indicator(const GridSpec& spec, const Point& center, double rho);

struct MajorantSweep {
  std::vector<double> rhos;
  /// max_x M I_{B_rho(0)}(x) / m(x) per rho.
  std::vector<double> sup_ratios;
  double sup_ratio = 0.0;
};

/// Compares M I_{B_rho(0)} against the majorant over every grid point.
MajorantSweep majorant_domination(const GridSpec& spec, const std::vector<double>& rhos,
                                  LadderKind kind = LadderKind::Standard);

struct A1Report {
  double constant = 0.0;
  std::size_t evaluated = 0;
  /// Points with w <= floor, excluded from the maximum.
  std::size_t floored = 0;
  /// A zero of w enclosed by positive values along every axis.
  bool interior_zero = false;
  std::vector<std::string> warnings;
};

/// max over points with w > floor of M w / w. Throws DegenerateWeight for
/// w == 0 and InvalidArgument for negative entries.
A1Report a1_report(const Field& w, double floor = 1e-300,
                   LadderKind kind = LadderKind::Standard);
double a1_constant(const Field& w, double floor = 1e-300);

/// (M(b^p0))^(1/p0); requires b >= 0 and 0 < p1 < p0.
Field a1_lift(const Field& b, double p0, double p1, LadderKind kind = LadderKind::Standard);

}  // namespace rieszcheck
