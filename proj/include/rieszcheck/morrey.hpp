#pragma once

#include <string_view>
#include <vector>

#include "rieszcheck/grid.hpp"
#include "rieszcheck/maximal.hpp"

namespace rieszcheck {

enum class MorreyConvention {
  /// rho^alpha (average of b^p over B)^(1/p).
  Average,
  /// rho^alpha (integral of b^p over B)^(1/p).
  Raw,
};

std::string_view to_string(MorreyConvention convention);
MorreyConvention parse_morrey_convention(std::string_view name);

/// Radius of the continuum ball whose volume equals `volume`.
double effective_radius(int d, double volume);

/// Value of one discrete ball holding `cells` cells with sum_B b^p h^d = mass.
double morrey_ball_value(int d, double h, double cells, double mass, double p, double alpha,
                         MorreyConvention convention);

struct MorreyScanEntry {
  Point center{0.0, 0.0, 0.0};
  double radius = 0.0;
  double value = 0.0;
};

struct MorreyReport {
  double A = 0.0;
  Ball argmax_ball;
  std::vector<MorreyScanEntry> scan;
  MorreyConvention convention = MorreyConvention::Average;
};

struct MorreyOptions {
  MorreyConvention convention = MorreyConvention::Average;
  /// Centers lie on every stride-th grid point, aligned with index n/2.
  std::size_t stride = 4;
  LadderKind ladder = LadderKind::Standard;
  bool keep_scan = true;
};

/// Morrey constant A = sup over scanned balls of the ball value. Balls are
/// the discrete sets {|k|^2 <= m}; their radius is the volume-equivalent
/// radius of the cell union. Ties go to the smaller radius, then to the
/// lexicographically smaller center.
MorreyReport morrey_constant(const Field& b, double p, double alpha, MorreyOptions options = {});

}  // namespace rieszcheck
