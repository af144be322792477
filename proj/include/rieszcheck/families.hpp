#pragma once

#include <cstdint>

#include "rieszcheck/grid.hpp"

namespace rieszcheck {

/// b(x) = scale |x|^(-beta) on |x| <= cutoff, zero outside. A grid point at
/// the origin receives the cell average of |x|^(-beta) instead of the
/// singular point value. Requires 0 <= beta < d and cutoff <= extent / 2.
Field power_weight(const GridSpec& spec, double beta, double scale, double cutoff);

/// Mean of |x|^(-beta) over the cell [-h/2, h/2]^d.
double origin_cell_average(int d, double beta, double h);

/// 1 on the closed ball |x - center| <= radius.
Field indicator_weight(const GridSpec& spec, double radius,
                       const Point& center = Point{0.0, 0.0, 0.0});

/// 1 on the cube max_i |x_i| <= half_width.
Field box_weight(const GridSpec& spec, double half_width);

/// Seeded nonnegative weight: (floor + g^2 / max g^2) on the cells at least
/// n/8 cells away from the boundary, zero on the band. g is a sum of 12
/// Gaussians of width `smoothness` (physical units) with N(0,1) amplitudes,
/// so the same seed gives the same function at every resolution.
Field random_weight(std::uint64_t seed, const GridSpec& spec, double smoothness,
                    double floor = 0.05);

/// exp(-|x - center|^2 / (2 sigma^2)).
Field gaussian_source(const GridSpec& spec, double sigma,
                      const Point& center = Point{0.0, 0.0, 0.0});

/// Seeded smooth nonnegative bump: a sum of three Gaussians with amplitudes
/// in [0.5, 1], centers in [-0.3, 0.3]^d and widths in [0.08, 0.12].
Field random_source(std::uint64_t seed, const GridSpec& spec);

/// Index width of the boundary band that random weights leave empty and that
/// spectral operators require to be (numerically) zero.
std::size_t boundary_band(const GridSpec& spec);

}  // namespace rieszcheck
