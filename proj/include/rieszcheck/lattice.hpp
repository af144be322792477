#pragma once

#include <cstdint>
#include <vector>

#include "rieszcheck/grid.hpp"

namespace rieszcheck {

/// Integer offset k together with its squared length |k|^2.
struct LatticeOffset {
  MultiIndex k{0, 0, 0};
  std::int64_t m = 0;
};

/// All offsets with |k_i| <= reach on every axis, ordered by |k|^2 and then
/// lexicographically. Walking this list grows a centered discrete ball.
std::vector<LatticeOffset> sorted_offsets(int d, std::int64_t reach);

/// Number of k in Z^d with |k|^2 <= m_max (0 when m_max < 0).
std::int64_t lattice_count(int d, std::int64_t m_max);

/// Largest integer m with m*h^2 < radius^2, i.e. the discrete open ball of
/// this radius is {k : |k|^2 <= m}. Returns -1 for radius <= 0.
std::int64_t ball_threshold(double radius, double h);

/// Squared index distance from idx to the farthest corner of the box
/// [lo, hi] (all in index units).
std::int64_t farthest_corner_m(int d, const MultiIndex& idx, const MultiIndex& lo,
                               const MultiIndex& hi);

/// Index bounding box of the nonzero entries of f. Returns false when f is
/// identically zero.
bool support_box(const Field& f, MultiIndex& lo, MultiIndex& hi);

}  // namespace rieszcheck
