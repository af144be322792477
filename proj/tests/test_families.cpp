#include <gtest/gtest.h>

#include <cmath>

#include "rieszcheck/error.hpp"
#include "rieszcheck/families.hpp"
#include "rieszcheck/morrey.hpp"
#include "rieszcheck/quadrature.hpp"

using namespace rieszcheck;

TEST(PowerWeight, ZeroScaleGivesZero) {
  EXPECT_TRUE(power_weight(centered_grid(1, 64, 2.0), 0.5, 0.0, 1.0).is_zero());
}

TEST(PowerWeight, PointValue) {
  const GridSpec s = centered_grid(1, 64, 2.0);
  const Field b = power_weight(s, 0.5, 1.0, 0.5);
  const auto idx = s.nearest_index(Point{0.25, 0.0, 0.0});
  ASSERT_DOUBLE_EQ(s.coordinate(idx)[0], 0.25);
  EXPECT_DOUBLE_EQ(b[s.flatten(idx)], 2.0);
  EXPECT_EQ(b[s.flatten(s.nearest_index(Point{0.75, 0.0, 0.0}))], 0.0);
}

TEST(PowerWeight, OriginCellAverage) {
  const double h = 1.0 / 64;
  // (1/h) int_{-h/2}^{h/2} |x|^(-1/2) dx = 4 sqrt(h/2) / h.
  EXPECT_NEAR(origin_cell_average(1, 0.5, h), 4.0 * std::sqrt(h / 2.0) / h, 1e-12);
  const GridSpec s = centered_grid(1, 128, 2.0);
  const Field b = power_weight(s, 0.5, 1.0, 1.0);
  EXPECT_NEAR(b[64], origin_cell_average(1, 0.5, s.h), 1e-12);
  // d=2: h^(-beta) times the cube integral of |y|^(-beta).
  EXPECT_NEAR(origin_cell_average(2, 1.0, 0.1), std::pow(0.1, -1.0) * quadrature::unit_cube_kernel_integral(2, 1.0),
              1e-10);
}

TEST(PowerWeight, Errors) {
  const GridSpec s = centered_grid(1, 64, 2.0);
  EXPECT_THROW(power_weight(s, 0.5, 1.0, 1.5), Error);
  EXPECT_THROW(power_weight(s, 1.0, 1.0, 0.5), Error);
}

TEST(RandomWeight, DeterministicAndNonnegative) {
  const GridSpec s = centered_grid(2, 48, 4.0);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Field a = random_weight(seed, s, 0.25);
    const Field b = random_weight(seed, s, 0.25);
    for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i], b[i]);
    EXPECT_GE(a.min(), 0.0);
    // Normalized on a fixed reference lattice: the grid peak is floor + 1 up to sampling.
    EXPECT_NEAR(a.max_abs(), 1.05, 0.05);
    EXPECT_TRUE(std::isfinite(morrey_constant(a, 2.0, 0.5).A));
  }
}

TEST(RandomWeight, EmptyBoundaryBandAndFloor) {
  const GridSpec s = centered_grid(1, 256, 8.0);
  const Field w = random_weight(7, s, 0.25);
  const std::size_t band = boundary_band(s);
  EXPECT_EQ(band, 32u);
  for (std::size_t i = 0; i < band; ++i) {
    EXPECT_EQ(w[i], 0.0);
    EXPECT_EQ(w[s.size() - 1 - i], 0.0);
  }
  for (std::size_t i = band; i < s.size() - band; ++i) EXPECT_GE(w[i], 0.05);
}

TEST(RandomWeight, SameFunctionAcrossResolutions) {
  const Field coarse = random_weight(3, centered_grid(1, 128, 4.0), 0.25);
  const Field fine = random_weight(3, centered_grid(1, 256, 4.0), 0.25);
  // Point 64 of the coarse grid and point 128 of the fine grid both sit at x = 0.
  EXPECT_NEAR(coarse[64], fine[128], 1e-12);
  EXPECT_NEAR(coarse[80], fine[160], 1e-12);
}

TEST(Sources, GaussianAndRandom) {
  const GridSpec s = centered_grid(2, 32, 2.0);
  const Field g = gaussian_source(s, 0.2);
  EXPECT_DOUBLE_EQ(g[s.flatten(MultiIndex{16, 16, 0})], 1.0);
  const Field r1 = random_source(4, s);
  const Field r2 = random_source(4, s);
  const Field r3 = random_source(5, s);
  double diff = 0.0;
  for (std::size_t i = 0; i < r1.size(); ++i) {
    ASSERT_EQ(r1[i], r2[i]);
    diff = std::max(diff, std::abs(r1[i] - r3[i]));
  }
  EXPECT_GT(diff, 0.0);
  EXPECT_GE(r1.min(), 0.0);
}

TEST(Indicators, BallAndBox) {
  const GridSpec s = centered_grid(2, 40, 2.0);
  const Field ball = indicator_weight(s, 0.5);
  const Field box = box_weight(s, 0.5);
  double nb = 0.0;
  double nx = 0.0;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    nb += ball[i];
    nx += box[i];
  }
  EXPECT_NEAR(nb * s.h * s.h, M_PI * 0.25, 0.05);
  EXPECT_NEAR(nx * s.h * s.h, 1.0, 0.11);
}
