#include <gtest/gtest.h>

#include <cmath>

#include "rieszcheck/quadrature.hpp"

using namespace rieszcheck::quadrature;

// Reference values from independent multiprecision evaluations.

TEST(LatticeZeta, OneDimensionIsTwiceRiemannZeta) {
  EXPECT_NEAR(lattice_zeta(1, 0.5), -2.92070901761917, 1e-12);
}

TEST(LatticeZeta, TwoDimensions) {
  EXPECT_NEAR(lattice_zeta(2, 1.5), -10.0775594787932, 1e-11);
  EXPECT_NEAR(lattice_zeta(2, 1.0), -3.90026492000196, 1e-11);
  EXPECT_NEAR(lattice_zeta(2, 0.5), -1.92168922117993, 1e-11);
}

TEST(LatticeZeta, ThreeDimensions) {
  EXPECT_NEAR(lattice_zeta(3, 1.0), -2.83729747948062, 1e-10);
  EXPECT_NEAR(lattice_zeta(3, 2.5), -21.3915340983343, 1e-9);
}

TEST(LatticeZeta, ConvergentRegionMatchesDirectSum) {
  // s > d: the sum converges; compare with a truncated sum plus tail integral.
  const double s = 4.0;
  double sum = 0.0;
  const int R = 200;
  for (int i = -R; i <= R; ++i) {
    for (int j = -R; j <= R; ++j) {
      const int m = i * i + j * j;
      if (m == 0 || m > R * R) continue;
      sum += std::pow(m, -0.5 * s);
    }
  }
  sum += 2.0 * M_PI * std::pow(R, 2.0 - s) / (s - 2.0);
  EXPECT_NEAR(lattice_zeta(2, s), sum, 1e-5);
}

TEST(CubeIntegral, TwoDimensions) {
  EXPECT_NEAR(unit_cube_kernel_integral(2, 0.5), 9.40051758278055, 1e-11);
  EXPECT_NEAR(unit_cube_kernel_integral(2, 1.0), 3.52549434807817, 1e-11);
  EXPECT_NEAR(unit_cube_kernel_integral(2, 1.5), 1.76774762678945, 1e-11);
}

TEST(CubeIntegral, ThreeDimensions) {
  EXPECT_NEAR(unit_cube_kernel_integral(3, 1.5), 4.021392044755755, 1e-9);
  EXPECT_NEAR(unit_cube_kernel_integral(3, 2.0), 2.3800773639795536, 1e-9);
  EXPECT_NEAR(unit_cube_kernel_integral(3, 2.7), 1.274024839014092, 1e-9);
}

TEST(CubeIntegral, OneDimensionClosedForm) {
  for (double a : {0.25, 0.5, 0.75}) {
    EXPECT_NEAR(unit_cube_kernel_integral(1, a), 2.0 * std::pow(0.5, a) / a, 1e-12);
  }
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  const auto rule = gauss_legendre(8);
  for (int k = 0; k <= 15; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
    const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
    EXPECT_NEAR(s, exact, 1e-14);
  }
}
