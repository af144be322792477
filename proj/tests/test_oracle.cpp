#include <gtest/gtest.h>

#include <cmath>

#include "rieszcheck/error.hpp"
#include "rieszcheck/families.hpp"
#include "rieszcheck/oracle.hpp"
#include "test_util.hpp"

using namespace rieszcheck;
using rieszcheck::testing::constant_field;

TEST(Oracle, ZeroFields) {
  const GridSpec s = centered_grid(1, 64, 2.0);
  EXPECT_EQ(riesz_bruteforce(Field(s), 0.5, MultiIndex{10, 0, 0}), 0.0);
  EXPECT_EQ(maximal_bruteforce(Field(s), MultiIndex{10, 0, 0}), 0.0);
  EXPECT_EQ(morrey_bruteforce(Field(s), 2.0, 0.25), 0.0);
}

TEST(Oracle, ConstantMaximal) {
  const GridSpec s = centered_grid(2, 12, 1.0);
  EXPECT_EQ(maximal_bruteforce(constant_field(s, 1.25), MultiIndex{3, 7, 0}), 1.25);
}

TEST(Oracle, IndicatorPotentialAtOrigin) {
  const GridSpec s = centered_grid(1, 256, 2.0);
  const double v = riesz_bruteforce(indicator_weight(s, 0.5), 0.5, Point{0.0, 0.0, 0.0});
  EXPECT_NEAR(v / (2.0 * std::sqrt(0.5) / 0.5), 1.0, 0.02);
}

TEST(Oracle, IndicatorMaximalContinuumValue) {
  const GridSpec s = centered_grid(1, 256, 4.0);
  const double rho = 0.25;
  const Field f = indicator_weight(s, rho);
  const double v = maximal_bruteforce(f, Point{1.0, 0.0, 0.0});
  EXPECT_NEAR(v, rho / (1.0 + rho), 4.0 * s.h);
}

TEST(Oracle, SizeCap) {
  const GridSpec s = centered_grid(2, 300, 1.0);
  EXPECT_THROW(riesz_bruteforce(Field(s), 0.5, MultiIndex{0, 0, 0}), Error);
}

TEST(Oracle, FiniteDifferences) {
  const GridSpec s = centered_grid(1, 64, 2.0);
  const Field u = sample(s, [](const Point& x) { return x[0] * x[0]; });
  const Field lap = negative_laplacian_fd(u);
  const Field du = central_difference(u, 0);
  for (std::size_t i = 1; i + 1 < s.n; ++i) {
    EXPECT_NEAR(lap[i], -2.0, 1e-10);
    EXPECT_NEAR(du[i], 2.0 * s.coordinate(i)[0], 1e-12);
  }
}

TEST(OracleGate, SmallGatePasses) {
  OracleGateOptions opt;
  opt.n1 = 64;
  opt.n2 = 16;
  opt.seeds = 2;
  opt.maximal_points = 5;
  const auto gate = run_oracle_gate(opt);
  EXPECT_TRUE(gate.pass);
  EXPECT_EQ(gate.entries.size(), 4u);
  for (const auto& e : gate.entries) EXPECT_LE(e.max_deviation, e.tolerance);
}
