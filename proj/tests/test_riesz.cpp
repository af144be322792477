#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rieszcheck/error.hpp"
#include "rieszcheck/families.hpp"
#include "rieszcheck/oracle.hpp"
#include "rieszcheck/quadrature.hpp"
#include "rieszcheck/riesz.hpp"
#include "test_util.hpp"

using namespace rieszcheck;
using rieszcheck::testing::compact_field;
using rieszcheck::testing::max_abs_diff;
using rieszcheck::testing::uniform_field;

namespace {

double potential_at_origin(int d, std::size_t n, double alpha, double R) {
  const GridSpec s = centered_grid(d, n, 2.0);
  const Field f = indicator_weight(s, R);
  const Field v = riesz_fft(f, alpha);
  MultiIndex origin{0, 0, 0};
  for (int a = 0; a < d; ++a) origin[a] = static_cast<std::int64_t>(n / 2);
  return v[s.flatten(origin)];
}

}  // namespace

TEST(RieszKernel, CentralWeightRules) {
  const double h = 0.01;
  EXPECT_NEAR(central_weight(1, 0.5, h, CentralWeight::LatticeZeta), 2.92070901761917 * std::sqrt(h), 1e-13);
  EXPECT_NEAR(central_weight(1, 0.5, h, CentralWeight::CellIntegral), 2.0 * std::sqrt(0.5 * h) / 0.5, 1e-15);
  EXPECT_NEAR(central_weight(2, 1.0, h, CentralWeight::CellIntegral), 3.52549434807817 * h, 1e-13);
  EXPECT_EQ(central_weight(2, 1.0, h, CentralWeight::Zero), 0.0);
  EXPECT_GT(central_weight(2, 1.5, h, CentralWeight::LatticeZeta), 0.0);
}

TEST(RieszKernel, OffCenterWeightsAreMidpointValues) {
  const GridSpec s = centered_grid(2, 16, 1.0);
  const RieszKernelTable t(s, 0.5);
  const double h = s.h;
  EXPECT_NEAR(t.weight(3, 4, 0), std::pow(5.0 * h, 0.5 - 2.0) * h * h, 1e-15);
  EXPECT_EQ(t.weight(0, 0, 0), t.central_weight());
}

TEST(RieszKernel, ParseRules) {
  EXPECT_EQ(parse_central_weight("cell"), CentralWeight::CellIntegral);
  EXPECT_EQ(to_string(CentralWeight::Zero), "midpoint");
  EXPECT_THROW(parse_central_weight("exact"), Error);
}

TEST(RieszDirect, ZeroFieldGivesZero) {
  const GridSpec s = centered_grid(2, 12, 1.0);
  EXPECT_TRUE(riesz_direct(Field(s), 0.5).is_zero());
  EXPECT_TRUE(riesz_fft(Field(s), 0.5).is_zero());
}

TEST(RieszDirect, RejectsBadAlphaAndNonFinite) {
  const GridSpec s = centered_grid(1, 16, 1.0);
  EXPECT_THROW(riesz_direct(Field(s), 1.0), Error);
  EXPECT_THROW(riesz_fft(Field(s), 0.0), Error);
  Field f(s);
  f[3] = std::numeric_limits<double>::infinity();
  EXPECT_THROW(riesz_fft(f, 0.5), Error);
}

TEST(RieszDirect, IndicatorAtOriginOneDimension) {
  const double alpha = 0.5;
  const double R = 0.5;
  const double exact = 2.0 * std::pow(R, alpha) / alpha;
  const double e256 = std::abs(potential_at_origin(1, 256, alpha, R) / exact - 1.0);
  const double e512 = std::abs(potential_at_origin(1, 512, alpha, R) / exact - 1.0);
  EXPECT_LE(e256, 0.02);
  EXPECT_LT(e512, e256);
}

TEST(RieszDirect, IndicatorAtOriginTwoDimensions) {
  const double alpha = 1.0;
  const double R = 0.5;
  const double exact = 2.0 * std::numbers::pi * std::pow(R, alpha) / alpha;
  const double e128 = std::abs(potential_at_origin(2, 128, alpha, R) / exact - 1.0);
  const double e256 = std::abs(potential_at_origin(2, 256, alpha, R) / exact - 1.0);
  EXPECT_LE(e256, 0.02);
  EXPECT_LT(e256, e128);
}

TEST(RieszDirect, MatchesBruteForceTwoDimensions) {
  const GridSpec s = centered_grid(2, 20, 2.0);
  const Field f = compact_field(s, 4, 3);
  const RieszKernelTable table(s, 0.7);
  const Field v = riesz_direct(f, table);
  for (std::size_t i = 0; i < v.size(); i += 7) {
    const double ref = riesz_bruteforce(f, table, s.unflatten(i));
    EXPECT_NEAR(v[i], ref, 1e-10 * std::abs(ref));
  }
}

TEST(RieszFft, MatchesDirectOneDimension) {
  const GridSpec s = centered_grid(1, 512, 3.0);
  for (std::uint64_t seed : {1, 2, 3}) {
    const Field f = uniform_field(s, seed);
    for (auto rule : {CentralWeight::LatticeZeta, CentralWeight::CellIntegral, CentralWeight::Zero}) {
      const Field a = riesz_fft(f, 0.3, rule);
      const Field b = riesz_direct(f, 0.3, rule);
      EXPECT_LE(max_abs_diff(a, b), 1e-10 * b.max_abs());
    }
  }
}

TEST(RieszFft, MatchesDirectThreeDimensions) {
  const GridSpec s = centered_grid(3, 10, 1.0);
  const Field f = uniform_field(s, 8);
  const Field a = riesz_fft(f, 1.5);
  const Field b = riesz_direct(f, 1.5);
  EXPECT_LE(max_abs_diff(a, b), 1e-10 * b.max_abs());
}

TEST(RieszFft, TranslationEquivariance) {
  const GridSpec s = centered_grid(2, 32, 2.0);
  const Field f = compact_field(s, 5, 4);
  const RieszOperator op(s, 0.8);
  const Field shifted_out = shift(op.apply(f), 0, 1);
  const Field out_shifted = op.apply(shift(f, 0, 1));
  // Compare away from the face the shift fills with zeros.
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (s.unflatten(i)[0] == 0) continue;
    EXPECT_NEAR(shifted_out[i], out_shifted[i], 1e-10 * out_shifted.max_abs());
  }
}

TEST(RieszFft, LinearAndPositive) {
  const GridSpec s = centered_grid(1, 128, 2.0);
  const Field f = uniform_field(s, 1);
  const Field g = uniform_field(s, 2);
  const RieszOperator op(s, 0.4);
  const Field lhs = op.apply(add(scale(f, 2.0), g));
  const Field rhs = add(scale(op.apply(f), 2.0), op.apply(g));
  EXPECT_LE(max_abs_diff(lhs, rhs), 1e-12 * rhs.max_abs());
  EXPECT_GT(op.apply(f).min(), 0.0);
}

TEST(RieszRadial, ZeroField) {
  const GridSpec s = centered_grid(2, 32, 2.0);
  EXPECT_EQ(riesz_at_point_radial(Field(s), 0.5, Point{0.0, 0.0, 0.0}), 0.0);
}

TEST(RieszRadial, ConstantOnBallTwoDimensions) {
  const GridSpec s = centered_grid(2, 128, 2.0);
  const double c = 1.5;
  const double R = 0.5;
  const double alpha = 1.0;
  const Field g = scale(indicator_weight(s, R), c);
  const double v = riesz_at_point_radial(g, alpha, Point{0.0, 0.0, 0.0});
  const double exact = c * 2.0 * std::numbers::pi * std::pow(R, alpha) / alpha;
  EXPECT_NEAR(v / exact, 1.0, 0.02);
}

TEST(RieszRadial, PowerWeightAgreesWithDirect) {
  const GridSpec s = centered_grid(1, 512, 2.0);
  const Field g = power_weight(s, 0.3, 1.0, 0.9);
  const double radial = riesz_at_point_radial(g, 0.5, Point{0.5, 0.0, 0.0});
  const double direct = riesz_bruteforce(g, 0.5, MultiIndex{384, 0, 0});
  EXPECT_NEAR(radial / direct, 1.0, 0.03);
}

TEST(RieszRadial, ConvergesToDirect) {
  // Smooth compact g; the gap to the lattice sum shrinks under refinement.
  auto gap = [](std::size_t n) {
    const GridSpec s = centered_grid(2, n, 2.0);
    const Field g = gaussian_source(s, 0.15);
    const double radial = riesz_at_point_radial(g, 1.0, Point{0.1, 0.05, 0.0});
    const double direct = riesz_bruteforce(g, 1.0, Point{0.1, 0.05, 0.0});
    return std::abs(radial - direct);
  };
  const double g1 = gap(32);
  const double g2 = gap(64);
  EXPECT_LT(g2, g1);
  EXPECT_GE(std::log2(g1 / g2), 1.0);
}

TEST(RieszRadial, RejectsPointOutsideBox) {
  const GridSpec s = centered_grid(1, 32, 2.0);
  EXPECT_THROW(riesz_at_point_radial(Field(s), 0.5, Point{3.0, 0.0, 0.0}), Error);
}

TEST(RieszAdjoint, IdenticalArgumentsGiveZero) {
  const GridSpec s = centered_grid(2, 24, 2.0);
  const Field f = uniform_field(s, 3);
  EXPECT_EQ(adjoint_defect(f, f, 0.5), 0.0);
}

TEST(RieszAdjoint, OneDimensionRandom) {
  const GridSpec s = centered_grid(1, 256, 2.0);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    EXPECT_LE(adjoint_defect(uniform_field(s, seed), uniform_field(s, seed + 100), 0.5), 1e-12);
  }
}

TEST(RieszAdjoint, TwoDimensionsRandom) {
  const GridSpec s = centered_grid(2, 64, 2.0);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    EXPECT_LE(adjoint_defect(uniform_field(s, seed, -1.0, 1.0), uniform_field(s, seed + 50, -1.0, 1.0), 1.2), 1e-10);
  }
}

TEST(RieszAdjoint, RejectsMismatchedGrids) {
  EXPECT_THROW(adjoint_defect(Field(centered_grid(1, 8, 1.0)), Field(centered_grid(1, 16, 1.0)), 0.5), Error);
}

TEST(RieszHolderSplit, HoldsOnRandomPairs) {
  const GridSpec s = centered_grid(2, 32, 2.0);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto r = holder_split(uniform_field(s, seed), uniform_field(s, seed + 40), 0.7, 1.5);
    EXPECT_GE(r.min_slack, -1e-12);
  }
}

TEST(RieszHolderSplit, EqualityForProportionalPowers) {
  // g^a proportional to h^a' makes Hoelder sharp at every point.
  const GridSpec s = centered_grid(1, 64, 2.0);
  const Field h = uniform_field(s, 3, 0.5, 1.0);
  const double a = 2.0;
  const Field g = h;
  const auto r = holder_split(g, h, 0.5, a);
  EXPECT_NEAR(r.min_slack, 0.0, 1e-12);
}

TEST(RieszHolderSplit, RejectsNegativeFields) {
  const GridSpec s = centered_grid(1, 16, 1.0);
  EXPECT_THROW(holder_split(uniform_field(s, 1, -1.0, 1.0), uniform_field(s, 2), 0.5, 2.0), Error);
}
