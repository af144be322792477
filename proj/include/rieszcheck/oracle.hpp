#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rieszcheck/grid.hpp"
#include "rieszcheck/morrey.hpp"
#include "rieszcheck/riesz.hpp"

namespace rieszcheck {

/// Largest point count the brute-force references accept.
inline constexpr std::size_t kOracleCap = std::size_t{1} << 16;

/// Literal sum over every cell of w(y - x) f(y) at grid point idx.
double riesz_bruteforce(const Field& f, const RieszKernelTable& table, const MultiIndex& idx);
double riesz_bruteforce(const Field& f, double alpha, const MultiIndex& idx,
                        CentralWeight central = CentralWeight::LatticeZeta);
double riesz_bruteforce(const Field& f, double alpha, const Point& x,
                        CentralWeight central = CentralWeight::LatticeZeta);

/// Maximum over every distinct discrete ball size of the centered average
/// at grid point idx; each ball is summed by a loop over all cells.
double maximal_bruteforce(const Field& f, const MultiIndex& idx);
double maximal_bruteforce(const Field& f, const Point& x);

/// Morrey constant over every grid center and every discrete ball.
double morrey_bruteforce(const Field& b, double p, double alpha,
                         MorreyConvention convention = MorreyConvention::Average);

/// -Delta_h u by centered second differences (zero outside the box).
Field negative_laplacian_fd(const Field& u);
/// Centered first difference along `axis` (zero outside the box).
Field central_difference(const Field& u, int axis);

struct OracleGateEntry {
  std::string name;
  int d = 1;
  std::size_t n = 0;
  std::size_t samples = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct OracleGateReport {
  std::vector<OracleGateEntry> entries;
  double seconds = 0.0;
  bool pass = false;
};

struct OracleGateOptions {
  std::size_t n1 = 256;
  std::size_t n2 = 48;
  int seeds = 10;
  int maximal_points = 20;
  std::uint64_t seed = 7;
};

/// Fast paths against the brute-force references: riesz_fft on random
/// fields and the full-ladder maximal operator at sampled points.
OracleGateReport run_oracle_gate(const OracleGateOptions& options = {});

}  // namespace rieszcheck
