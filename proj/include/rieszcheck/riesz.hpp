#pragma once

#include <complex>
#include <memory>
#include <string_view>
#include <vector>

#include "rieszcheck/fft.hpp"
#include "rieszcheck/grid.hpp"

namespace rieszcheck {

/// Rule for the quadrature weight of the singular cell of |y|^(alpha-d).
enum class CentralWeight {
  /// -Z_d(d - alpha) h^alpha: removes the leading h^alpha error term of the
  /// punctured lattice sum (generalized Euler-Maclaurin). Default.
  LatticeZeta,
  /// Exact integral of |y|^(alpha-d) over the central cell [-h/2, h/2]^d.
  CellIntegral,
  /// Pure midpoint rule with the singular cell dropped.
  Zero,
};

std::string_view to_string(CentralWeight rule);
CentralWeight parse_central_weight(std::string_view name);

/// Weight assigned to the zero offset under `rule`.
double central_weight(int d, double alpha, double h, CentralWeight rule);

/// Quadrature weights w(k) of the kernel |y|^(alpha-d) for lattice offsets
/// k. Off-center weights are midpoint values |k h|^(alpha-d) h^d; the table
/// is stored over absolute offsets so w(k) = w(-k) holds by construction.
class RieszKernelTable {
 public:
  RieszKernelTable(const GridSpec& spec, double alpha,
                   CentralWeight central = CentralWeight::LatticeZeta);

  const GridSpec& spec() const { return spec_; }
  double alpha() const { return alpha_; }
  CentralWeight central() const { return central_; }
  double central_weight() const { return weights_.front(); }

  /// Weight for the offset whose components are |k_0|, ..., |k_{d-1}| (< n).
  double weight(const MultiIndex& abs_offset) const;
  double weight(std::int64_t a0, std::int64_t a1, std::int64_t a2) const;

 private:
  GridSpec spec_;
  double alpha_;
  CentralWeight central_;
  std::vector<double> weights_;
};

/// R_alpha by direct summation v(x) = sum_y w(y - x) f(y); values off the
/// grid are treated as zero. O(N^2); parallel over output points.
Field riesz_direct(const Field& f, const RieszKernelTable& table);
Field riesz_direct(const Field& f, double alpha,
                   CentralWeight central = CentralWeight::LatticeZeta);

/// Same operator through zero-padded linear convolution. The kernel
/// spectrum is computed once per instance, so repeated applications on
/// one grid are cheap.
class RieszOperator {
 public:
  RieszOperator(const GridSpec& spec, double alpha,
                CentralWeight central = CentralWeight::LatticeZeta);

  const GridSpec& spec() const { return spec_; }
  double alpha() const { return alpha_; }
  CentralWeight central() const { return central_; }

  Field apply(const Field& f) const;

 private:
  GridSpec spec_;
  double alpha_;
  CentralWeight central_;
  std::shared_ptr<const RealFft> fft_;
  std::vector<std::complex<double>> kernel_hat_;
};

Field riesz_fft(const Field& f, double alpha,
                CentralWeight central = CentralWeight::LatticeZeta);

struct RadialOptions {
  /// Angular nodes per shell; 0 picks the default for the dimension
  /// (d=2: 256 equispaced angles, d=3: 32 Gauss-Legendre x 64 azimuths).
  int angular_nodes = 0;
};

/// R_alpha g(x) through the polar form
///   int_0^inf r^(alpha-1) int_{S^(d-1)} g(x + r theta) dsigma dr,
/// with shells [kh, (k+1)h], exact radial weights ((k+1)^alpha - k^alpha) h^alpha / alpha,
/// the spherical mean sampled at the shell midpoint by multilinear
/// interpolation. Throws when x lies outside the grid box.
double riesz_at_point_radial(const Field& g, double alpha, const Point& x,
                             RadialOptions options = {});

/// |<g, R f> - <R g, f>| / max(|<g, R f>|, tiny).
double adjoint_defect(const Field& f, const Field& g, double alpha,
                      CentralWeight central = CentralWeight::LatticeZeta);

struct HolderSplitReport {
  /// min over grid points of (rhs - lhs) / max(rhs, 1); negative means a violation.
  double min_slack = 0.0;
  std::size_t worst_index = 0;
};

/// Pointwise R(g h) <= R(g^a)^(1/a) R(h^a')^(1/a') for nonnegative g, h and
/// a > 1 with a' = a/(a-1). Holds exactly for nonnegative kernel weights.
HolderSplitReport holder_split(const Field& g, const Field& h, double alpha, double a,
                               CentralWeight central = CentralWeight::LatticeZeta);

}  // namespace rieszcheck
