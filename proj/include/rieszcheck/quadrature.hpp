#pragma once

#include <vector>

namespace rieszcheck::quadrature {

/// Integral of |y|^(alpha-d) over the unit cube [-1/2, 1/2]^d, for
/// 0 < alpha (alpha < d keeps the integrand singular at 0 but integrable).
/// Computed through the cone-over-faces identity
///   (d/alpha) * int_{[-1/2,1/2]^(d-1)} (1/4 + |t|^2)^((alpha-d)/2) dt,
/// whose integrand is smooth, with adaptive Gauss-Kronrod. Results are cached.
double unit_cube_kernel_integral(int d, double alpha);

/// Analytic continuation of the lattice sum Z_d(s) = sum_{k in Z^d, k != 0} |k|^(-s)
/// for 0 < s < d (and beyond), by the theta-function splitting
///   Gamma(s/2) pi^(-s/2) Z_d(s) = sum' [ G(s/2, pi|k|^2) + G((d-s)/2, pi|k|^2) ]
///                                 + 2/(s-d) - 2/s,
/// with G(a, x) = x^(-a) Gamma(a, x). For d = 1 this is 2 zeta(s).
double lattice_zeta(int d, double s);

struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1] with `count` nodes.
GaussLegendre gauss_legendre(int count);

}  // namespace rieszcheck::quadrature
