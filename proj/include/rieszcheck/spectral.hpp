#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "rieszcheck/fft.hpp"
#include "rieszcheck/grid.hpp"

namespace rieszcheck {

/// Periodic surrogate for whole-space Fourier multipliers. Inputs are
/// zero-padded to pad_factor * n points per axis, transformed, multiplied
/// and cropped back. pad_factor 1 is the plain periodic box on the grid
/// itself; it skips the support check and exists for eigenfunction tests.
class SpectralBox {
 public:
  explicit SpectralBox(const GridSpec& spec, int pad_factor = 2);

  const GridSpec& spec() const { return spec_; }
  int pad_factor() const { return pad_; }
  bool periodic() const { return pad_ == 1; }
  std::size_t padded_side() const { return side_; }

  /// Angular frequency 2 pi k / (side h) of signed mode index k.
  double frequency(std::int64_t k) const;

  /// Throws InsufficientPadding when |u| on the n/8 boundary band exceeds
  /// 1e-12 max|u|. No-op in periodic mode.
  void check_support(const Field& u) const;

  /// Symbol |xi|^alpha.
  Field frac_laplacian(const Field& u, double alpha) const;
  /// Symbol i xi_a per axis; the Nyquist mode is dropped.
  std::vector<Field> gradient(const Field& u) const;
  /// Pointwise Euclidean norm of the gradient.
  Field gradient_norm(const Field& u) const;
  /// (sum over modes |xi|^(2 alpha) |u_hat|^2)^(1/2) scaled to the L2 norm
  /// on the padded box; equals the L2 norm of the uncropped multiplier output.
  double spectral_norm(const Field& u, double alpha) const;

 private:
  using Symbol = std::function<std::complex<double>(const std::array<std::int64_t, 3>&)>;
  std::vector<std::complex<double>> transform(const Field& u) const;
  Field apply(const Field& u, const Symbol& symbol) const;
  std::array<std::int64_t, 3> mode(std::size_t flat) const;

  GridSpec spec_;
  int pad_;
  std::size_t side_;
  std::shared_ptr<const RealFft> fft_;
};

Field frac_laplacian(const Field& u, double alpha, int pad_factor = 2);
std::vector<Field> gradient(const Field& u, int pad_factor = 2);
Field gradient_norm(const Field& u, int pad_factor = 2);

/// c(d, alpha) = Gamma((d - alpha)/2) / (2^alpha pi^(d/2) Gamma(alpha/2)), so
/// that c R_alpha (-Delta)^(alpha/2) u = u for the bare kernel |y|^(alpha-d).
double riesz_inversion_constant(int d, double alpha);

}  // namespace rieszcheck
