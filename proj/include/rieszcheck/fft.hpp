#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace rieszcheck {

/// Real <-> half-complex transform on a cubic array of side `side` in
/// dimension d, row-major. The last axis is halved (side/2 + 1) in the
/// complex layout. The inverse is unnormalized (multiply by 1/size()).
///
/// Plans use FFTW_ESTIMATE so that repeated runs are bit-reproducible.
class RealFft {
 public:
  RealFft(int d, std::size_t side);
  ~RealFft();
  RealFft(RealFft&&) noexcept;
  RealFft& operator=(RealFft&&) noexcept;
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  int dimension() const;
  std::size_t side() const;
  std::size_t real_size() const;
  std::size_t complex_size() const;

  void forward(std::span<const double> in, std::span<std::complex<double>> out) const;
  void inverse(std::span<const std::complex<double>> in, std::span<double> out) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace rieszcheck
