#include "rieszcheck/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rieszcheck/error.hpp"
#include "rieszcheck/families.hpp"

namespace rieszcheck {

SpectralBox::SpectralBox(const GridSpec& spec, int pad_factor) : spec_(spec), pad_(pad_factor) {
  spec.validate();
  if (pad_factor < 1) throw Error(ErrorCode::InvalidArgument, "pad factor must be >= 1");
  side_ = spec.n * static_cast<std::size_t>(pad_factor);
  fft_ = std::make_shared<const RealFft>(spec.d, side_);
}

double SpectralBox::frequency(std::int64_t k) const {
  return 2.0 * std::numbers::pi * static_cast<double>(k) /
         (static_cast<double>(side_) * spec_.h);
}

void SpectralBox::check_support(const Field& u) const {
  if (!(u.spec() == spec_)) throw Error(ErrorCode::InvalidArgument, "spectral box grid mismatch");
  if (!u.all_finite()) throw Error(ErrorCode::NonFiniteValue, "field contains non-finite values");
  if (periodic()) return;
  const double limit = 1e-12 * u.max_abs();
  const auto band = static_cast<std::int64_t>(boundary_band(spec_));
  const auto n = static_cast<std::int64_t>(spec_.n);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (std::abs(u[i]) <= limit) continue;
    const MultiIndex idx = spec_.unflatten(i);
    for (int a = 0; a < spec_.d; ++a) {
      if (idx[a] < band || idx[a] >= n - band) {
        throw Error(ErrorCode::InsufficientPadding, "insufficient padding");
      }
    }
  }
}

std::array<std::int64_t, 3> SpectralBox::mode(std::size_t flat) const {
  std::array<std::int64_t, 3> k{0, 0, 0};
  const auto side = static_cast<std::int64_t>(side_);
  const std::size_t last = side_ / 2 + 1;
  for (int a = spec_.d - 1; a >= 0; --a) {
    const std::size_t len = a == spec_.d - 1 ? last : side_;
    const auto idx = static_cast<std::int64_t>(flat % len);
    flat /= len;
    k[a] = (a == spec_.d - 1 || idx <= side / 2) ? idx : idx - side;
  }
  return k;
}

std::vector<std::complex<double>> SpectralBox::transform(const Field& u) const {
  check_support(u);
  GridSpec padded = spec_;
  padded.n = side_;
  std::vector<double> buf(fft_->real_size(), 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) buf[padded.flatten(spec_.unflatten(i))] = u[i];
  std::vector<std::complex<double>> spectrum(fft_->complex_size());
  fft_->forward(buf, spectrum);
  return spectrum;
}

Field SpectralBox::apply(const Field& u, const Symbol& symbol) const {
  auto spectrum = transform(u);
  for (std::size_t i = 0; i < spectrum.size(); ++i) spectrum[i] *= symbol(mode(i));
  std::vector<double> buf(fft_->real_size());
  fft_->inverse(spectrum, buf);
  GridSpec padded = spec_;
  padded.n = side_;
  const double norm = 1.0 / static_cast<double>(fft_->real_size());
  Field out(spec_);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = buf[padded.flatten(spec_.unflatten(i))] * norm;
  }
  return out;
}

Field SpectralBox::frac_laplacian(const Field& u, double alpha) const {
  if (!(alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  return apply(u, [&](const std::array<std::int64_t, 3>& k) {
    double xi2 = 0.0;
    for (int a = 0; a < spec_.d; ++a) xi2 += frequency(k[a]) * frequency(k[a]);
    return std::complex<double>(std::pow(xi2, 0.5 * alpha), 0.0);
  });
}

std::vector<Field> SpectralBox::gradient(const Field& u) const {
  std::vector<Field> out;
  const auto nyquist = static_cast<std::int64_t>(side_ / 2);
  const bool even = side_ % 2 == 0;
  for (int axis = 0; axis < spec_.d; ++axis) {
    out.push_back(apply(u, [&](const std::array<std::int64_t, 3>& k) {
      if (even && std::abs(k[axis]) == nyquist) return std::complex<double>(0.0, 0.0);
      return std::complex<double>(0.0, frequency(k[axis]));
    }));
  }
  return out;
}

Field SpectralBox::gradient_norm(const Field& u) const {
  const auto parts = gradient(u);
  Field out(spec_);
  for (std::size_t i = 0; i < out.size(); ++i) {
    double s = 0.0;
    for (const auto& p : parts) s += p[i] * p[i];
    out[i] = std::sqrt(s);
  }
  return out;
}

double SpectralBox::spectral_norm(const Field& u, double alpha) const {
  const auto spectrum = transform(u);
  const std::size_t last = side_ / 2 + 1;
  double total = 0.0;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const auto k = mode(i);
    double xi2 = 0.0;
    for (int a = 0; a < spec_.d; ++a) xi2 += frequency(k[a]) * frequency(k[a]);
    // Modes of the last axis other than 0 and Nyquist stand for a conjugate pair.
    const auto j = static_cast<std::size_t>(k[spec_.d - 1]);
    const double mult = (j == 0 || (side_ % 2 == 0 && j == last - 1)) ? 1.0 : 2.0;
    total += mult * std::pow(xi2, alpha) * std::norm(spectrum[i]);
  }
  const double count = static_cast<double>(fft_->real_size());
  return std::sqrt(total / count * spec_.cell_volume());
}

Field frac_laplacian(const Field& u, double alpha, int pad_factor) {
  return SpectralBox(u.spec(), pad_factor).frac_laplacian(u, alpha);
}

std::vector<Field> gradient(const Field& u, int pad_factor) {
  return SpectralBox(u.spec(), pad_factor).gradient(u);
}

Field gradient_norm(const Field& u, int pad_factor) {
  return SpectralBox(u.spec(), pad_factor).gradient_norm(u);
}

double riesz_inversion_constant(int d, double alpha) {
  if (d < 1 || d > 3) throw Error(ErrorCode::UnsupportedDimension, "unsupported dimension");
  if (!(alpha > 0.0) || !(alpha < d)) {
    throw Error(ErrorCode::InvalidArgument, "inversion constant needs 0 < alpha < d");
  }
  return std::tgamma(0.5 * (d - alpha)) /
         (std::pow(2.0, alpha) * std::pow(std::numbers::pi, 0.5 * d) * std::tgamma(0.5 * alpha));
}

}  // namespace rieszcheck
