#include "rieszcheck/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <mutex>

#include "rieszcheck/error.hpp"

namespace rieszcheck {

namespace {

// The FFTW planner is not thread safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

}  // namespace

struct RealFft::Impl {
  int d = 1;
  std::size_t side = 0;
  std::size_t real_size = 0;
  std::size_t complex_size = 0;
  std::unique_ptr<double, FftwFree> real_buf;
  std::unique_ptr<fftw_complex, FftwFree> complex_buf;
  fftw_plan forward_plan = nullptr;
  fftw_plan inverse_plan = nullptr;
  mutable std::mutex exec_mutex;

  ~Impl() {
    const std::lock_guard lock(planner_mutex());
    if (forward_plan) fftw_destroy_plan(forward_plan);
    if (inverse_plan) fftw_destroy_plan(inverse_plan);
  }
};

RealFft::RealFft(int d, std::size_t side) : impl_(std::make_unique<Impl>()) {
  if (d < 1 || d > 3) throw Error(ErrorCode::UnsupportedDimension, "unsupported dimension");
  if (side < 2) throw Error(ErrorCode::InvalidArgument, "fft side must be >= 2");
  impl_->d = d;
  impl_->side = side;
  std::array<int, 3> dims{};
  impl_->real_size = 1;
  impl_->complex_size = 1;
  for (int k = 0; k < d; ++k) {
    dims[k] = static_cast<int>(side);
    impl_->real_size *= side;
    impl_->complex_size *= (k == d - 1) ? side / 2 + 1 : side;
  }
  impl_->real_buf.reset(static_cast<double*>(fftw_malloc(sizeof(double) * impl_->real_size)));
  impl_->complex_buf.reset(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * impl_->complex_size)));
  if (!impl_->real_buf || !impl_->complex_buf) {
    throw Error(ErrorCode::InternalError, "fftw_malloc failed");
  }
  const std::lock_guard lock(planner_mutex());
  impl_->forward_plan = fftw_plan_dft_r2c(d, dims.data(), impl_->real_buf.get(),
                                          impl_->complex_buf.get(), FFTW_ESTIMATE);
  impl_->inverse_plan = fftw_plan_dft_c2r(d, dims.data(), impl_->complex_buf.get(),
                                          impl_->real_buf.get(), FFTW_ESTIMATE);
  if (!impl_->forward_plan || !impl_->inverse_plan) {
    throw Error(ErrorCode::InternalError, "fftw planning failed");
  }
}

RealFft::~RealFft() = default;
RealFft::RealFft(RealFft&&) noexcept = default;
RealFft& RealFft::operator=(RealFft&&) noexcept = default;

int RealFft::dimension() const { return impl_->d; }
std::size_t RealFft::side() const { return impl_->side; }
std::size_t RealFft::real_size() const { return impl_->real_size; }
std::size_t RealFft::complex_size() const { return impl_->complex_size; }

void RealFft::forward(std::span<const double> in, std::span<std::complex<double>> out) const {
  if (in.size() != impl_->real_size || out.size() != impl_->complex_size) {
    throw Error(ErrorCode::InvalidArgument, "fft buffer size mismatch");
  }
  const std::lock_guard lock(impl_->exec_mutex);
  std::copy(in.begin(), in.end(), impl_->real_buf.get());
  fftw_execute(impl_->forward_plan);
  std::memcpy(static_cast<void*>(out.data()), impl_->complex_buf.get(),
              sizeof(fftw_complex) * impl_->complex_size);
}

void RealFft::inverse(std::span<const std::complex<double>> in, std::span<double> out) const {
  if (in.size() != impl_->complex_size || out.size() != impl_->real_size) {
    throw Error(ErrorCode::InvalidArgument, "fft buffer size mismatch");
  }
  const std::lock_guard lock(impl_->exec_mutex);
  std::memcpy(impl_->complex_buf.get(), static_cast<const void*>(in.data()),
              sizeof(fftw_complex) * impl_->complex_size);
  fftw_execute(impl_->inverse_plan);
  std::copy(impl_->real_buf.get(), impl_->real_buf.get() + impl_->real_size, out.begin());
}

}  // namespace rieszcheck
