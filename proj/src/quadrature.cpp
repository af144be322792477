#include "rieszcheck/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "rieszcheck/error.hpp"

namespace rieszcheck::quadrature {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

constexpr unsigned kMaxDepth = 15;
constexpr double kTolerance = 1e-14;

double face_integral(int d, double alpha) {
  const double e = 0.5 * (alpha - d);
  if (d == 1) return std::pow(0.25, e);
  if (d == 2) {
    auto f = [e](double t) { return std::pow(0.25 + t * t, e); };
    // Symmetric in t; integrate over [0, 1/2] and double.
    return 2.0 * Kronrod::integrate(f, 0.0, 0.5, kMaxDepth, kTolerance);
  }
  auto inner = [e](double t) {
    auto g = [e, t](double s) { return std::pow(0.25 + t * t + s * s, e); };
    return 2.0 * Kronrod::integrate(g, 0.0, 0.5, kMaxDepth, kTolerance);
  };
  return 2.0 * Kronrod::integrate(inner, 0.0, 0.5, kMaxDepth, kTolerance);
}

/// Upper incomplete gamma for any real order, through
/// Gamma(b, x) = (Gamma(b + 1, x) - x^b e^-x) / b for b < 0.
double upper_gamma(double b, double x) {
  if (b > 0.0) return boost::math::tgamma(b, x);
  if (b == 0.0) return boost::math::expint(1, x);
  return (upper_gamma(b + 1.0, x) - std::pow(x, b) * std::exp(-x)) / b;
}

}  // namespace

double unit_cube_kernel_integral(int d, double alpha) {
  if (d < 1 || d > 3) throw Error(ErrorCode::UnsupportedDimension, "unsupported dimension");
  if (!(alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  static std::mutex mutex;
  static std::map<std::pair<int, double>, double> cache;
  const std::lock_guard lock(mutex);
  const auto key = std::make_pair(d, alpha);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  // 2d faces, each the base of a pyramid with apex at 0 and height 1/2.
  const double value = (d / alpha) * face_integral(d, alpha);
  cache.emplace(key, value);
  return value;
}

double lattice_zeta(int d, double s) {
  if (d < 1 || d > 3) throw Error(ErrorCode::UnsupportedDimension, "unsupported dimension");
  if (!(s > 0.0) || s == static_cast<double>(d)) {
    throw Error(ErrorCode::InvalidArgument, "lattice_zeta needs s > 0, s != d");
  }
  using boost::math::tgamma;
  const double pi = std::numbers::pi;
  const double a = 0.5 * s;
  const double b = 0.5 * (d - s);
  // exp(-pi |k|^2) < 1e-40 beyond |k| = 6.
  constexpr int kRange = 6;
  double sum = 0.0;
  const int r1 = kRange;
  const int r2 = d > 1 ? kRange : 0;
  const int r3 = d > 2 ? kRange : 0;
  for (int i = -r1; i <= r1; ++i) {
    for (int j = -r2; j <= r2; ++j) {
      for (int k = -r3; k <= r3; ++k) {
        const int m = i * i + j * j + k * k;
        if (m == 0) continue;
        const double x = pi * m;
        sum += upper_gamma(a, x) * std::pow(x, -a) + upper_gamma(b, x) * std::pow(x, -b);
      }
    }
  }
  const double bracket = sum + 2.0 / (s - d) - 2.0 / s;
  return bracket * std::pow(pi, a) / tgamma(a);
}

GaussLegendre gauss_legendre(int count) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "gauss_legendre needs count >= 1");
  GaussLegendre rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  const double pi = std::numbers::pi;
  for (int i = 0; i < (count + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[count - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[count - 1 - i] = w;
  }
  return rule;
}

}  // namespace rieszcheck::quadrature
