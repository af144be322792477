#include "rieszcheck/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rieszcheck/error.hpp"

namespace rieszcheck {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::InvalidParams: return "invalid parameters";
    case ErrorCode::BadMagic: return "bad magic";
    case ErrorCode::UnsupportedDimension: return "unsupported dimension";
    case ErrorCode::UnsupportedShape: return "unsupported shape";
    case ErrorCode::TruncatedPayload: return "truncated payload";
    case ErrorCode::NonFiniteValue: return "non-finite value";
    case ErrorCode::IoFailure: return "i/o failure";
    case ErrorCode::DegenerateWeight: return "degenerate weight";
    case ErrorCode::InsufficientPadding: return "insufficient padding";
    case ErrorCode::SizeGuard: return "size guard exceeded";
    case ErrorCode::ConfigError: return "config error";
    case ErrorCode::InternalError: return "internal error";
  }
  return "unknown";
}

std::vector<std::string> ParamWarnings::messages() const {
  std::vector<std::string> out;
  if (p_exceeds_d) out.emplace_back("p > d");
  if (p_alpha_ge_d) out.emplace_back("p*alpha >= d");
  return out;
}

namespace {

[[noreturn]] void reject(const std::string& what) {
  throw Error(ErrorCode::InvalidParams, what);
}

}  // namespace

double choose_gamma(double r, double p) {
  if (!(r > 1.0) || !(p > r)) reject("choose_gamma requires 1 < r < p");
  const double r_conj = r / (r - 1.0);
  return std::min({(p - r) / r, (p - 1.0) / r_conj, r - 1.0});
}

ExponentParams validate_params(int d, double alpha, double r, double p,
                               std::optional<double> q) {
  for (double v : {alpha, r, p}) {
    if (!std::isfinite(v)) reject("parameters must be finite");
  }
  if (d < 1 || d > 3) reject("unsupported dimension: d must be 1, 2 or 3");
  if (!(alpha > 0.0)) reject("alpha must be positive");
  if (!(alpha < d)) reject("alpha must be smaller than d");
  if (!(r > 1.0)) reject("r must exceed 1");
  if (!(p > r)) {
    std::ostringstream os;
    os << "p <= r violated (p=" << p << ", r=" << r << ")";
    reject(os.str());
  }
  if (alpha > r) reject("alpha <= r violated");

  ExponentParams out;
  out.d = d;
  out.alpha = alpha;
  out.r = r;
  out.p = p;
  out.q = q.value_or(0.5 * (1.0 + p));
  if (!std::isfinite(out.q) || !(out.q > 1.0) || out.q > p) {
    reject("q must satisfy 1 < q <= p");
  }
  out.r_conj = r / (r - 1.0);
  out.gamma = choose_gamma(r, p);
  out.p0 = 0.5 * (r + p);
  out.p1 = 0.5 * (r + out.p0);
  out.warnings.p_exceeds_d = p > d;
  out.warnings.p_alpha_ge_d = p * alpha >= d;
  return out;
}

}  // namespace rieszcheck
