#include "rieszcheck/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rieszcheck/error.hpp"
#include "rieszcheck/parallel.hpp"
#include "rieszcheck/quadrature.hpp"

namespace rieszcheck {

namespace {

void check_alpha(int d, double alpha) {
  if (!(alpha > 0.0) || !(alpha < d)) {
    throw Error(ErrorCode::InvalidArgument, "riesz potential needs 0 < alpha < d");
  }
}

void check_field(const Field& f) {
  if (!f.all_finite()) throw Error(ErrorCode::NonFiniteValue, "field contains non-finite values");
}

}  // namespace

std::string_view to_string(CentralWeight rule) {
  switch (rule) {
    case CentralWeight::LatticeZeta: return "zeta";
    case CentralWeight::CellIntegral: return "cell";
    case CentralWeight::Zero: return "midpoint";
  }
  return "unknown";
}

CentralWeight parse_central_weight(std::string_view name) {
  if (name == "zeta") return CentralWeight::LatticeZeta;
  if (name == "cell") return CentralWeight::CellIntegral;
  if (name == "midpoint") return CentralWeight::Zero;
  throw Error(ErrorCode::InvalidArgument, "unknown kernel rule: " + std::string(name));
}

double central_weight(int d, double alpha, double h, CentralWeight rule) {
  check_alpha(d, alpha);
  switch (rule) {
    case CentralWeight::LatticeZeta:
      return -quadrature::lattice_zeta(d, d - alpha) * std::pow(h, alpha);
    case CentralWeight::CellIntegral:
      if (d == 1) return 2.0 * std::pow(0.5 * h, alpha) / alpha;
      return quadrature::unit_cube_kernel_integral(d, alpha) * std::pow(h, alpha);
    case CentralWeight::Zero:
      return 0.0;
  }
  return 0.0;
}

RieszKernelTable::RieszKernelTable(const GridSpec& spec, double alpha, CentralWeight central)
    : spec_(spec), alpha_(alpha), central_(central) {
  spec.validate();
  check_alpha(spec.d, alpha);
  weights_.resize(spec.size());
  const double scale = std::pow(spec.h, alpha);
  const double e = 0.5 * (alpha - spec.d);
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const MultiIndex k = spec.unflatten(i);
    double m = 0.0;
    for (int a = 0; a < spec.d; ++a) m += static_cast<double>(k[a] * k[a]);
    weights_[i] = m == 0.0 ? 0.0 : scale * std::pow(m, e);
  }
  weights_[0] = rieszcheck::central_weight(spec.d, alpha, spec.h, central);
}

double RieszKernelTable::weight(const MultiIndex& k) const {
  return weights_[spec_.flatten(k)];
}

double RieszKernelTable::weight(std::int64_t a0, std::int64_t a1, std::int64_t a2) const {
  return weight(MultiIndex{a0, a1, a2});
}

Field riesz_direct(const Field& f, const RieszKernelTable& table) {
  const GridSpec& spec = f.spec();
  if (!(spec == table.spec())) throw Error(ErrorCode::InvalidArgument, "kernel table grid mismatch");
  check_field(f);
  Field out(spec);
  const std::size_t total = spec.size();
  // Nonzero source points only; keeps the per-point order fixed.
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < total; ++j) {
    if (f[j] != 0.0) support.push_back(j);
  }
  std::vector<MultiIndex> support_idx(support.size());
  for (std::size_t s = 0; s < support.size(); ++s) support_idx[s] = spec.unflatten(support[s]);
  auto values = out.mutable_values();
  parallel_for(total, [&](std::size_t i) {
    const MultiIndex xi = spec.unflatten(i);
    double sum = 0.0;
    for (std::size_t s = 0; s < support.size(); ++s) {
      const MultiIndex& yj = support_idx[s];
      MultiIndex k{0, 0, 0};
      for (int a = 0; a < spec.d; ++a) k[a] = std::abs(yj[a] - xi[a]);
      sum += table.weight(k) * f[support[s]];
    }
    values[i] = sum;
  });
  return out;
}

Field riesz_direct(const Field& f, double alpha, CentralWeight central) {
  return riesz_direct(f, RieszKernelTable(f.spec(), alpha, central));
}

RieszOperator::RieszOperator(const GridSpec& spec, double alpha, CentralWeight central)
    : spec_(spec), alpha_(alpha), central_(central) {
  const RieszKernelTable table(spec, alpha, central);
  const std::size_t n = spec.n;
  const std::size_t side = 2 * n;
  fft_ = std::make_shared<const RealFft>(spec.d, side);
  // Circulant embedding: offset k sits at index k mod 2n; index n stays 0.
  std::vector<double> kernel(fft_->real_size(), 0.0);
  GridSpec padded = spec;
  padded.n = side;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    const MultiIndex pos = padded.unflatten(i);
    MultiIndex k{0, 0, 0};
    bool inside = true;
    for (int a = 0; a < spec.d; ++a) {
      const auto p = pos[a];
      const auto nn = static_cast<std::int64_t>(n);
      if (p < nn) {
        k[a] = p;
      } else if (p > nn) {
        k[a] = 2 * nn - p;
      } else {
        inside = false;
      }
    }
    if (inside) kernel[i] = table.weight(k);
  }
  kernel_hat_.resize(fft_->complex_size());
  fft_->forward(kernel, kernel_hat_);
}

Field RieszOperator::apply(const Field& f) const {
  if (!(f.spec() == spec_)) throw Error(ErrorCode::InvalidArgument, "riesz operator grid mismatch");
  check_field(f);
  const std::size_t n = spec_.n;
  GridSpec padded = spec_;
  padded.n = 2 * n;
  std::vector<double> buf(fft_->real_size(), 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) buf[padded.flatten(spec_.unflatten(i))] = f[i];
  std::vector<std::complex<double>> spectrum(fft_->complex_size());
  fft_->forward(buf, spectrum);
  for (std::size_t i = 0; i < spectrum.size(); ++i) spectrum[i] *= kernel_hat_[i];
  fft_->inverse(spectrum, buf);
  const double norm = 1.0 / static_cast<double>(fft_->real_size());
  Field out(spec_);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = buf[padded.flatten(spec_.unflatten(i))] * norm;
  }
  return out;
}

Field riesz_fft(const Field& f, double alpha, CentralWeight central) {
  return RieszOperator(f.spec(), alpha, central).apply(f);
}

namespace {

/// Multilinear interpolation of grid samples; zero outside the sample range.
double interpolate(const Field& g, const Point& y) {
  const GridSpec& spec = g.spec();
  std::array<std::int64_t, 3> base{0, 0, 0};
  std::array<double, 3> frac{0.0, 0.0, 0.0};
  for (int a = 0; a < spec.d; ++a) {
    const double t = (y[a] - spec.origin[a]) / spec.h;
    const double fl = std::floor(t);
    base[a] = static_cast<std::int64_t>(fl);
    frac[a] = t - fl;
  }
  const int corners = 1 << spec.d;
  double sum = 0.0;
  for (int c = 0; c < corners; ++c) {
    MultiIndex idx{0, 0, 0};
    double w = 1.0;
    for (int a = 0; a < spec.d; ++a) {
      const int bit = (c >> a) & 1;
      idx[a] = base[a] + bit;
      w *= bit ? frac[a] : 1.0 - frac[a];
    }
    if (w != 0.0 && spec.contains(idx)) sum += w * g[spec.flatten(idx)];
  }
  return sum;
}

struct SphereRule {
  std::vector<Point> directions;
  std::vector<double> weights;
};

SphereRule sphere_rule(int d, int nodes) {
  SphereRule rule;
  const double pi = std::numbers::pi;
  if (d == 1) {
    rule.directions = {Point{1.0, 0.0, 0.0}, Point{-1.0, 0.0, 0.0}};
    rule.weights = {1.0, 1.0};
  } else if (d == 2) {
    const int m = nodes > 0 ? nodes : 256;
    for (int j = 0; j < m; ++j) {
      const double phi = 2.0 * pi * (j + 0.5) / m;
      rule.directions.push_back(Point{std::cos(phi), std::sin(phi), 0.0});
      rule.weights.push_back(2.0 * pi / m);
    }
  } else {
    const int polar = nodes > 0 ? std::max(2, static_cast<int>(std::sqrt(nodes / 2.0))) : 32;
    const int azimuth = 2 * polar;
    const auto gl = quadrature::gauss_legendre(polar);
    for (int i = 0; i < polar; ++i) {
      const double ct = gl.nodes[i];
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      for (int j = 0; j < azimuth; ++j) {
        const double phi = 2.0 * pi * (j + 0.5) / azimuth;
        rule.directions.push_back(Point{st * std::cos(phi), st * std::sin(phi), ct});
        rule.weights.push_back(gl.weights[i] * 2.0 * pi / azimuth);
      }
    }
  }
  return rule;
}

}  // namespace

double riesz_at_point_radial(const Field& g, double alpha, const Point& x, RadialOptions options) {
  const GridSpec& spec = g.spec();
  check_alpha(spec.d, alpha);
  check_field(g);
  if (!spec.box_contains(x)) throw Error(ErrorCode::InvalidArgument, "point lies outside the grid box");
  // Farthest sample point bounds the radius beyond which g vanishes.
  double reach = 0.0;
  for (int c = 0; c < (1 << spec.d); ++c) {
    MultiIndex corner{0, 0, 0};
    for (int a = 0; a < spec.d; ++a) {
      corner[a] = ((c >> a) & 1) ? static_cast<std::int64_t>(spec.n) : -1;
    }
    reach = std::max(reach, distance(x, spec.coordinate(corner), spec.d));
  }
  const auto shells = static_cast<std::size_t>(std::ceil(reach / spec.h)) + 1;
  const SphereRule rule = sphere_rule(spec.d, options.angular_nodes);
  const double h = spec.h;
  double total = 0.0;
  for (std::size_t k = 0; k < shells; ++k) {
    const double r_mid = (static_cast<double>(k) + 0.5) * h;
    double mean = 0.0;
    for (std::size_t j = 0; j < rule.directions.size(); ++j) {
      Point y = x;
      for (int a = 0; a < spec.d; ++a) y[a] += r_mid * rule.directions[j][a];
      mean += rule.weights[j] * interpolate(g, y);
    }
    const double lo = std::pow(static_cast<double>(k) * h, alpha);
    const double hi = std::pow(static_cast<double>(k + 1) * h, alpha);
    total += (hi - lo) / alpha * mean;
  }
  return total;
}

double adjoint_defect(const Field& f, const Field& g, double alpha, CentralWeight central) {
  if (!(f.spec() == g.spec())) throw Error(ErrorCode::InvalidArgument, "fields live on different grids");
  const RieszOperator op(f.spec(), alpha, central);
  const double left = inner_product(g, op.apply(f));
  const double right = inner_product(op.apply(g), f);
  const double denom = std::max(std::abs(left), std::numeric_limits<double>::min());
  return std::abs(left - right) / denom;
}

HolderSplitReport holder_split(const Field& g, const Field& h, double alpha, double a,
                               CentralWeight central) {
  if (!(g.spec() == h.spec())) throw Error(ErrorCode::InvalidArgument, "fields live on different grids");
  if (!g.is_nonnegative() || !h.is_nonnegative()) {
    throw Error(ErrorCode::InvalidArgument, "holder split needs nonnegative fields");
  }
  if (!(a > 1.0)) throw Error(ErrorCode::InvalidArgument, "holder split needs a > 1");
  const double a_conj = a / (a - 1.0);
  const RieszOperator op(g.spec(), alpha, central);
  const Field lhs = op.apply(multiply(g, h));
  const Field rg = op.apply(abs_pow(g, a));
  const Field rh = op.apply(abs_pow(h, a_conj));
  HolderSplitReport out;
  out.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const double rhs = std::pow(std::max(rg[i], 0.0), 1.0 / a) * std::pow(std::max(rh[i], 0.0), 1.0 / a_conj);
    const double slack = (rhs - lhs[i]) / std::max(rhs, 1.0);
    if (slack < out.min_slack) {
      out.min_slack = slack;
      out.worst_index = i;
    }
  }
  return out;
}

}  // namespace rieszcheck
