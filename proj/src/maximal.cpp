#include "rieszcheck/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rieszcheck/error.hpp"
#include "rieszcheck/fft.hpp"

namespace rieszcheck {

std::string_view to_string(LadderKind kind) {
  return kind == LadderKind::Full ? "full" : "standard";
}

LadderKind parse_ladder_kind(std::string_view name) {
  if (name == "standard") return LadderKind::Standard;
  if (name == "full") return LadderKind::Full;
  throw Error(ErrorCode::InvalidArgument, "unknown radius ladder: " + std::string(name));
}

RadiusLadder RadiusLadder::standard(const GridSpec& spec) {
  spec.validate();
  RadiusLadder ladder;
  ladder.kind = LadderKind::Standard;
  const double h = spec.h;
  std::vector<double> radii;
  for (int j = 1; j <= 8; ++j) radii.push_back(j * h);
  const double top = spec.diameter() + h;
  for (double r = h; ; r *= 1.25) {
    radii.push_back(r);
    if (r > top) break;
  }
  std::sort(radii.begin(), radii.end());
  // Keep one radius per distinct discrete ball.
  std::int64_t last = -1;
  for (double r : radii) {
    const std::int64_t m = ball_threshold(r, h);
    if (m > last) {
      ladder.radii.push_back(r);
      last = m;
    }
  }
  return ladder;
}

RadiusLadder RadiusLadder::full(const GridSpec& spec) {
  spec.validate();
  RadiusLadder ladder;
  ladder.kind = LadderKind::Full;
  const auto reach = static_cast<std::int64_t>(spec.n) - 1;
  std::set<std::int64_t> realizable;
  for (const auto& o : sorted_offsets(spec.d, reach)) realizable.insert(o.m);
  for (std::int64_t m : realizable) {
    ladder.radii.push_back(spec.h * std::sqrt(static_cast<double>(m) + 0.5));
  }
  return ladder;
}

RadiusLadder RadiusLadder::make(LadderKind kind, const GridSpec& spec) {
  return kind == LadderKind::Full ? full(spec) : standard(spec);
}

std::vector<std::int64_t> RadiusLadder::thresholds(double h) const {
  std::vector<std::int64_t> out;
  for (double r : radii) {
    const std::int64_t m = ball_threshold(r, h);
    if (m >= 0 && (out.empty() || m > out.back())) out.push_back(m);
  }
  return out;
}

namespace {

class MaximalScanner {
 public:
  MaximalScanner(const Field& f, const RadiusLadder& ladder)
      : spec_(f.spec()), abs_(abs_pow(f, 1.0)), thresholds_(ladder.thresholds(f.spec().h)) {
    if (!f.all_finite()) throw Error(ErrorCode::NonFiniteValue, "field contains non-finite values");
    for (auto m : thresholds_) counts_.push_back(static_cast<double>(lattice_count(spec_.d, m)));
    has_support_ = support_box(abs_, lo_, hi_);
    if (has_support_) offsets_ = sorted_offsets(spec_.d, static_cast<std::int64_t>(spec_.n) - 1);
  }

  const GridSpec& spec() const { return spec_; }

  double at(const MultiIndex& xi) const {
    if (!has_support_) return 0.0;
    const std::int64_t far = farthest_corner_m(spec_.d, xi, lo_, hi_);
    double sum = 0.0;
    double runmax = 0.0;
    double best = 0.0;
    std::size_t p = 0;
    for (std::size_t j = 0; j < thresholds_.size(); ++j) {
      const std::int64_t t = thresholds_[j];
      for (; p < offsets_.size() && offsets_[p].m <= t; ++p) {
        MultiIndex y{0, 0, 0};
        for (int a = 0; a < spec_.d; ++a) y[a] = xi[a] + offsets_[p].k[a];
        if (!spec_.contains(y)) continue;
        const double v = abs_[spec_.flatten(y)];
        sum += v;
        runmax = std::max(runmax, v);
      }
      // An average never exceeds the largest value averaged; the clamp
      // removes rounding excess so constants are reproduced exactly.
      best = std::max(best, std::min(sum / counts_[j], runmax));
      if (t >= far) break;
    }
    return best;
  }

 private:
  GridSpec spec_;
  Field abs_;
  std::vector<std::int64_t> thresholds_;
  std::vector<double> counts_;
  std::vector<LatticeOffset> offsets_;
  bool has_support_ = false;
  MultiIndex lo_{0, 0, 0};
  MultiIndex hi_{0, 0, 0};
};

}  // namespace

Field maximal(const Field& f, const RadiusLadder& ladder) {
  const GridSpec& spec = f.spec();
  spec.validate();
  if (!f.all_finite()) throw Error(ErrorCode::NonFiniteValue, "field contains non-finite values");
  const Field a = abs_pow(f, 1.0);
  const double top = a.max_abs();
  Field best = a;  // the own cell is the smallest ball
  if (top == 0.0) return best;

  // Ball sums by zero-padded convolution with each ball's indicator.
  const std::size_t side = 2 * spec.n;
  const RealFft fft(spec.d, side);
  GridSpec padded = spec;
  padded.n = side;
  std::vector<double> buf(fft.real_size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) buf[padded.flatten(spec.unflatten(i))] = a[i];
  std::vector<std::complex<double>> a_hat(fft.complex_size());
  fft.forward(buf, a_hat);

  const auto n = static_cast<std::int64_t>(spec.n);
  std::vector<std::int64_t> offset_m(fft.real_size(), -1);
  std::int64_t cube_max = 0;
  for (std::size_t i = 0; i < offset_m.size(); ++i) {
    const MultiIndex pos = padded.unflatten(i);
    std::int64_t m = 0;
    bool inside = true;
    for (int k = 0; k < spec.d; ++k) {
      if (pos[k] == n) inside = false;
      const std::int64_t off = pos[k] < n ? pos[k] : pos[k] - 2 * n;
      m += off * off;
    }
    if (inside) {
      offset_m[i] = m;
      cube_max = std::max(cube_max, m);
    }
  }

  std::vector<double> kernel(fft.real_size());
  std::vector<std::complex<double>> spectrum(fft.complex_size());
  const double norm = 1.0 / static_cast<double>(fft.real_size());
  for (std::int64_t t : ladder.thresholds(spec.h)) {
    if (t == 0) continue;
    for (std::size_t i = 0; i < kernel.size(); ++i) {
      kernel[i] = (offset_m[i] >= 0 && offset_m[i] <= t) ? 1.0 : 0.0;
    }
    fft.forward(kernel, spectrum);
    for (std::size_t i = 0; i < spectrum.size(); ++i) spectrum[i] *= a_hat[i];
    fft.inverse(spectrum, buf);
    const double count = static_cast<double>(lattice_count(spec.d, t));
    for (std::size_t i = 0; i < best.size(); ++i) {
      const double sum = std::max(0.0, buf[padded.flatten(spec.unflatten(i))] * norm);
      // An average never exceeds the largest value; the clamp removes
      // rounding excess so constants are reproduced exactly.
      best[i] = std::max(best[i], std::min(sum / count, top));
    }
    // Larger balls add no cells, only volume.
    if (t >= cube_max) break;
  }
  return best;
}

Field maximal(const Field& f, LadderKind kind) {
  return maximal(f, RadiusLadder::make(kind, f.spec()));
}

double maximal_at(const Field& f, const MultiIndex& idx, const RadiusLadder& ladder) {
  if (!f.spec().contains(idx)) throw Error(ErrorCode::InvalidArgument, "index outside the grid");
  return MaximalScanner(f, ladder).at(idx);
}

double maximal_indicator_majorant(double rho, const Point& x, int d) {
  if (!(rho > 0.0)) throw Error(ErrorCode::InvalidArgument, "rho must be positive");
  const double r = norm(x, d);
  if (r <= rho) return 1.0;
  return std::pow(rho / r, d);
}

Field ball_indicator(const GridSpec& spec, const Point& center, double rho) {
  return sample(spec, [&](const Point& x) {
    return distance(x, center, spec.d) <= rho ? 1.0 : 0.0;
  });
}

MajorantSweep majorant_domination(const GridSpec& spec, const std::vector<double>& rhos,
                                  LadderKind kind) {
  MajorantSweep sweep;
  const RadiusLadder ladder = RadiusLadder::make(kind, spec);
  for (double rho : rhos) {
    const Field ind = ball_indicator(spec, Point{0.0, 0.0, 0.0}, rho);
    const Field m = maximal(ind, ladder);
    double sup = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const double maj = maximal_indicator_majorant(rho, spec.coordinate(i), spec.d);
      sup = std::max(sup, m[i] / maj);
    }
    sweep.rhos.push_back(rho);
    sweep.sup_ratios.push_back(sup);
    sweep.sup_ratio = std::max(sweep.sup_ratio, sup);
  }
  return sweep;
}

namespace {

bool has_interior_zero(const Field& w, double floor) {
  const GridSpec& spec = w.spec();
  const auto n = static_cast<std::int64_t>(spec.n);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > floor) continue;
    const MultiIndex idx = spec.unflatten(i);
    bool enclosed = true;
    for (int a = 0; a < spec.d && enclosed; ++a) {
      bool before = false;
      bool after = false;
      MultiIndex y = idx;
      for (std::int64_t j = 0; j < n && !(before && after); ++j) {
        if (j == idx[a]) continue;
        y[a] = j;
        if (w[spec.flatten(y)] > floor) (j < idx[a] ? before : after) = true;
      }
      enclosed = before && after;
    }
    if (enclosed) return true;
  }
  return false;
}

}  // namespace

A1Report a1_report(const Field& w, double floor, LadderKind kind) {
  if (!w.all_finite()) throw Error(ErrorCode::NonFiniteValue, "weight contains non-finite values");
  if (!w.is_nonnegative()) throw Error(ErrorCode::InvalidArgument, "weight must be nonnegative");
  if (w.is_zero()) throw Error(ErrorCode::DegenerateWeight, "degenerate weight");
  A1Report report;
  const Field mw = maximal(w, kind);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > floor) {
      report.constant = std::max(report.constant, mw[i] / w[i]);
      ++report.evaluated;
    } else {
      ++report.floored;
    }
  }
  report.interior_zero = has_interior_zero(w, floor);
  if (report.interior_zero) {
    report.warnings.push_back(
        "weight vanishes at an interior point; the A1 ratio is unbounded under refinement");
  }
  return report;
}

double a1_constant(const Field& w, double floor) { return a1_report(w, floor).constant; }

Field a1_lift(const Field& b, double p0, double p1, LadderKind kind) {
  if (!(p0 > 0.0) || !(p1 > 0.0)) throw Error(ErrorCode::InvalidArgument, "exponents must be positive");
  if (p1 >= p0) throw Error(ErrorCode::InvalidArgument, "a1 lift needs p1 < p0");
  if (!b.is_nonnegative()) throw Error(ErrorCode::InvalidArgument, "weight must be nonnegative");
  const Field m = maximal(abs_pow(b, p0), kind);
  Field out(b.spec());
  for (std::size_t i = 0; i < out.size(); ++i) {
    // pow(pow(b, p0), 1/p0) can land one ulp below b.
    out[i] = std::max(b[i], std::pow(m[i], 1.0 / p0));
  }
  return out;
}

}  // namespace rieszcheck
