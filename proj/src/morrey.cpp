#include "rieszcheck/morrey.hpp"

#include <algorithm>
#include <cmath>

#include "rieszcheck/error.hpp"
#include "rieszcheck/lattice.hpp"
#include "rieszcheck/parallel.hpp"

namespace rieszcheck {

std::string_view to_string(MorreyConvention convention) {
  return convention == MorreyConvention::Raw ? "raw" : "avg";
}

MorreyConvention parse_morrey_convention(std::string_view name) {
  if (name == "avg") return MorreyConvention::Average;
  if (name == "raw") return MorreyConvention::Raw;
  throw Error(ErrorCode::InvalidArgument, "unknown morrey convention: " + std::string(name));
}

double effective_radius(int d, double volume) {
  return std::pow(volume / unit_ball_volume(d), 1.0 / d);
}

double morrey_ball_value(int d, double h, double cells, double mass, double p, double alpha,
                         MorreyConvention convention) {
  const double volume = cells * std::pow(h, d);
  const double rho = effective_radius(d, volume);
  const double inner = convention == MorreyConvention::Average ? mass / volume : mass;
  return std::pow(rho, alpha) * std::pow(inner, 1.0 / p);
}

namespace {

struct CenterBest {
  double value = -1.0;
  double radius = 0.0;
};

}  // namespace

MorreyReport morrey_constant(const Field& b, double p, double alpha, MorreyOptions options) {
  const GridSpec& spec = b.spec();
  if (!b.all_finite()) throw Error(ErrorCode::NonFiniteValue, "weight contains non-finite values");
  if (!b.is_nonnegative()) throw Error(ErrorCode::InvalidArgument, "weight must be nonnegative");
  if (!(p > 1.0)) throw Error(ErrorCode::InvalidArgument, "morrey exponent must exceed 1");
  if (!(alpha > 0.0) || !(alpha < spec.d)) {
    throw Error(ErrorCode::InvalidArgument, "morrey order needs 0 < alpha < d");
  }
  if (options.stride == 0) throw Error(ErrorCode::InvalidArgument, "stride must be positive");

  MorreyReport report;
  report.convention = options.convention;
  const Field bp = abs_pow(b, p);
  const double cell = spec.cell_volume();

  // Center lattice per axis.
  std::vector<std::int64_t> axis;
  const auto n = static_cast<std::int64_t>(spec.n);
  const auto stride = static_cast<std::int64_t>(options.stride);
  for (std::int64_t i = (n / 2) % stride; i < n; i += stride) axis.push_back(i);
  std::size_t center_count = 1;
  for (int a = 0; a < spec.d; ++a) center_count *= axis.size();
  auto center_index = [&](std::size_t c) {
    MultiIndex idx{0, 0, 0};
    for (int a = spec.d - 1; a >= 0; --a) {
      idx[a] = axis[c % axis.size()];
      c /= axis.size();
    }
    return idx;
  };

  MultiIndex lo{0, 0, 0};
  MultiIndex hi{0, 0, 0};
  if (!support_box(bp, lo, hi)) {
    report.argmax_ball = Ball{spec.coordinate(center_index(0)), effective_radius(spec.d, cell)};
    return report;
  }

  const auto thresholds = RadiusLadder::make(options.ladder, spec).thresholds(spec.h);
  std::vector<double> counts;
  for (auto m : thresholds) counts.push_back(static_cast<double>(lattice_count(spec.d, m)));
  const auto offsets = sorted_offsets(spec.d, n - 1);

  std::vector<CenterBest> best(center_count);
  std::vector<std::vector<MorreyScanEntry>> scans(options.keep_scan ? center_count : 0);
  parallel_for(center_count, [&](std::size_t c) {
    const MultiIndex xi = center_index(c);
    const Point center = spec.coordinate(xi);
    const std::int64_t far = farthest_corner_m(spec.d, xi, lo, hi);
    double sum = 0.0;
    std::size_t q = 0;
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
      // Once the ball holds the whole support the sum is final.
      if (j == 0 || thresholds[j - 1] < far) {
        for (; q < offsets.size() && offsets[q].m <= thresholds[j]; ++q) {
          MultiIndex y{0, 0, 0};
          for (int a = 0; a < spec.d; ++a) y[a] = xi[a] + offsets[q].k[a];
          if (spec.contains(y)) sum += bp[spec.flatten(y)];
        }
      }
      const double rho = effective_radius(spec.d, counts[j] * cell);
      const double value =
          morrey_ball_value(spec.d, spec.h, counts[j], sum * cell, p, alpha, options.convention);
      if (value > best[c].value) best[c] = CenterBest{value, rho};
      if (options.keep_scan) scans[c].push_back(MorreyScanEntry{center, rho, value});
    }
  });

  std::size_t arg = 0;
  for (std::size_t c = 1; c < center_count; ++c) {
    if (best[c].value > best[arg].value ||
        (best[c].value == best[arg].value && best[c].radius < best[arg].radius)) {
      arg = c;
    }
  }
  report.A = std::max(0.0, best[arg].value);
  report.argmax_ball = Ball{spec.coordinate(center_index(arg)), best[arg].radius};
  for (auto& s : scans) report.scan.insert(report.scan.end(), s.begin(), s.end());
  return report;
}

}  // namespace rieszcheck
