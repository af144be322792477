#include "rieszcheck/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>

#include "rieszcheck/error.hpp"
#include "rieszcheck/maximal.hpp"

namespace rieszcheck {

namespace {

void guard(const GridSpec& spec) {
  if (spec.size() > kOracleCap) {
    throw Error(ErrorCode::SizeGuard, "grid too large for the brute-force reference");
  }
}

std::int64_t squared(const MultiIndex& a, const MultiIndex& b, int d) {
  std::int64_t m = 0;
  for (int k = 0; k < d; ++k) m += (a[k] - b[k]) * (a[k] - b[k]);
  return m;
}

// #{k in Z^d : |k|^2 <= m} by enumeration of the enclosing cube.
double count_lattice_points(int d, std::int64_t m) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m))) + 1;
  std::int64_t count = 0;
  for (std::int64_t i = -r; i <= r; ++i) {
    for (std::int64_t j = (d > 1 ? -r : 0); j <= (d > 1 ? r : 0); ++j) {
      for (std::int64_t k = (d > 2 ? -r : 0); k <= (d > 2 ? r : 0); ++k) {
        if (i * i + j * j + k * k <= m) ++count;
      }
    }
  }
  return static_cast<double>(count);
}

// Every |k|^2 with |k_i| <= n - 1.
std::vector<std::int64_t> realizable(int d, std::int64_t n) {
  std::vector<char> seen(static_cast<std::size_t>(d * (n - 1) * (n - 1) + 1), 0);
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < (d > 1 ? n : 1); ++j) {
      for (std::int64_t k = 0; k < (d > 2 ? n : 1); ++k) seen[i * i + j * j + k * k] = 1;
    }
  }
  std::vector<std::int64_t> out;
  for (std::size_t m = 0; m < seen.size(); ++m) {
    if (seen[m]) out.push_back(static_cast<std::int64_t>(m));
  }
  return out;
}

}  // namespace

double riesz_bruteforce(const Field& f, const RieszKernelTable& table, const MultiIndex& idx) {
  const GridSpec& spec = f.spec();
  guard(spec);
  if (!(table.spec() == spec)) throw Error(ErrorCode::InvalidArgument, "kernel table grid mismatch");
  if (!spec.contains(idx)) throw Error(ErrorCode::InvalidArgument, "index outside the grid");
  double sum = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const MultiIndex y = spec.unflatten(j);
    MultiIndex k{0, 0, 0};
    for (int a = 0; a < spec.d; ++a) k[a] = y[a] > idx[a] ? y[a] - idx[a] : idx[a] - y[a];
    sum += table.weight(k) * f[j];
  }
  return sum;
}

double riesz_bruteforce(const Field& f, double alpha, const MultiIndex& idx, CentralWeight central) {
  guard(f.spec());
  return riesz_bruteforce(f, RieszKernelTable(f.spec(), alpha, central), idx);
}

double riesz_bruteforce(const Field& f, double alpha, const Point& x, CentralWeight central) {
  return riesz_bruteforce(f, alpha, f.spec().nearest_index(x), central);
}

double maximal_bruteforce(const Field& f, const MultiIndex& idx) {
  const GridSpec& spec = f.spec();
  guard(spec);
  if (!spec.contains(idx)) throw Error(ErrorCode::InvalidArgument, "index outside the grid");
  double best = 0.0;
  for (std::int64_t m : realizable(spec.d, static_cast<std::int64_t>(spec.n))) {
    double sum = 0.0;
    double top = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (squared(spec.unflatten(j), idx, spec.d) <= m) {
        const double v = std::abs(f[j]);
        sum += v;
        top = std::max(top, v);
      }
    }
    best = std::max(best, std::min(sum / count_lattice_points(spec.d, m), top));
  }
  return best;
}

double maximal_bruteforce(const Field& f, const Point& x) {
  return maximal_bruteforce(f, f.spec().nearest_index(x));
}

double morrey_bruteforce(const Field& b, double p, double alpha, MorreyConvention convention) {
  const GridSpec& spec = b.spec();
  guard(spec);
  if (!b.is_nonnegative()) throw Error(ErrorCode::InvalidArgument, "weight must be nonnegative");
  const double cell = spec.cell_volume();
  const auto radii = realizable(spec.d, static_cast<std::int64_t>(spec.n));
  std::vector<double> counts;
  for (auto m : radii) counts.push_back(count_lattice_points(spec.d, m));
  double best = 0.0;
  for (std::size_t c = 0; c < b.size(); ++c) {
    const MultiIndex center = spec.unflatten(c);
    // Mass per squared distance, then accumulated over growing balls.
    std::map<std::int64_t, double> shells;
    for (std::size_t j = 0; j < b.size(); ++j) {
      shells[squared(spec.unflatten(j), center, spec.d)] += std::pow(b[j], p);
    }
    auto it = shells.begin();
    double mass = 0.0;
    for (std::size_t r = 0; r < radii.size(); ++r) {
      for (; it != shells.end() && it->first <= radii[r]; ++it) mass += it->second;
      best = std::max(best, morrey_ball_value(spec.d, spec.h, counts[r], mass * cell, p, alpha,
                                              convention));
    }
  }
  return best;
}

Field negative_laplacian_fd(const Field& u) {
  const GridSpec& spec = u.spec();
  Field out(spec);
  const double inv = 1.0 / (spec.h * spec.h);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const MultiIndex idx = spec.unflatten(i);
    double s = 2.0 * spec.d * u[i];
    for (int a = 0; a < spec.d; ++a) {
      for (int sign : {-1, 1}) {
        MultiIndex y = idx;
        y[a] += sign;
        if (spec.contains(y)) s -= u[spec.flatten(y)];
      }
    }
    out[i] = s * inv;
  }
  return out;
}

Field central_difference(const Field& u, int axis) {
  const GridSpec& spec = u.spec();
  if (axis < 0 || axis >= spec.d) throw Error(ErrorCode::InvalidArgument, "axis out of range");
  Field out(spec);
  for (std::size_t i = 0; i < u.size(); ++i) {
    MultiIndex lo = spec.unflatten(i);
    MultiIndex hi = lo;
    --lo[axis];
    ++hi[axis];
    const double a = spec.contains(hi) ? u[spec.flatten(hi)] : 0.0;
    const double b = spec.contains(lo) ? u[spec.flatten(lo)] : 0.0;
    out[i] = (a - b) / (2.0 * spec.h);
  }
  return out;
}

namespace {

Field uniform_field(const GridSpec& spec, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  Field f(spec);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = dist(rng);
  return f;
}

OracleGateEntry riesz_gate(int d, std::size_t n, int seeds, std::mt19937_64& rng) {
  OracleGateEntry e;
  e.name = "riesz_fft";
  e.d = d;
  e.n = n;
  e.tolerance = 1e-10;
  const GridSpec spec = centered_grid(d, n, 2.0);
  const double alpha = d == 1 ? 0.5 : 1.0;
  const RieszOperator op(spec, alpha);
  const RieszKernelTable table(spec, alpha);
  for (int s = 0; s < seeds; ++s) {
    const Field f = uniform_field(spec, rng);
    const Field fast = op.apply(f);
    double top = 0.0;
    double dev = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double ref = riesz_bruteforce(f, table, spec.unflatten(i));
      top = std::max(top, std::abs(ref));
      dev = std::max(dev, std::abs(ref - fast[i]));
    }
    e.max_deviation = std::max(e.max_deviation, dev / top);
    e.samples += f.size();
  }
  e.pass = e.max_deviation <= e.tolerance;
  return e;
}

OracleGateEntry maximal_gate(int d, std::size_t n, int points, std::mt19937_64& rng) {
  OracleGateEntry e;
  e.name = "maximal_full";
  e.d = d;
  e.n = n;
  e.tolerance = 1e-12;
  const GridSpec spec = centered_grid(d, n, 2.0);
  Field f = uniform_field(spec, rng);
  // Sparse spikes make the optimal radius vary from point to point.
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::pow(f[i], 8.0);
  const Field fast = maximal(f, RadiusLadder::full(spec));
  std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
  for (int k = 0; k < points; ++k) {
    const MultiIndex idx = spec.unflatten(pick(rng));
    const double ref = maximal_bruteforce(f, idx);
    const double got = fast[spec.flatten(idx)];
    e.max_deviation = std::max(e.max_deviation, std::abs(ref - got) / std::max(ref, 1e-300));
    ++e.samples;
  }
  e.pass = e.max_deviation <= e.tolerance;
  return e;
}

}  // namespace

OracleGateReport run_oracle_gate(const OracleGateOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(options.seed);
  OracleGateReport report;
  report.entries.push_back(riesz_gate(1, options.n1, options.seeds, rng));
  report.entries.push_back(riesz_gate(2, options.n2, options.seeds, rng));
  report.entries.push_back(maximal_gate(1, options.n1, options.maximal_points, rng));
  report.entries.push_back(maximal_gate(2, options.n2, options.maximal_points, rng));
  report.pass = std::all_of(report.entries.begin(), report.entries.end(),
                            [](const OracleGateEntry& e) { return e.pass; });
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace rieszcheck
