// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rieszcheck/cli.hpp"
#include "rieszcheck/config.hpp"
#include "rieszcheck/families.hpp"
#include "rieszcheck/maximal.hpp"
#include "rieszcheck/morrey.hpp"
#include "rieszcheck/oracle.hpp"
#include "rieszcheck/report.hpp"
#include "rieszcheck/riesz.hpp"
#include "rieszcheck/spectral.hpp"
#include "rieszcheck/suite.hpp"
#include "rieszcheck/verify.hpp"

#ifndef RIESZCHECK_DEFAULT_CONFIG
#define RIESZCHECK_DEFAULT_CONFIG "configs/default.cfg"
#endif

namespace rc = rieszcheck;

namespace {

// Pinned tolerances.
constexpr double kGateSeconds = 60.0;
constexpr double kClosedFormRiesz = 0.02;
constexpr double kClosedFormMorrey = 0.05;
constexpr double kAdjointD1 = 1e-12;
constexpr double kAdjointD2 = 1e-10;
constexpr double kHomogeneity = 1e-10;
constexpr double kEigen = 1e-10;
constexpr double kFdOrder = 1.9;
constexpr double kRoundTrip = 0.01;
constexpr double kDrift = 0.15;
constexpr double kFlatness = 3.0;
constexpr double kSuiteSeconds = 15.0 * 60.0;
constexpr double kHolderSlack = -1e-12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Line {
  int id;
  bool pass;
  std::string detail;
};

std::vector<Line> g_lines;

void report(int id, bool pass, const std::string& detail) {
  g_lines.push_back({id, pass, detail});
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << std::endl;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(4) << v;
  return os.str();
}

rc::Field uniform(const rc::GridSpec& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  rc::Field f(s);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = dist(rng);
  return f;
}

rc::MultiIndex center_index(const rc::GridSpec& s) {
  rc::MultiIndex k{0, 0, 0};
  for (int a = 0; a < s.d; ++a) k[a] = static_cast<std::int64_t>(s.n / 2);
  return k;
}

void criterion1() {
  const auto gate = rc::run_oracle_gate();
  double worst = 0.0;
  for (const auto& e : gate.entries) worst = std::max(worst, e.max_deviation / e.tolerance);
  report(1, gate.pass && gate.seconds <= kGateSeconds,
         "oracle gate: worst deviation/tolerance " + fmt(worst) + ", " + fmt(gate.seconds) + " s");
}

void criterion2() {
  bool pass = true;
  std::ostringstream detail;
  const double R = 0.5;
  for (int d : {1, 2}) {
    const double alpha = d == 1 ? 0.5 : 1.0;
    const double exact = rc::unit_sphere_area(d) * std::pow(R, alpha) / alpha;
    double err[2];
    for (int k = 0; k < 2; ++k) {
      const rc::GridSpec s = rc::centered_grid(d, 256u << k, 2.0);
      const rc::Field v = rc::riesz_fft(rc::indicator_weight(s, R), alpha);
      err[k] = std::abs(v[s.flatten(center_index(s))] / exact - 1.0);
    }
    pass = pass && err[0] <= kClosedFormRiesz && err[1] < err[0];
    detail << "R I_B d=" << d << " err " << fmt(err[0]) << "->" << fmt(err[1]) << "; ";
  }
  const rc::GridSpec s = rc::centered_grid(1, 512, 2.0);
  const double A = rc::morrey_constant(rc::power_weight(s, 0.5, 1.0, 1.0), 1.5, 0.5).A;
  const double exact = std::pow(4.0, 2.0 / 3.0);
  const double err = std::abs(A / exact - 1.0);
  pass = pass && err <= kClosedFormMorrey;
  detail << "Morrey power weight err " << fmt(err);
  report(2, pass, detail.str());
}

void criterion3() {
  bool pass = true;
  std::ostringstream detail;
  double adj1 = 0.0;
  double adj2 = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const rc::GridSpec s1 = rc::centered_grid(1, 256, 2.0);
    adj1 = std::max(adj1, rc::adjoint_defect(uniform(s1, seed), uniform(s1, seed + 100), 0.5));
    const rc::GridSpec s2 = rc::centered_grid(2, 64, 2.0);
    adj2 = std::max(adj2, rc::adjoint_defect(uniform(s2, seed), uniform(s2, seed + 100), 1.0));
  }
  pass = pass && adj1 <= kAdjointD1 && adj2 <= kAdjointD2;
  detail << "adjoint d1 " << fmt(adj1) << ", d2 " << fmt(adj2) << "; ";

  bool constant_fixed = true;
  for (int d = 1; d <= 3; ++d) {
    const rc::GridSpec s = rc::centered_grid(d, d == 3 ? 12 : 64, 2.0);
    rc::Field c(s);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.37;
    for (auto kind : {rc::LadderKind::Standard, rc::LadderKind::Full}) {
      const rc::Field m = rc::maximal(c, kind);
      for (std::size_t i = 0; i < m.size(); ++i) constant_fixed = constant_fixed && m[i] == 0.37;
    }
  }
  pass = pass && constant_fixed;
  detail << "M c = c " << (constant_fixed ? "exact" : "broken") << "; ";

  // Scaling identities of the operators and of every check.
  double hom = 0.0;
  auto rel = [](double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
  };
  {
    const rc::GridSpec s = rc::centered_grid(2, 32, 2.0);
    const rc::Field f = uniform(s, 9);
    const rc::Field f3 = rc::scale(f, 3.0);
    const rc::Field rf = rc::riesz_fft(f, 0.6);
    const rc::Field rf3 = rc::riesz_fft(f3, 0.6);
    const rc::Field mf = rc::maximal(f);
    const rc::Field mf3 = rc::maximal(f3);
    for (std::size_t i = 0; i < f.size(); ++i) {
      hom = std::max(hom, rel(3.0 * rf[i], rf3[i]));
      hom = std::max(hom, rel(3.0 * mf[i], mf3[i]));
    }
    hom = std::max(hom, rel(3.0 * rc::morrey_constant(f, 2.0, 0.6).A, rc::morrey_constant(f3, 2.0, 0.6).A));
  }
  for (int d : {1, 2}) {
    const rc::GridSpec s = rc::centered_grid(d, d == 1 ? 256 : 32, 4.0);
    const auto P = d == 1 ? rc::validate_params(1, 0.5, 2.0, 4.0) : rc::validate_params(2, 1.0, 1.5, 2.0);
    std::vector<rc::NamedField> w{{"power", rc::power_weight(s, 0.5 * P.alpha, 1.0, 1.0)},
                                  {"random", rc::random_weight(3, s, 0.3)}};
    std::vector<rc::NamedField> f{{"gauss", rc::gaussian_source(s, 0.2)}, {"bump", rc::random_source(4, s)}};
    const rc::CheckContext ctx(s, P, {}, w, f);
    for (const auto& name : rc::check_names()) {
      const auto r = rc::run_check(name, ctx);
      const auto it = r.diagnostics.find("homogeneity_defect");
      if (it == r.diagnostics.end()) {
        pass = false;
        detail << name << " has no scaling test; ";
      } else {
        hom = std::max(hom, it->second);
      }
    }
  }
  pass = pass && hom <= kHomogeneity;
  detail << "worst scaling defect " << fmt(hom);
  report(3, pass, detail.str());
}

double roundtrip(double alpha) {
  const rc::GridSpec s = rc::centered_grid(1, 256, 4.0);
  const rc::Field u = rc::gaussian_source(s, 0.04);
  const rc::Field back = rc::riesz_fft(rc::frac_laplacian(u, alpha), alpha);
  const double c = rc::riesz_inversion_constant(1, alpha);
  double err = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) err = std::max(err, std::abs(c * back[i] - u[i]));
  return err / u.max_abs();
}

void criterion4() {
  constexpr double pi = std::numbers::pi;
  bool pass = true;
  std::ostringstream detail;
  double eig = 0.0;
  {
    const rc::GridSpec s = rc::centered_grid(1, 128, 2.0 * pi);
    const rc::SpectralBox box(s, 1);
    for (int k : {1, 4, 9}) {
      const rc::Field u = rc::sample(s, [&](const rc::Point& x) { return std::sin(k * x[0]); });
      for (double alpha : {0.3, 1.0, 1.6}) {
        const rc::Field v = box.frac_laplacian(u, alpha);
        for (std::size_t i = 0; i < u.size(); ++i) eig = std::max(eig, std::abs(v[i] - std::pow(k, alpha) * u[i]));
      }
      const rc::Field du = box.gradient(u)[0];
      for (std::size_t i = 0; i < u.size(); ++i) {
        eig = std::max(eig, std::abs(du[i] - k * std::cos(k * s.coordinate(i)[0])));
      }
    }
  }
  pass = pass && eig <= kEigen;
  detail << "eigenfunction error " << fmt(eig) << "; ";
  double e[2];
  for (int k = 0; k < 2; ++k) {
    const rc::GridSpec s = rc::centered_grid(1, 128u << k, 4.0);
    const rc::Field u = rc::gaussian_source(s, 0.15);
    const rc::Field a = rc::frac_laplacian(u, 2.0);
    const rc::Field b = rc::negative_laplacian_fd(u);
    e[k] = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) e[k] = std::max(e[k], std::abs(a[i] - b[i]));
  }
  const double order = std::log2(e[0] / e[1]);
  pass = pass && order >= kFdOrder;
  detail << "alpha=2 order " << fmt(order) << "; round-trip";
  for (double alpha : {0.25, 0.5}) {
    const double err = roundtrip(alpha);
    pass = pass && err <= kRoundTrip;
    detail << " alpha=" << alpha << " " << fmt(100.0 * err) << "%";
  }
  report(4, pass, detail.str());
  // Not part of the verdict: larger alpha exceeds the budget at n=256.
  std::cout << "  info: round-trip alpha=0.75 " << fmt(100.0 * roundtrip(0.75)) << "% (budget 1%)" << std::endl;
}

void criterion5(const rc::RunConfig& config) {
  const auto start = Clock::now();
  rc::SuiteOptions options;
  options.run_gate = true;
  const rc::SuiteReport suite = rc::run_suite(config, options);
  const double seconds = seconds_since(start);
  bool pass = seconds <= kSuiteSeconds && suite.exit_code() == 0;
  std::ostringstream detail;
  std::size_t violations = 0;
  double worst_drift = 0.0;
  double worst_flat = 0.0;
  std::vector<std::string> seen;
  for (const auto& r : suite.reports) {
    const auto check = r.name.substr(r.name.find('/') + 1);
    if (std::find(seen.begin(), seen.end(), check) == seen.end()) seen.push_back(check);
    if (r.verdict == rc::Verdict::Violation || r.verdict == rc::Verdict::Error) ++violations;
    for (const auto& c : r.cases) {
      if (!std::isfinite(c.ratio)) ++violations;
    }
    const double drift = rc::refinement_drift(r);
    worst_drift = std::max(worst_drift, drift);
    if (!std::isfinite(r.sup_ratio) || drift > kDrift || r.refinement.size() < 2) pass = false;
    const auto flat = r.diagnostics.find("flatness");
    if (flat != r.diagnostics.end()) {
      worst_flat = std::max(worst_flat, flat->second);
      if (flat->second > kFlatness) pass = false;
    }
    if (r.verdict != rc::Verdict::Pass) {
      pass = false;
      detail << r.name << " " << rc::to_string(r.verdict) << "; ";
    }
  }
  pass = pass && violations == 0 && seen.size() == rc::check_names().size();
  detail << suite.reports.size() << " reports over " << seen.size() << " checks, violations " << violations
         << ", worst drift " << fmt(worst_drift) << ", lemma5 flatness " << fmt(worst_flat) << ", "
         << fmt(seconds) << " s";
  report(5, pass, detail.str());
}

void criterion6() {
  double worst = std::numeric_limits<double>::infinity();
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int d = seed % 2 ? 1 : 2;
    const rc::GridSpec s = rc::centered_grid(d, d == 1 ? 256 : 48, 2.0);
    const double alpha = d == 1 ? 0.5 : 1.0;
    const double a = 1.0 + 0.25 * static_cast<double>(seed);
    const auto r = rc::holder_split(uniform(s, seed), uniform(s, seed + 1000), alpha, a);
    worst = std::min(worst, r.min_slack);
  }
  report(6, worst >= kHolderSlack, "worst relative slack over 10 pairs " + fmt(worst));
}

std::string run_verify(const std::filesystem::path& config, const std::filesystem::path& out, int threads) {
  const std::string cfg = config.string();
  const std::string json = out.string();
  const std::string th = std::to_string(threads);
  const char* argv[] = {"rieszcheck", "--threads", th.c_str(), "verify", "all", "--config", cfg.c_str(),
                        "--json", json.c_str(), "--quiet", "--timestamp", "fixed"};
  std::ostringstream sink;
  const int code = rc::run_cli(static_cast<int>(std::size(argv)), argv, sink, sink);
  if (code != 0) return "exit " + std::to_string(code);
  std::ifstream in(out, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void criterion7(const std::filesystem::path& config) {
  const auto dir = std::filesystem::temp_directory_path() / "rieszcheck_acceptance";
  std::filesystem::create_directories(dir);
  const std::string a = run_verify(config, dir / "a.json", 1);
  const std::string b = run_verify(config, dir / "b.json", 4);
  const bool pass = a.size() > 100 && a == b;
  report(7, pass, "two runs (1 and 4 threads) " + std::string(pass ? "byte-identical" : "differ") + ", " +
                      std::to_string(a.size()) + " bytes");
  std::filesystem::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path config_path = argc > 1 ? argv[1] : RIESZCHECK_DEFAULT_CONFIG;
  rc::RunConfig config;
  try {
    config = rc::load_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "cannot load " << config_path << ": " << e.what() << '\n';
    return 2;
  }
  const std::vector<std::pair<int, std::function<void()>>> steps = {
      {1, criterion1},
      {2, criterion2},
      {3, criterion3},
      {4, criterion4},
      {5, [&] { criterion5(config); }},
      {6, criterion6},
      {7, [&] { criterion7(config_path); }},
  };
  for (const auto& [id, step] : steps) {
    try {
      step();
    } catch (const std::exception& e) {
      report(id, false, std::string("exception: ") + e.what());
    }
  }
  bool all = true;
  for (const auto& l : g_lines) all = all && l.pass;
  std::cout << (all ? "all criteria PASS" : "some criteria FAIL") << std::endl;
  return all ? 0 : 1;
}
