#include "rieszcheck/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rieszcheck/error.hpp"
#include "rieszcheck/spectral.hpp"

namespace rieszcheck {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass: return "PASS";
    case Verdict::Warn: return "WARN";
    case Verdict::Violation: return "VIOLATION";
    case Verdict::Error: return "ERROR";
  }
  return "ERROR";
}

void RatioReport::add_case(std::string descriptor, double lhs, double rhs) {
  RatioCase c;
  c.lhs = lhs;
  c.rhs = rhs;
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
    c.ratio = std::numeric_limits<double>::quiet_NaN();
    flag("non-finite side in case " + descriptor);
  } else if (rhs > 0.0) {
    c.ratio = lhs / rhs;
  } else if (lhs > 0.0) {
    c.ratio = std::numeric_limits<double>::infinity();
    flag("lhs > 0 with rhs = 0 in case " + descriptor);
  } else {
    c.ratio = 0.0;
  }
  if (!(c.ratio <= sup_ratio)) sup_ratio = c.ratio;
  c.descriptor = std::move(descriptor);
  cases.push_back(std::move(c));
}

void RatioReport::flag(const std::string& why) {
  violated = true;
  commentary.push_back(why);
}

void RatioReport::note_max(const std::string& key, double value) {
  auto it = diagnostics.find(key);
  if (it == diagnostics.end()) {
    diagnostics[key] = value;
  } else if (!(value <= it->second)) {
    it->second = value;
  }
}

void RatioReport::absorb(const RatioReport& other, const std::string& prefix) {
  for (const auto& c : other.cases) {
    cases.push_back(RatioCase{prefix + c.descriptor, c.lhs, c.rhs, c.ratio});
    if (!(c.ratio <= sup_ratio)) sup_ratio = c.ratio;
  }
  for (const auto& p : other.curves) {
    CurvePoint q = p;
    q.case_name = prefix + q.case_name;
    curves.push_back(q);
  }
  for (const auto& [key, value] : other.diagnostics) note_max(key, value);
  for (const auto& line : other.commentary) {
    if (std::find(commentary.begin(), commentary.end(), line) == commentary.end()) {
      commentary.push_back(line);
    }
  }
  floored_points += other.floored_points;
  violated = violated || other.violated;
  if (other.verdict == Verdict::Error) verdict = Verdict::Error;
}

int SuiteReport::exit_code() const {
  if (gate && !gate->pass) return 1;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Violation || r.verdict == Verdict::Error) return 1;
  }
  return 0;
}

CheckContext::CheckContext(const GridSpec& spec, const ExponentParams& params,
                           Conventions conventions, std::vector<NamedField> weights,
                           std::vector<NamedField> sources)
    : spec_(spec),
      params_(params),
      conventions_(std::move(conventions)),
      weights_(std::move(weights)),
      sources_(std::move(sources)),
      riesz_(spec, params.alpha, conventions_.kernel),
      ladder_(RadiusLadder::make(conventions_.ladder, spec)),
      weight_A_(weights_.size()),
      source_potential_(sources_.size()),
      source_maximal_(sources_.size()),
      weight_maximal_(weights_.size()) {
  if (spec.d != params.d) throw Error(ErrorCode::InvalidArgument, "grid and parameter dimension differ");
  for (const auto& w : weights_) {
    if (!(w.field.spec() == spec)) throw Error(ErrorCode::InvalidArgument, "weight " + w.name + " is on another grid");
    if (!w.field.all_finite()) throw Error(ErrorCode::NonFiniteValue, "weight " + w.name + " has non-finite values");
    if (!w.field.is_nonnegative()) throw Error(ErrorCode::InvalidArgument, "weight " + w.name + " has negative values");
  }
  for (const auto& s : sources_) {
    if (!(s.field.spec() == spec)) throw Error(ErrorCode::InvalidArgument, "source " + s.name + " is on another grid");
    if (!s.field.all_finite()) throw Error(ErrorCode::NonFiniteValue, "source " + s.name + " has non-finite values");
  }
}

double CheckContext::morrey(const Field& b) const {
  MorreyOptions options;
  options.convention = conventions_.morrey;
  options.ladder = conventions_.ladder;
  options.keep_scan = false;
  return morrey_constant(b, params_.p, params_.alpha, options).A;
}

double CheckContext::weight_A(std::size_t i) const {
  if (!weight_A_[i]) weight_A_[i] = morrey(weights_[i].field);
  return *weight_A_[i];
}

const Field& CheckContext::source_potential(std::size_t i) const {
  if (!source_potential_[i]) source_potential_[i] = riesz_.apply(sources_[i].field);
  return *source_potential_[i];
}

const Field& CheckContext::source_maximal(std::size_t i) const {
  if (!source_maximal_[i]) source_maximal_[i] = apply_maximal(sources_[i].field);
  return *source_maximal_[i];
}

const Field& CheckContext::weight_maximal(std::size_t i) const {
  if (!weight_maximal_[i]) weight_maximal_[i] = apply_maximal(weights_[i].field);
  return *weight_maximal_[i];
}

Field CheckContext::apply_maximal(const Field& f) const { return maximal(f, ladder_); }

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "theorem1", "lemma4", "lemma5", "inner_bound",
      "duality", "a1_lift", "fefferman_stein", "corollary2"};
  return names;
}

bool is_check_name(std::string_view name) {
  const auto& names = check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

// sum a^s |c|^t h^d, with a^0 treated as 1.
double weighted_power_integral(const Field& a, double s, const Field& c, double t) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double av = s == 0.0 ? 1.0 : std::pow(a[i], s);
    sum += av * std::pow(std::abs(c[i]), t);
  }
  return sum * a.spec().cell_volume();
}

double power_integral(const Field& c, double t) {
  double sum = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) sum += std::pow(std::abs(c[i]), t);
  return sum * c.spec().cell_volume();
}

Field clamp_pow(const Field& f, double s) {
  return map(f, [s](double v) { return std::pow(std::max(v, 0.0), s); });
}

std::string pair_name(const NamedField& a, const NamedField& b) { return a.name + " " + b.name; }

double relative_defect(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

void record_homogeneity(RatioReport& report, double base, double scaled, const std::string& what) {
  const double defect = relative_defect(base, scaled);
  report.note_max("homogeneity_defect", defect);
  if (!(defect <= kHomogeneityTolerance)) {
    std::ostringstream os;
    os << "ratio changed by " << defect << " under " << what;
    report.flag(os.str());
  }
}

RatioReport new_report(std::string name, const CheckContext& ctx) {
  RatioReport report;
  report.name = std::move(name);
  report.params = ctx.params();
  report.conventions = ctx.conventions();
  return report;
}

void require_weight_A(RatioReport& report, const NamedField& w, double A) {
  if (A == 0.0 && !w.field.is_zero()) {
    report.verdict = Verdict::Error;
    report.commentary.push_back("internal error: zero Morrey constant for nonzero weight " + w.name);
  }
}

// ---------------------------------------------------------------- theorem1

double theorem1_ratio(const Field& b, double A, const Field& f, const Field& v, double r) {
  const double lhs = weighted_power_integral(b, r, v, r);
  const double rhs = std::pow(A, r) * power_integral(f, r);
  return rhs > 0.0 ? lhs / rhs : 0.0;
}

RatioReport run_theorem1(const CheckContext& ctx) {
  RatioReport report = new_report("theorem1", ctx);
  const double r = ctx.params().r;
  for (std::size_t i = 0; i < ctx.weights().size(); ++i) {
    const auto& w = ctx.weights()[i];
    const double A = ctx.weight_A(i);
    require_weight_A(report, w, A);
    for (std::size_t j = 0; j < ctx.sources().size(); ++j) {
      const auto& s = ctx.sources()[j];
      const Field& v = ctx.source_potential(j);
      report.add_case(pair_name(w, s), weighted_power_integral(w.field, r, v, r),
                      std::pow(A, r) * power_integral(s.field, r));
    }
  }
  if (!ctx.weights().empty() && !ctx.sources().empty()) {
    const Field& b = ctx.weights()[0].field;
    const Field& f = ctx.sources()[0].field;
    const double A = ctx.weight_A(0);
    const double base = theorem1_ratio(b, A, f, ctx.source_potential(0), r);
    const Field f2 = scale(f, 2.0);
    record_homogeneity(report, base, theorem1_ratio(b, A, f2, ctx.riesz().apply(f2), r), "f -> 2f");
    const Field b3 = scale(b, 3.0);
    record_homogeneity(report, base,
                       theorem1_ratio(b3, ctx.morrey(b3), f, ctx.source_potential(0), r),
                       "b -> 3b");
  }
  return report;
}

// ---------------------------------------------------------------- lemma4

struct PointwiseSup {
  double sup = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  std::size_t floored = 0;
};

// sup of lhs / rhs over points with rhs above the floor (and mask, if given).
PointwiseSup pointwise_sup(const Field& lhs, const Field& rhs, const Field* mask = nullptr) {
  PointwiseSup out;
  bool any = false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (mask && !((*mask)[i] > 0.0)) continue;
    if (!(rhs[i] > kDenominatorFloor)) {
      ++out.floored;
      continue;
    }
    const double ratio = lhs[i] / rhs[i];
    if (!any || ratio > out.sup) {
      out.sup = ratio;
      out.lhs = lhs[i];
      out.rhs = rhs[i];
      any = true;
    }
  }
  return out;
}

PointwiseSup lemma4_sup(const CheckContext& ctx, const Field& b, double A) {
  const double q = ctx.params().q;
  const Field g = abs_pow(b, q);
  const Field lhs = ctx.riesz().apply(g);
  const Field mg = ctx.apply_maximal(g);
  const Field rhs = map(mg, [&](double m) { return A * std::pow(m, 1.0 - 1.0 / q); });
  return pointwise_sup(lhs, rhs);
}

RatioReport run_lemma4(const CheckContext& ctx) {
  RatioReport report = new_report("lemma4", ctx);
  report.commentary.push_back(
      "only the pointwise bound is evaluated; the radius balancing of the classical argument is not");
  for (std::size_t i = 0; i < ctx.weights().size(); ++i) {
    const auto& w = ctx.weights()[i];
    const double A = ctx.weight_A(i);
    require_weight_A(report, w, A);
    const PointwiseSup s = lemma4_sup(ctx, w.field, A);
    report.floored_points += s.floored;
    report.add_case(w.name, s.lhs, s.rhs);
  }
  if (!ctx.weights().empty()) {
    const Field& b = ctx.weights()[0].field;
    const double base = lemma4_sup(ctx, b, ctx.weight_A(0)).sup;
    const Field b3 = scale(b, 3.0);
    record_homogeneity(report, base, lemma4_sup(ctx, b3, ctx.morrey(b3)).sup, "b -> 3b");
  }
  return report;
}

// ---------------------------------------------------------------- lemma5

RatioReport run_lemma5(const CheckContext& ctx, const CheckSettings& settings) {
  RatioReport report = new_report("lemma5", ctx);
  const GridSpec& spec = ctx.spec();
  const double p = ctx.params().p;
  const double alpha = ctx.params().alpha;
  const double d = spec.d;
  if (p * alpha >= d) {
    report.commentary.push_back("p*alpha >= d: the rho curve is not expected to stay flat");
  }
  std::vector<double> family_sup;
  double worst_case_flatness = 1.0;
  std::vector<std::vector<double>> per_weight(ctx.weights().size());
  for (double rho : settings.lemma5_rhos) {
    if (rho < 4.0 * spec.h || rho > spec.diameter() / 4.0) {
      std::ostringstream os;
      os << "rho = " << rho << " lies outside [4h, diam/4] = [" << 4.0 * spec.h << ", "
         << spec.diameter() / 4.0 << "]";
      report.commentary.push_back(os.str());
    }
    const Field ind = ball_indicator(spec, Point{0.0, 0.0, 0.0}, rho);
    double cells = 0.0;
    for (std::size_t i = 0; i < ind.size(); ++i) cells += ind[i];
    if (cells == 0.0) {
      report.commentary.push_back("rho below the grid resolution skipped");
      continue;
    }
    const double rho_eff = effective_radius(spec.d, cells * spec.cell_volume());
    const Field mi = ctx.apply_maximal(ind);
    double best = 0.0;
    for (std::size_t i = 0; i < ctx.weights().size(); ++i) {
      const auto& w = ctx.weights()[i];
      const double A = ctx.weight_A(i);
      const double lhs = weighted_power_integral(w.field, p, mi, 1.0);
      const double rhs = std::pow(A, p) * std::pow(rho_eff, d - p * alpha);
      std::ostringstream os;
      os << w.name << " rho=" << rho;
      report.add_case(os.str(), lhs, rhs);
      const double ratio = report.cases.back().ratio;
      report.curves.push_back(CurvePoint{"lemma5", w.name, "rho", rho, ratio});
      per_weight[i].push_back(ratio);
      best = std::max(best, ratio);
    }
    family_sup.push_back(best);
    report.curves.push_back(CurvePoint{"lemma5", "family_sup", "rho", rho, best});
  }
  auto flatness = [](const std::vector<double>& curve) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (double v : curve) {
      if (v > 0.0) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    return hi > 0.0 ? hi / lo : 1.0;
  };
  for (const auto& curve : per_weight) worst_case_flatness = std::max(worst_case_flatness, flatness(curve));
  report.note_max("flatness", flatness(family_sup));
  report.note_max("max_case_flatness", worst_case_flatness);
  if (!ctx.weights().empty() && !settings.lemma5_rhos.empty()) {
    const Field& b = ctx.weights()[0].field;
    const double rho = settings.lemma5_rhos.front();
    const Field mi = ctx.apply_maximal(ball_indicator(spec, Point{0.0, 0.0, 0.0}, rho));
    auto ratio = [&](const Field& bb, double A) {
      const double rhs = std::pow(A, p) * std::pow(rho, d - p * alpha);
      return rhs > 0.0 ? weighted_power_integral(bb, p, mi, 1.0) / rhs : 0.0;
    };
    const Field b3 = scale(b, 3.0);
    record_homogeneity(report, ratio(b, ctx.weight_A(0)), ratio(b3, ctx.morrey(b3)), "b -> 3b");
  }
  return report;
}

// ---------------------------------------------------------------- inner bound

PointwiseSup inner_sup(const CheckContext& ctx, const Field& b, double A) {
  const auto& P = ctx.params();
  const Field t = ctx.riesz().apply(abs_pow(b, (1.0 + P.gamma) * P.r));
  const Field lhs = ctx.riesz().apply(clamp_pow(t, 1.0 / (P.r - 1.0)));
  const double scale_rhs = std::pow(A, P.r_conj);
  const Field rhs = map(b, [&](double v) { return std::pow(v, P.gamma * P.r_conj) * scale_rhs; });
  return pointwise_sup(lhs, rhs, &b);
}

RatioReport run_inner_bound(const CheckContext& ctx) {
  RatioReport report = new_report("inner_bound", ctx);
  for (std::size_t i = 0; i < ctx.weights().size(); ++i) {
    const auto& w = ctx.weights()[i];
    const double A = ctx.weight_A(i);
    require_weight_A(report, w, A);
    const PointwiseSup s = inner_sup(ctx, w.field, A);
    report.floored_points += s.floored;
    report.add_case(w.name, s.lhs, s.rhs);
  }
  if (!ctx.weights().empty()) {
    const Field& b = ctx.weights()[0].field;
    const Field b3 = scale(b, 3.0);
    record_homogeneity(report, inner_sup(ctx, b, ctx.weight_A(0)).sup,
                       inner_sup(ctx, b3, ctx.morrey(b3)).sup, "b -> 3b");
  }
  return report;
}

// ---------------------------------------------------------------- duality

struct DualityValues {
  double pairing = 0.0;
  double defect = 0.0;
  double holder_rhs = 0.0;
};

DualityValues duality_values(const CheckContext& ctx, const Field& b, const Field& f, const Field& v) {
  const double r = ctx.params().r;
  Field g(b.spec());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double sign = v[i] < 0.0 ? -1.0 : 1.0;
    g[i] = std::pow(b[i], r) * std::pow(std::abs(v[i]), r - 1.0) * sign;
  }
  const Field rg = ctx.riesz().apply(g);
  DualityValues out;
  out.pairing = inner_product(g, v);
  const double other = inner_product(rg, f);
  out.defect = std::abs(out.pairing - other) /
               std::max(std::abs(out.pairing), std::numeric_limits<double>::min());
  out.holder_rhs = lp_norm(f, r) * lp_norm(rg, ctx.params().r_conj);
  return out;
}

RatioReport run_duality(const CheckContext& ctx) {
  RatioReport report = new_report("duality", ctx);
  for (std::size_t i = 0; i < ctx.weights().size(); ++i) {
    const auto& w = ctx.weights()[i];
    for (std::size_t j = 0; j < ctx.sources().size(); ++j) {
      const auto& s = ctx.sources()[j];
      const DualityValues dv = duality_values(ctx, w.field, s.field, ctx.source_potential(j));
      report.note_max("pairing_defect", dv.defect);
      if (dv.pairing != 0.0 && !(dv.defect <= 1e-10)) {
        report.flag("pairing defect above 1e-10 for " + pair_name(w, s));
      }
      const double slack = dv.holder_rhs - dv.pairing;
      report.note_max("holder_deficit", -slack / std::max(dv.holder_rhs, 1e-300));
      if (slack < -1e-12 * dv.holder_rhs) report.flag("Hoelder bound fails for " + pair_name(w, s));
      report.add_case(pair_name(w, s), dv.pairing, dv.holder_rhs);
    }
  }
  if (!ctx.weights().empty() && !ctx.sources().empty()) {
    const Field& b = ctx.weights()[0].field;
    const Field& f = ctx.sources()[0].field;
    const DualityValues base = duality_values(ctx, b, f, ctx.source_potential(0));
    const Field f2 = scale(f, 2.0);
    const DualityValues scaled = duality_values(ctx, b, f2, ctx.riesz().apply(f2));
    if (base.holder_rhs > 0.0 && scaled.holder_rhs > 0.0) {
      record_homogeneity(report, base.pairing / base.holder_rhs,
                         scaled.pairing / scaled.holder_rhs, "f -> 2f");
    }
  }
  return report;
}

// ---------------------------------------------------------------- a1 lift

struct LiftValues {
  double lhs = 0.0;
  double rhs = 0.0;
  std::size_t below = 0;
  double a1 = 0.0;
  bool interior_zero = false;
};

LiftValues lift_values(const CheckContext& ctx, const Field& b, double A, bool with_a1) {
  const auto& P = ctx.params();
  const Field lifted = a1_lift(b, P.p0, P.p1, ctx.conventions().ladder);
  LiftValues out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (lifted[i] < b[i]) ++out.below;
  }
  MorreyOptions options;
  options.ladder = ctx.conventions().ladder;
  options.keep_scan = false;
  const double lifted_A = morrey_constant(lifted, P.p1, P.alpha, options).A;
  // sup_B int_B lifted^p1 / rho^(d - p1 alpha) = |B_1| lifted_A^p1.
  out.lhs = unit_ball_volume(ctx.spec().d) * std::pow(lifted_A, P.p1);
  out.rhs = std::pow(A, P.p1);
  if (with_a1 && !lifted.is_zero()) {
    const A1Report a1 = a1_report(abs_pow(lifted, P.p1), 1e-300, ctx.conventions().ladder);
    out.a1 = a1.constant;
    out.interior_zero = a1.interior_zero;
  }
  return out;
}

RatioReport run_a1_lift(const CheckContext& ctx) {
  RatioReport report = new_report("a1_lift", ctx);
  for (std::size_t i = 0; i < ctx.weights().size(); ++i) {
    const auto& w = ctx.weights()[i];
    const double A = ctx.weight_A(i);
    require_weight_A(report, w, A);
    const LiftValues lv = lift_values(ctx, w.field, A, true);
    if (lv.below > 0) report.flag("lifted weight falls below b for " + w.name);
    report.note_max("a1_constant", lv.a1);
    if (lv.interior_zero) report.commentary.push_back("lifted weight has an interior zero: " + w.name);
    report.add_case(w.name, lv.lhs, lv.rhs);
  }
  if (!ctx.weights().empty()) {
    const Field& b = ctx.weights()[0].field;
    const LiftValues base = lift_values(ctx, b, ctx.weight_A(0), false);
    const Field b3 = scale(b, 3.0);
    const LiftValues scaled = lift_values(ctx, b3, ctx.morrey(b3), false);
    if (base.rhs > 0.0 && scaled.rhs > 0.0) {
      record_homogeneity(report, base.lhs / base.rhs, scaled.lhs / scaled.rhs, "b -> 3b");
    }
  }
  return report;
}

// ---------------------------------------------------------------- Fefferman-Stein

RatioReport run_fefferman_stein(const CheckContext& ctx, double s) {
  if (!(s > 1.0)) throw Error(ErrorCode::InvalidArgument, "Fefferman-Stein exponent must exceed 1");
  RatioReport report = new_report("fefferman_stein", ctx);
  report.diagnostics["s"] = s;
  for (std::size_t j = 0; j < ctx.sources().size(); ++j) {
    const auto& g = ctx.sources()[j];
    const Field& mg = ctx.source_maximal(j);
    for (std::size_t i = 0; i < ctx.weights().size(); ++i) {
      const auto& w = ctx.weights()[i];
      const Field& mw = ctx.weight_maximal(i);
      report.add_case(pair_name(g, w), weighted_power_integral(w.field, 1.0, mg, s),
                      weighted_power_integral(mw, 1.0, g.field, s));
    }
  }
  if (!ctx.weights().empty() && !ctx.sources().empty()) {
    const Field& w = ctx.weights()[0].field;
    const Field& mw = ctx.weight_maximal(0);
    auto ratio = [&](const Field& g, const Field& mg) {
      const double rhs = weighted_power_integral(mw, 1.0, g, s);
      return rhs > 0.0 ? weighted_power_integral(w, 1.0, mg, s) / rhs : 0.0;
    };
    const Field g2 = scale(ctx.sources()[0].field, 2.0);
    record_homogeneity(report, ratio(ctx.sources()[0].field, ctx.source_maximal(0)),
                       ratio(g2, ctx.apply_maximal(g2)), "g -> 2g");
  }
  return report;
}

// ---------------------------------------------------------------- corollary 2

RatioReport run_corollary2(const CheckContext& ctx) {
  RatioReport report = new_report("corollary2", ctx);
  const auto& P = ctx.params();
  const GridSpec& spec = ctx.spec();
  const bool grad = P.alpha == 1.0 && spec.d >= 2;
  if (!grad) report.commentary.push_back("gradient form needs alpha = 1 and d >= 2; only the fractional form is checked");
  const SpectralBox box(spec, 2);
  const double c = riesz_inversion_constant(spec.d, P.alpha);
  double quotient_lo = std::numeric_limits<double>::infinity();
  double quotient_hi = 0.0;
  std::vector<double> f_norms;
  std::vector<double> du_norms;
  for (std::size_t j = 0; j < ctx.sources().size(); ++j) {
    const auto& u = ctx.sources()[j];
    const Field f = box.frac_laplacian(u.field, P.alpha);
    const Field back = ctx.riesz().apply(f);
    double err = 0.0;
    for (std::size_t i = 0; i < back.size(); ++i) err = std::max(err, std::abs(c * back[i] - u.field[i]));
    if (u.field.max_abs() > 0.0) report.note_max("roundtrip_residual", err / u.field.max_abs());
    const double f_int = power_integral(f, P.r);
    double du_int = 0.0;
    if (grad) {
      du_int = power_integral(box.gradient_norm(u.field), P.r);
      if (f_int > 0.0) {
        const double q = std::pow(du_int / f_int, 1.0 / P.r);
        quotient_lo = std::min(quotient_lo, q);
        quotient_hi = std::max(quotient_hi, q);
      }
    }
    for (std::size_t i = 0; i < ctx.weights().size(); ++i) {
      const auto& w = ctx.weights()[i];
      const double A = ctx.weight_A(i);
      const double lhs = weighted_power_integral(w.field, P.r, u.field, P.r);
      const double Ar = std::pow(A, P.r);
      report.add_case("frac " + pair_name(w, u), lhs, Ar * f_int);
      if (grad) report.add_case("grad " + pair_name(w, u), lhs, Ar * du_int);
    }
  }
  if (grad && quotient_hi > 0.0) {
    report.diagnostics["grad_frac_quotient_min"] = quotient_lo;
    report.diagnostics["grad_frac_quotient_max"] = quotient_hi;
  }
  if (!ctx.weights().empty() && !ctx.sources().empty()) {
    const Field& b = ctx.weights()[0].field;
    const double A = ctx.weight_A(0);
    auto ratio = [&](const Field& u) {
      const double rhs = std::pow(A, P.r) * power_integral(box.frac_laplacian(u, P.alpha), P.r);
      return rhs > 0.0 ? weighted_power_integral(b, P.r, u, P.r) / rhs : 0.0;
    };
    const Field& u = ctx.sources()[0].field;
    record_homogeneity(report, ratio(u), ratio(scale(u, 2.0)), "u -> 2u");
  }
  return report;
}

CheckContext single_context(const Field& b, const Field* f, const ExponentParams& params,
                            const Conventions& conventions) {
  std::vector<NamedField> weights{{"b", b}};
  std::vector<NamedField> sources;
  if (f) sources.push_back({"f", *f});
  return CheckContext(b.spec(), params, conventions, std::move(weights), std::move(sources));
}

// Parameters for checks that only fix some exponents; r stays admissible.
ExponentParams partial_params(int d, double alpha, double p, double q) {
  ExponentParams P;
  P.d = d;
  P.alpha = alpha;
  P.p = p;
  P.q = q;
  P.r = 0.5 * (std::max(1.0, alpha) + p);
  P.r_conj = P.r / (P.r - 1.0);
  P.gamma = choose_gamma(P.r, P.p);
  P.p0 = 0.5 * (P.r + P.p);
  P.p1 = 0.5 * (P.r + P.p0);
  return P;
}

}  // namespace

RatioReport run_check(std::string_view name, const CheckContext& ctx, const CheckSettings& settings) {
  if (name == "theorem1") return run_theorem1(ctx);
  if (name == "lemma4") return run_lemma4(ctx);
  if (name == "lemma5") return run_lemma5(ctx, settings);
  if (name == "inner_bound") return run_inner_bound(ctx);
  if (name == "duality") return run_duality(ctx);
  if (name == "a1_lift") return run_a1_lift(ctx);
  if (name == "fefferman_stein") return run_fefferman_stein(ctx, ctx.params().p / ctx.params().p0);
  if (name == "corollary2") return run_corollary2(ctx);
  throw Error(ErrorCode::InvalidArgument, "unknown check: " + std::string(name));
}

RatioReport check_theorem1(const Field& b, const Field& f, const ExponentParams& params,
                           const Conventions& conventions) {
  return run_theorem1(single_context(b, &f, params, conventions));
}

RatioReport check_lemma4(const Field& b, double q, double alpha, double p,
                         const Conventions& conventions) {
  if (!(q > 1.0) || q > p) throw Error(ErrorCode::InvalidArgument, "lemma4 needs 1 < q <= p");
  return run_lemma4(single_context(b, nullptr, partial_params(b.spec().d, alpha, p, q), conventions));
}

RatioReport check_lemma5(const Field& b, double p, double alpha, const std::vector<double>& rhos,
                         const Conventions& conventions) {
  CheckSettings settings;
  settings.lemma5_rhos = rhos;
  const auto params = partial_params(b.spec().d, alpha, p, 0.5 * (1.0 + p));
  return run_lemma5(single_context(b, nullptr, params, conventions), settings);
}

RatioReport check_inner_bound(const Field& b, const ExponentParams& params,
                              const Conventions& conventions) {
  return run_inner_bound(single_context(b, nullptr, params, conventions));
}

RatioReport check_duality_step(const Field& b, const Field& f, const ExponentParams& params,
                               const Conventions& conventions) {
  return run_duality(single_context(b, &f, params, conventions));
}

RatioReport check_a1_lift(const Field& b, const ExponentParams& params,
                          const Conventions& conventions) {
  return run_a1_lift(single_context(b, nullptr, params, conventions));
}

RatioReport check_fefferman_stein(const Field& g, const Field& w, double s,
                                  const Conventions& conventions) {
  if (!(s > 1.0)) throw Error(ErrorCode::InvalidArgument, "Fefferman-Stein exponent must exceed 1");
  if (!w.is_nonnegative()) throw Error(ErrorCode::InvalidArgument, "weight must be nonnegative");
  // alpha and p only enter the unused Morrey constant; any admissible pair works.
  const int d = w.spec().d;
  const auto params = partial_params(d, 0.5, 2.0, 1.5);
  return run_fefferman_stein(single_context(w, &g, params, conventions), s);
}

RatioReport check_corollary2(const Field& u, const Field& b, const ExponentParams& params,
                             const Conventions& conventions) {
  return run_corollary2(single_context(b, &u, params, conventions));
}

double refinement_drift(const RatioReport& report) {
  double drift = 0.0;
  for (std::size_t k = 1; k < report.refinement.size(); ++k) {
    const double a = report.refinement[k - 1].sup_ratio;
    const double b = report.refinement[k].sup_ratio;
    if (a == 0.0 && b == 0.0) continue;
    if (!std::isfinite(a) || !std::isfinite(b) || a == 0.0) return std::numeric_limits<double>::infinity();
    drift = std::max(drift, std::abs(b - a) / a);
  }
  return drift;
}

void assign_verdict(RatioReport& report, double drift_tolerance, double flatness_factor) {
  if (report.verdict == Verdict::Error) return;
  if (report.violated || !std::isfinite(report.sup_ratio)) {
    report.verdict = Verdict::Violation;
    return;
  }
  report.verdict = Verdict::Pass;
  const double drift = refinement_drift(report);
  report.diagnostics["drift"] = drift;
  if (drift > drift_tolerance) {
    std::ostringstream os;
    os << "sup ratio drifts by " << drift << " under refinement (tolerance " << drift_tolerance << ")";
    report.commentary.push_back(os.str());
    report.verdict = Verdict::Warn;
  }
  const auto flat = report.diagnostics.find("flatness");
  if (flat != report.diagnostics.end() && flat->second > flatness_factor) {
    std::ostringstream os;
    os << "rho curve varies by a factor " << flat->second << " (limit " << flatness_factor << ")";
    report.commentary.push_back(os.str());
    report.verdict = Verdict::Warn;
  }
}

}  // namespace rieszcheck
