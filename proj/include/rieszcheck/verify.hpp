#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rieszcheck/grid.hpp"
#include "rieszcheck/maximal.hpp"
#include "rieszcheck/morrey.hpp"
#include "rieszcheck/oracle.hpp"
#include "rieszcheck/params.hpp"
#include "rieszcheck/riesz.hpp"

namespace rieszcheck {

enum class Verdict { Pass, Warn, Violation, Error };

std::string_view to_string(Verdict verdict);

/// Conventions shared by every check of a run; echoed in every report.
struct Conventions {
  MorreyConvention morrey = MorreyConvention::Average;
  CentralWeight kernel = CentralWeight::LatticeZeta;
  /// Only the centered operator is implemented.
  std::string maximal = "centered";
  LadderKind ladder = LadderKind::Standard;
};

struct RatioCase {
  std::string descriptor;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

struct RefinementPoint {
  double h = 0.0;
  double sup_ratio = 0.0;
};

/// One point of a ratio curve (ratio against rho, h, ...).
struct CurvePoint {
  std::string check;
  std::string case_name;
  std::string x_name;
  double x = 0.0;
  double ratio = 0.0;
};

/// Outcome of one check: both sides per case, the empirical constant and
/// its behaviour under refinement.
struct RatioReport {
  std::string name;
  ExponentParams params;
  Conventions conventions;
  std::vector<RatioCase> cases;
  double sup_ratio = 0.0;
  std::vector<RefinementPoint> refinement;
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> commentary;
  /// Named scalar side results (homogeneity defects, A1 constants, ...).
  std::map<std::string, double> diagnostics;
  std::vector<CurvePoint> curves;
  /// Points excluded from pointwise ratios because the bound fell below the floor.
  std::size_t floored_points = 0;
  bool violated = false;

  /// Appends a case. rhs = 0 with lhs > 0, or a non-finite side, marks a violation.
  void add_case(std::string descriptor, double lhs, double rhs);
  /// Marks a violation with an explanation.
  void flag(const std::string& why);
  /// Records max(diagnostics[key], value).
  void note_max(const std::string& key, double value);
  /// Merges cases, curves, diagnostics and flags of another report.
  void absorb(const RatioReport& other, const std::string& prefix);
};

struct SuiteReport {
  std::vector<RatioReport> reports;
  Conventions conventions;
  /// Present when the run started with the oracle gate.
  std::optional<OracleGateReport> gate;
  /// Exit status of the run: 0 clean, 1 violation, failed check or failed gate.
  int exit_code() const;
};

/// Defect tolerance of the exact scaling identities.
inline constexpr double kHomogeneityTolerance = 1e-10;
/// Floor below which pointwise bounds are excluded.
inline constexpr double kDenominatorFloor = 1e-30;

struct NamedField {
  std::string name;
  Field field;
};

/// Probe families on one grid, with the operator applications shared by
/// several checks computed once.
class CheckContext {
 public:
  CheckContext(const GridSpec& spec, const ExponentParams& params, Conventions conventions,
               std::vector<NamedField> weights, std::vector<NamedField> sources);

  const GridSpec& spec() const { return spec_; }
  const ExponentParams& params() const { return params_; }
  const Conventions& conventions() const { return conventions_; }
  const std::vector<NamedField>& weights() const { return weights_; }
  const std::vector<NamedField>& sources() const { return sources_; }
  const RieszOperator& riesz() const { return riesz_; }

  /// Morrey constant of a weight under the run conventions.
  double morrey(const Field& b) const;
  double weight_A(std::size_t i) const;
  const Field& source_potential(std::size_t i) const;
  const Field& source_maximal(std::size_t i) const;
  const Field& weight_maximal(std::size_t i) const;
  Field apply_maximal(const Field& f) const;

 private:
  GridSpec spec_;
  ExponentParams params_;
  Conventions conventions_;
  std::vector<NamedField> weights_;
  std::vector<NamedField> sources_;
  RieszOperator riesz_;
  RadiusLadder ladder_;
  mutable std::vector<std::optional<double>> weight_A_;
  mutable std::vector<std::optional<Field>> source_potential_;
  mutable std::vector<std::optional<Field>> source_maximal_;
  mutable std::vector<std::optional<Field>> weight_maximal_;
};

struct CheckSettings {
  /// Ball radii of the lemma5 sweep.
  std::vector<double> lemma5_rhos = {0.125, 0.25, 0.5, 1.0, 2.0};
  /// Maximum allowed max/min of the rho curve.
  double flatness_factor = 3.0;
};

/// Names accepted by run_check, in suite order.
const std::vector<std::string>& check_names();
bool is_check_name(std::string_view name);

/// Runs one check over every probe of the context.
RatioReport run_check(std::string_view name, const CheckContext& ctx,
                      const CheckSettings& settings = {});

// Single-probe entry points. Each builds a one-weight, one-source context.

/// int b^r |R f|^r against A^r int |f|^r.
RatioReport check_theorem1(const Field& b, const Field& f, const ExponentParams& params,
                           const Conventions& conventions = {});
/// R(b^q) against A (M b^q)^(1 - 1/q), pointwise.
RatioReport check_lemma4(const Field& b, double q, double alpha, double p,
                         const Conventions& conventions = {});
/// int b^p M(1_{B_rho}) against A^p rho^(d - p alpha), per rho.
RatioReport check_lemma5(const Field& b, double p, double alpha, const std::vector<double>& rhos,
                         const Conventions& conventions = {});
/// R[(R b^((1+gamma) r))^(1/(r-1))] against b^(gamma r') A^(r'), on the support of b.
RatioReport check_inner_bound(const Field& b, const ExponentParams& params,
                              const Conventions& conventions = {});
/// Pairing symmetry and the Hoelder step of the duality argument.
RatioReport check_duality_step(const Field& b, const Field& f, const ExponentParams& params,
                               const Conventions& conventions = {});
/// Ball integrals of the lifted weight against rho^(d - p1 alpha) A^p1.
RatioReport check_a1_lift(const Field& b, const ExponentParams& params,
                          const Conventions& conventions = {});
/// int (M g)^s w against int |g|^s M w. Requires s > 1.
RatioReport check_fefferman_stein(const Field& g, const Field& w, double s,
                                  const Conventions& conventions = {});
/// int b^r |u|^r against A^r int |(-Delta)^(alpha/2) u|^r and, for alpha = 1
/// and d >= 2, against A^r int |Du|^r.
RatioReport check_corollary2(const Field& u, const Field& b, const ExponentParams& params,
                             const Conventions& conventions = {});

/// Assigns the verdict of a multi-level report from its stored data.
void assign_verdict(RatioReport& report, double drift_tolerance, double flatness_factor);

/// Largest relative change of sup_ratio between consecutive refinement levels.
double refinement_drift(const RatioReport& report);

}  // namespace rieszcheck
