#include "rieszcheck/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "rieszcheck/error.hpp"

namespace rieszcheck {

namespace {

Json number_list(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(number_json(v));
  return out;
}

Json path_list(const std::vector<std::filesystem::path>& paths) {
  Json out = Json::array();
  for (const auto& p : paths) out.push_back(p.string());
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

Json number_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

Json to_json(const Conventions& c) {
  return Json{{"morrey", std::string(to_string(c.morrey))},
              {"kernel", std::string(to_string(c.kernel))},
              {"maximal", c.maximal},
              {"ladder", std::string(to_string(c.ladder))}};
}

Json to_json(const ExponentParams& P) {
  Json out{{"d", P.d},
           {"alpha", P.alpha},
           {"r", P.r},
           {"p", P.p},
           {"q", P.q},
           {"gamma", P.gamma},
           {"r_conj", number_json(P.r_conj)},
           {"p0", P.p0},
           {"p1", P.p1}};
  out["warnings"] = P.warnings.messages();
  return out;
}

Json to_json(const RunConfig& config) {
  Json campaigns = Json::array();
  for (const auto& c : config.campaigns) {
    const auto& f = c.families;
    campaigns.push_back(Json{
        {"label", c.label},
        {"params", Json{{"d", c.params.d}, {"alpha", c.params.alpha}, {"r", c.params.r}, {"p", c.params.p}, {"q", c.params.q}}},
        {"grid", Json{{"n", c.n}, {"extent", c.extent}, {"refinements", c.refinements}}},
        {"families", Json{{"power_fractions", number_list(f.power_fractions)},
                          {"power_cutoff", f.power_cutoff},
                          {"indicator_radii", number_list(f.indicator_radii)},
                          {"box_half_widths", number_list(f.box_half_widths)},
                          {"weight_seeds", f.weight_seeds},
                          {"weight_smoothness", f.weight_smoothness},
                          {"weight_floor", f.weight_floor},
                          {"gaussian_widths", number_list(f.gaussian_widths)},
                          {"source_seeds", f.source_seeds},
                          {"weight_files", path_list(f.weight_files)},
                          {"source_files", path_list(f.source_files)}}},
        {"checks", c.checks},
        {"lemma5_rhos", number_list(c.settings.lemma5_rhos)},
        {"flatness_factor", c.settings.flatness_factor},
        {"drift_tolerance", c.drift_tolerance}});
  }
  return Json{{"conventions", to_json(config.conventions)},
              {"oracle_gate", config.oracle_gate},
              {"output", Json{{"json", config.output.json.string()}, {"csv", config.output.csv.string()}}},
              {"campaigns", campaigns}};
}

Json to_json(const RatioReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    cases.push_back(Json{{"case", c.descriptor},
                         {"lhs", number_json(c.lhs)},
                         {"rhs", number_json(c.rhs)},
                         {"ratio", number_json(c.ratio)}});
  }
  Json refinement = Json::array();
  for (const auto& p : r.refinement) {
    refinement.push_back(Json{{"h", p.h}, {"sup_ratio", number_json(p.sup_ratio)}});
  }
  Json diagnostics = Json::object();
  for (const auto& [key, value] : r.diagnostics) diagnostics[key] = number_json(value);
  return Json{{"name", r.name},
              {"params", to_json(r.params)},
              {"conventions", to_json(r.conventions)},
              {"verdict", std::string(to_string(r.verdict))},
              {"sup_ratio", number_json(r.sup_ratio)},
              {"refinement", refinement},
              {"diagnostics", diagnostics},
              {"floored_points", r.floored_points},
              {"commentary", r.commentary},
              {"cases", cases}};
}

Json to_json(const OracleGateReport& gate) {
  Json entries = Json::array();
  for (const auto& e : gate.entries) {
    entries.push_back(Json{{"name", e.name},
                           {"d", e.d},
                           {"n", e.n},
                           {"samples", e.samples},
                           {"max_deviation", number_json(e.max_deviation)},
                           {"tolerance", e.tolerance},
                           {"pass", e.pass}});
  }
  return Json{{"pass", gate.pass}, {"entries", entries}};
}

Json to_json(const MorreyReport& report, int d) {
  Json center = Json::array();
  for (int a = 0; a < d; ++a) center.push_back(report.argmax_ball.center[a]);
  return Json{{"A", number_json(report.A)},
              {"convention", std::string(to_string(report.convention))},
              {"argmax", Json{{"center", center}, {"radius", report.argmax_ball.radius}}}};
}

Json suite_json(const SuiteReport& suite, const RunConfig& config, const std::string& timestamp) {
  Json reports = Json::array();
  Json verdicts = Json::object();
  for (const auto& r : suite.reports) {
    reports.push_back(to_json(r));
    verdicts[r.name] = std::string(to_string(r.verdict));
  }
  Json doc{{"config", to_json(config)}, {"conventions", to_json(suite.conventions)}};
  doc["oracle_gate"] = suite.gate ? to_json(*suite.gate) : Json(nullptr);
  doc["reports"] = reports;
  doc["verdicts"] = verdicts;
  doc["exit_code"] = suite.exit_code();
  doc["timestamp"] = timestamp;
  return doc;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_curves_csv(const SuiteReport& suite, std::ostream& out) {
  out << "check,case,x_name,x,ratio\n";
  for (const auto& r : suite.reports) {
    for (const auto& p : r.curves) {
      out << csv_field(p.check) << ',' << csv_field(p.case_name) << ',' << csv_field(p.x_name) << ','
          << csv_number(p.x) << ',' << csv_number(p.ratio) << '\n';
    }
  }
}

void write_json_file(const Json& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path.string());
}

void write_curves_csv_file(const SuiteReport& suite, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
  write_curves_csv(suite, out);
  if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path.string());
}

void write_summary(const SuiteReport& suite, std::ostream& out) {
  if (suite.gate) {
    out << "oracle gate: " << (suite.gate->pass ? "PASS" : "FAIL") << '\n';
    for (const auto& e : suite.gate->entries) {
      out << "  " << e.name << " d=" << e.d << " n=" << e.n << " max deviation " << e.max_deviation
          << " (tolerance " << e.tolerance << ")\n";
    }
  }
  for (const auto& r : suite.reports) {
    out << std::left << std::setw(10) << to_string(r.verdict) << r.name << "  sup ratio " << r.sup_ratio;
    const auto drift = r.diagnostics.find("drift");
    if (drift != r.diagnostics.end()) out << "  drift " << drift->second;
    out << '\n';
    for (const auto& line : r.commentary) out << "    " << line << '\n';
  }
}

}  // namespace rieszcheck
