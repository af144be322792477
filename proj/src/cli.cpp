#include "rieszcheck/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <string>

#include "rieszcheck/config.hpp"
#include "rieszcheck/error.hpp"
#include "rieszcheck/families.hpp"
#include "rieszcheck/field_io.hpp"
#include "rieszcheck/maximal.hpp"
#include "rieszcheck/morrey.hpp"
#include "rieszcheck/oracle.hpp"
#include "rieszcheck/parallel.hpp"
#include "rieszcheck/report.hpp"
#include "rieszcheck/riesz.hpp"
#include "rieszcheck/spectral.hpp"
#include "rieszcheck/suite.hpp"

namespace rieszcheck {

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidParams:
    case ErrorCode::BadMagic:
    case ErrorCode::UnsupportedDimension:
    case ErrorCode::UnsupportedShape:
    case ErrorCode::TruncatedPayload:
    case ErrorCode::NonFiniteValue:
    case ErrorCode::IoFailure:
    case ErrorCode::SizeGuard:
    case ErrorCode::ConfigError:
      return true;
    default:
      return false;
  }
}

struct OperatorArgs {
  std::string in;
  std::string out;
  double alpha = 0.0;
  std::string kernel = "zeta";
  std::string method = "fft";
  std::string ladder = "standard";
  double p = 0.0;
  std::string convention = "avg";
  std::size_t stride = 4;
  std::string json;
  int pad = 2;
  bool gradient = false;
};

struct VerifyArgs {
  std::string check;
  std::string config;
  std::string json;
  std::string csv;
  std::string convention;
  bool no_gate = false;
  bool quiet = false;
  std::string timestamp;
};

struct GenArgs {
  std::string kind;
  int d = 1;
  std::size_t n = 256;
  double extent = 4.0;
  double beta = 0.25;
  double cutoff = 1.0;
  double radius = 0.5;
  double sigma = 0.1;
  double smoothness = 0.25;
  double floor = 0.05;
  std::uint64_t seed = 1;
  std::string out;
};

int run_riesz(const OperatorArgs& a, std::ostream& out) {
  const Field f = load_field(a.in);
  const CentralWeight central = parse_central_weight(a.kernel);
  Field v;
  if (a.method == "fft") {
    v = riesz_fft(f, a.alpha, central);
  } else if (a.method == "direct") {
    v = riesz_direct(f, a.alpha, central);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown method: " + a.method);
  }
  save_field(v, a.out);
  out << "wrote " << a.out << '\n';
  return 0;
}

int run_maximal(const OperatorArgs& a, std::ostream& out) {
  const Field f = load_field(a.in);
  save_field(maximal(f, parse_ladder_kind(a.ladder)), a.out);
  out << "wrote " << a.out << '\n';
  return 0;
}

int run_morrey(const OperatorArgs& a, std::ostream& out) {
  const Field b = load_field(a.in);
  if (!b.is_nonnegative()) throw Error(ErrorCode::InvalidArgument, "weight field " + a.in + " has negative values");
  MorreyOptions options;
  options.convention = parse_morrey_convention(a.convention);
  options.ladder = parse_ladder_kind(a.ladder);
  options.stride = a.stride;
  options.keep_scan = false;
  const MorreyReport report = morrey_constant(b, a.p, a.alpha, options);
  Json doc = to_json(report, b.spec().d);
  doc["p"] = a.p;
  doc["alpha"] = a.alpha;
  doc["stride"] = a.stride;
  doc["ladder"] = a.ladder;
  if (!a.json.empty()) write_json_file(doc, a.json);
  out << doc.dump(2) << '\n';
  return 0;
}

int run_fraclap(const OperatorArgs& a, std::ostream& out) {
  const Field u = load_field(a.in);
  const SpectralBox box(u.spec(), a.pad);
  save_field(a.gradient ? box.gradient_norm(u) : box.frac_laplacian(u, a.alpha), a.out);
  out << "wrote " << a.out << '\n';
  return 0;
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  RunConfig config = load_config(a.config);
  if (!a.convention.empty()) config.conventions.morrey = parse_morrey_convention(a.convention);
  SuiteOptions options;
  if (a.check != "all") {
    if (!is_check_name(a.check)) throw Error(ErrorCode::ConfigError, "unknown check: " + a.check);
    options.only_check = a.check;
  }
  if (a.no_gate) options.run_gate = false;
  if (!a.quiet) options.log = &err;
  const SuiteReport suite = run_suite(config, options);
  const std::filesystem::path json = a.json.empty() ? config.output.json : std::filesystem::path(a.json);
  const std::filesystem::path csv = a.csv.empty() ? config.output.csv : std::filesystem::path(a.csv);
  if (!json.empty()) {
    write_json_file(suite_json(suite, config, a.timestamp.empty() ? utc_timestamp() : a.timestamp), json);
  }
  if (!csv.empty()) write_curves_csv_file(suite, csv);
  write_summary(suite, out);
  return suite.exit_code();
}

int run_gate(const OracleGateOptions& options, std::ostream& out) {
  const OracleGateReport gate = run_oracle_gate(options);
  for (const auto& e : gate.entries) {
    out << (e.pass ? "PASS " : "FAIL ") << e.name << " d=" << e.d << " n=" << e.n << " samples=" << e.samples
        << " max deviation " << std::setprecision(3) << e.max_deviation << " (tolerance " << e.tolerance << ")\n";
  }
  out << "oracle gate " << (gate.pass ? "PASS" : "FAIL") << " in " << std::setprecision(3) << gate.seconds << " s\n";
  return gate.pass ? 0 : kExitViolation;
}

int run_gen(const GenArgs& a, std::ostream& out) {
  const GridSpec spec = centered_grid(a.d, a.n, a.extent);
  spec.validate();
  Field f;
  if (a.kind == "power") f = power_weight(spec, a.beta, 1.0, a.cutoff);
  else if (a.kind == "ball") f = indicator_weight(spec, a.radius);
  else if (a.kind == "box") f = box_weight(spec, a.radius);
  else if (a.kind == "random-weight") f = random_weight(a.seed, spec, a.smoothness, a.floor);
  else if (a.kind == "gaussian") f = gaussian_source(spec, a.sigma);
  else if (a.kind == "bump") f = random_source(a.seed, spec);
  else throw Error(ErrorCode::InvalidArgument, "unknown field kind: " + a.kind);
  save_field(f, a.out);
  out << "wrote " << a.out << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riesz potential, maximal operator and Morrey constant toolkit", "rieszcheck"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);

  OperatorArgs op;
  auto* riesz = app.add_subcommand("riesz", "Apply the Riesz potential to a field file");
  riesz->add_option("--alpha", op.alpha, "Order alpha, 0 < alpha < d")->required();
  riesz->add_option("--in", op.in, "Input field")->required();
  riesz->add_option("--out", op.out, "Output field")->required();
  riesz->add_option("--kernel", op.kernel, "Central weight rule")->check(CLI::IsMember({"zeta", "cell", "midpoint"}));
  riesz->add_option("--method", op.method, "fft or direct")->check(CLI::IsMember({"fft", "direct"}));

  auto* max = app.add_subcommand("maximal", "Apply the centered maximal operator");
  max->add_option("--in", op.in, "Input field")->required();
  max->add_option("--out", op.out, "Output field")->required();
  max->add_option("--ladder", op.ladder, "Radius ladder")->check(CLI::IsMember({"standard", "full"}));

  auto* morrey = app.add_subcommand("morrey", "Estimate the Morrey constant of a weight");
  morrey->add_option("--in", op.in, "Weight field")->required();
  morrey->add_option("--p", op.p, "Exponent p")->required();
  morrey->add_option("--alpha", op.alpha, "Order alpha")->required();
  morrey->add_option("--morrey-convention", op.convention, "avg or raw")->check(CLI::IsMember({"avg", "raw"}));
  morrey->add_option("--ladder", op.ladder, "Radius ladder")->check(CLI::IsMember({"standard", "full"}));
  morrey->add_option("--stride", op.stride, "Center stride in cells")->check(CLI::PositiveNumber);
  morrey->add_option("--json", op.json, "Also write the JSON result here");

  auto* fraclap = app.add_subcommand("fraclap", "Apply the spectral fractional Laplacian");
  fraclap->add_option("--in", op.in, "Input field")->required();
  fraclap->add_option("--out", op.out, "Output field")->required();
  fraclap->add_option("--alpha", op.alpha, "Order alpha");
  fraclap->add_option("--pad", op.pad, "Padding factor (1: periodic)")->check(CLI::Range(1, 8));
  fraclap->add_flag("--gradient-norm", op.gradient, "Write |Du| instead");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the inequality suite");
  verify->add_option("check", va.check, "Check name or 'all'")->required();
  verify->add_option("--config", va.config, "Config file")->required();
  verify->add_option("--json", va.json, "JSON report path (overrides the config)");
  verify->add_option("--csv", va.csv, "CSV curve path (overrides the config)");
  verify->add_option("--morrey-convention", va.convention, "avg or raw")->check(CLI::IsMember({"avg", "raw"}));
  verify->add_flag("--no-gate", va.no_gate, "Skip the oracle gate");
  verify->add_flag("--quiet", va.quiet, "No progress output");
  verify->add_option("--timestamp", va.timestamp, "Fixed timestamp for the JSON report");

  OracleGateOptions gate;
  auto* gate_cmd = app.add_subcommand("oracle-gate", "Compare fast operators with brute-force references");
  gate_cmd->add_option("--n1", gate.n1, "Points of the d=1 grid")->check(CLI::Range(4, 4096));
  gate_cmd->add_option("--n2", gate.n2, "Points per axis of the d=2 grid")->check(CLI::Range(4, 256));
  gate_cmd->add_option("--seeds", gate.seeds, "Random fields per grid")->check(CLI::PositiveNumber);
  gate_cmd->add_option("--points", gate.maximal_points, "Sampled maximal points")->check(CLI::PositiveNumber);
  gate_cmd->add_option("--seed", gate.seed, "Base seed");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Write a probe field");
  gen->add_option("kind", ga.kind, "power, ball, box, random-weight, gaussian or bump")
      ->required()
      ->check(CLI::IsMember({"power", "ball", "box", "random-weight", "gaussian", "bump"}));
  gen->add_option("--d", ga.d, "Dimension")->check(CLI::Range(1, 3));
  gen->add_option("--n", ga.n, "Points per axis")->check(CLI::Range(1, 1 << 22));
  gen->add_option("--extent", ga.extent, "Box side length")->check(CLI::PositiveNumber);
  gen->add_option("--beta", ga.beta, "Power weight exponent");
  gen->add_option("--cutoff", ga.cutoff, "Power weight cutoff radius");
  gen->add_option("--radius", ga.radius, "Ball radius or box half width");
  gen->add_option("--sigma", ga.sigma, "Gaussian width");
  gen->add_option("--smoothness", ga.smoothness, "Random weight length scale");
  gen->add_option("--floor", ga.floor, "Random weight floor");
  gen->add_option("--seed", ga.seed, "Seed");
  gen->add_option("--out", ga.out, "Output field")->required();

  std::string convert_in;
  std::string convert_out;
  auto* convert = app.add_subcommand("convert", "Convert between .rzf and .csv field files");
  convert->add_option("--in", convert_in, "Input field")->required();
  convert->add_option("--out", convert_out, "Output field")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    set_thread_count(threads);
    if (riesz->parsed()) return run_riesz(op, out);
    if (max->parsed()) return run_maximal(op, out);
    if (morrey->parsed()) return run_morrey(op, out);
    if (fraclap->parsed()) {
      if (!op.gradient && fraclap->count("--alpha") == 0) {
        throw Error(ErrorCode::InvalidArgument, "fraclap needs --alpha unless --gradient-norm is given");
      }
      return run_fraclap(op, out);
    }
    if (verify->parsed()) return run_verify(va, out, err);
    if (gate_cmd->parsed()) return run_gate(gate, out);
    if (gen->parsed()) return run_gen(ga, out);
    if (convert->parsed()) {
      save_field(load_field(convert_in), convert_out);
      out << "wrote " << convert_out << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_error(e.code()) ? kExitUsage : kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace rieszcheck
