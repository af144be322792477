#include "rieszcheck/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "rieszcheck/error.hpp"
#include "rieszcheck/field_io.hpp"

namespace rieszcheck {

namespace pt = boost::property_tree;

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorCode::ConfigError, message); }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (!piece.empty()) out.push_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double to_number(const std::string& s, const std::string& where) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    fail(where + ": not a number: '" + s + "'");
  }
  return v;
}

std::uint64_t to_unsigned(const std::string& s, const std::string& where) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    fail(where + ": not a nonnegative integer: '" + s + "'");
  }
  return v;
}

bool to_bool(const std::string& s, const std::string& where) {
  if (s == "true" || s == "yes" || s == "1" || s == "on") return true;
  if (s == "false" || s == "no" || s == "0" || s == "off") return false;
  fail(where + ": expected a boolean, got '" + s + "'");
}

void check_keys(const pt::ptree& section, const std::string& name, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : section) {
    if (!allowed.count(key)) fail("[" + name + "]: unknown key '" + key + "'");
    if (!value.empty()) fail("[" + name + "]: nested key '" + key + "'");
  }
}

std::filesystem::path resolve(const std::string& entry, const std::filesystem::path& base) {
  std::string path = entry;
  if (path.rfind("file:", 0) == 0) path = path.substr(5);
  std::filesystem::path p(path);
  return p.is_relative() && !base.empty() ? base / p : p;
}

void apply_families(FamilyConfig& fam, const pt::ptree& section, const std::string& name,
                    const std::filesystem::path& base) {
  check_keys(section, name,
             {"power_fractions", "power_cutoff", "indicator_radii", "box_half_widths",
              "weight_seeds", "weight_smoothness", "weight_floor", "gaussian_widths",
              "source_seeds", "weight_files", "source_files"});
  for (const auto& [key, node] : section) {
    const std::string value = node.data();
    const std::string where = "[" + name + "] " + key;
    auto numbers = [&]() {
      std::vector<double> out;
      for (const auto& s : split(value)) out.push_back(to_number(s, where));
      return out;
    };
    auto files = [&]() {
      std::vector<std::filesystem::path> out;
      for (const auto& s : split(value)) out.push_back(resolve(s, base));
      return out;
    };
    if (key == "power_fractions") fam.power_fractions = numbers();
    else if (key == "power_cutoff") fam.power_cutoff = to_number(trim(value), where);
    else if (key == "indicator_radii") fam.indicator_radii = numbers();
    else if (key == "box_half_widths") fam.box_half_widths = numbers();
    else if (key == "weight_seeds") fam.weight_seeds = parse_seed_list(value);
    else if (key == "weight_smoothness") fam.weight_smoothness = to_number(trim(value), where);
    else if (key == "weight_floor") fam.weight_floor = to_number(trim(value), where);
    else if (key == "gaussian_widths") fam.gaussian_widths = numbers();
    else if (key == "source_seeds") fam.source_seeds = parse_seed_list(value);
    else if (key == "weight_files") fam.weight_files = files();
    else if (key == "source_files") fam.source_files = files();
  }
}

struct CheckBlock {
  std::vector<std::string> list;
  std::optional<std::vector<double>> rhos;
  std::optional<double> drift;
  std::optional<double> flatness;
};

void apply_checks(CheckBlock& block, const pt::ptree& section, const std::string& name) {
  check_keys(section, name, {"list", "lemma5_rhos", "drift_tolerance", "flatness_factor"});
  for (const auto& [key, node] : section) {
    const std::string where = "[" + name + "] " + key;
    if (key == "list") {
      block.list = split(node.data());
      if (block.list.size() == 1 && block.list[0] == "all") block.list = check_names();
      for (const auto& c : block.list) {
        if (!is_check_name(c)) fail(where + ": unknown check '" + c + "'");
      }
    } else if (key == "lemma5_rhos") {
      std::vector<double> rhos;
      for (const auto& s : split(node.data())) rhos.push_back(to_number(s, where));
      block.rhos = rhos;
    } else if (key == "drift_tolerance") {
      block.drift = to_number(trim(node.data()), where);
    } else if (key == "flatness_factor") {
      block.flatness = to_number(trim(node.data()), where);
    }
  }
}

void validate_file(const std::filesystem::path& path, const CampaignConfig& c, bool weight) {
  const std::string what = std::string(weight ? "weight" : "source") + " file " + path.string();
  Field f;
  try {
    f = load_field(path);
  } catch (const Error& e) {
    fail(what + ": " + e.what());
  }
  const GridSpec expect = centered_grid(c.params.d, c.n, c.extent);
  const GridSpec& got = f.spec();
  const bool same = got.d == expect.d && got.n == expect.n &&
                    std::abs(got.h - expect.h) <= 1e-12 * expect.h;
  if (!same) fail(what + ": grid does not match campaign " + c.label);
  if (weight && !f.is_nonnegative()) fail(what + ": weight has negative values");
}

}  // namespace

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (const auto& token : split(text)) {
    const auto dots = token.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_unsigned(token, "seed list"));
      continue;
    }
    const auto lo = to_unsigned(trim(token.substr(0, dots)), "seed list");
    const auto hi = to_unsigned(trim(token.substr(dots + 2)), "seed list");
    if (hi < lo) fail("seed list: empty range '" + token + "'");
    if (hi - lo > 100000) fail("seed list: range too long '" + token + "'");
    for (auto s = lo; s <= hi; ++s) out.push_back(s);
  }
  return out;
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  for (const auto& s : split(text)) out.push_back(to_number(s, "number list"));
  return out;
}

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  pt::ptree tree;
  try {
    std::istringstream is{std::string(text)};
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    fail(std::string("config syntax: ") + e.what());
  }

  RunConfig config;
  FamilyConfig global_families;
  CheckBlock global_checks;
  global_checks.list = check_names();
  std::vector<std::string> labels;

  for (const auto& [name, section] : tree) {
    if (section.empty() && !section.data().empty()) fail("top-level key '" + name + "' outside a section");
    const auto space = name.find(' ');
    const std::string kind = trim(name.substr(0, space));
    const std::string label = space == std::string::npos ? "" : trim(name.substr(space + 1));
    if (kind == "conventions") {
      check_keys(section, name, {"morrey", "kernel", "maximal", "ladder"});
      try {
        if (auto v = section.get_optional<std::string>("morrey")) config.conventions.morrey = parse_morrey_convention(trim(*v));
        if (auto v = section.get_optional<std::string>("kernel")) config.conventions.kernel = parse_central_weight(trim(*v));
        if (auto v = section.get_optional<std::string>("ladder")) config.conventions.ladder = parse_ladder_kind(trim(*v));
      } catch (const Error& e) {
        fail("[conventions]: " + std::string(e.what()));
      }
      if (auto v = section.get_optional<std::string>("maximal"); v && trim(*v) != "centered") {
        fail("[conventions] maximal: only 'centered' is supported");
      }
    } else if (kind == "output") {
      check_keys(section, name, {"json", "csv"});
      if (auto v = section.get_optional<std::string>("json")) config.output.json = resolve(trim(*v), base_dir);
      if (auto v = section.get_optional<std::string>("csv")) config.output.csv = resolve(trim(*v), base_dir);
    } else if (kind == "suite") {
      check_keys(section, name, {"oracle_gate"});
      if (auto v = section.get_optional<std::string>("oracle_gate")) config.oracle_gate = to_bool(trim(*v), "[suite] oracle_gate");
    } else if (kind == "families" && label.empty()) {
      apply_families(global_families, section, name, base_dir);
    } else if (kind == "checks" && label.empty()) {
      apply_checks(global_checks, section, name);
    } else if (kind == "params") {
      if (label.empty()) fail("[params] needs a campaign label, e.g. [params d1]");
      if (std::find(labels.begin(), labels.end(), label) != labels.end()) fail("duplicate campaign '" + label + "'");
      labels.push_back(label);
    } else if (kind != "grid" && kind != "families" && kind != "checks") {
      fail("unknown section [" + name + "]");
    }
  }

  for (const auto& label : labels) {
    CampaignConfig c;
    c.label = label;
    const std::string pname = "params " + label;
    const pt::ptree& params = tree.get_child(pt::ptree::path_type(pname, '\0'));
    check_keys(params, pname, {"d", "alpha", "r", "p", "q"});
    auto number = [&](const pt::ptree& sec, const std::string& sname, const std::string& key) {
      auto v = sec.get_optional<std::string>(key);
      if (!v) fail("[" + sname + "]: missing '" + key + "'");
      return to_number(trim(*v), "[" + sname + "] " + key);
    };
    const double d = number(params, pname, "d");
    if (d != std::floor(d)) fail("[" + pname + "] d: must be an integer");
    std::optional<double> q;
    if (params.get_optional<std::string>("q")) q = number(params, pname, "q");
    try {
      c.params = validate_params(static_cast<int>(d), number(params, pname, "alpha"),
                                 number(params, pname, "r"), number(params, pname, "p"), q);
    } catch (const Error& e) {
      fail("[" + pname + "]: " + e.what());
    }

    const std::string gname = "grid " + label;
    const auto grid = tree.get_child_optional(pt::ptree::path_type(gname, '\0'));
    if (!grid) fail("campaign '" + label + "' has no [" + gname + "] section");
    check_keys(*grid, gname, {"n", "extent", "h", "refinements"});
    const double n = number(*grid, gname, "n");
    if (n < 4 || n != std::floor(n)) fail("[" + gname + "] n: must be an integer >= 4");
    c.n = static_cast<std::size_t>(n);
    const bool has_extent = grid->get_optional<std::string>("extent").has_value();
    const bool has_h = grid->get_optional<std::string>("h").has_value();
    if (has_extent == has_h) fail("[" + gname + "]: give exactly one of 'extent' and 'h'");
    c.extent = has_extent ? number(*grid, gname, "extent") : number(*grid, gname, "h") * n;
    if (!(c.extent > 0.0)) fail("[" + gname + "]: grid size must be positive");
    if (grid->get_optional<std::string>("refinements")) {
      const double refinements = number(*grid, gname, "refinements");
      if (refinements < 1 || refinements != std::floor(refinements)) {
        fail("[" + gname + "] refinements: must be an integer >= 1");
      }
      c.refinements = static_cast<int>(refinements);
    }
    try {
      GridSpec finest = centered_grid(c.params.d, c.n << c.refinements, c.extent);
      finest.validate();
    } catch (const Error& e) {
      fail("[" + gname + "]: " + e.what());
    }

    c.families = global_families;
    const std::string fname = "families " + label;
    if (auto fam = tree.get_child_optional(pt::ptree::path_type(fname, '\0'))) {
      apply_families(c.families, *fam, fname, base_dir);
    }
    CheckBlock block = global_checks;
    const std::string cname = "checks " + label;
    if (auto chk = tree.get_child_optional(pt::ptree::path_type(cname, '\0'))) {
      apply_checks(block, *chk, cname);
    }
    c.checks = block.list;
    if (block.rhos) c.settings.lemma5_rhos = *block.rhos;
    if (block.flatness) c.settings.flatness_factor = *block.flatness;
    if (block.drift) c.drift_tolerance = *block.drift;
    for (double rho : c.settings.lemma5_rhos) {
      if (!(rho > 0.0)) fail("[" + cname + "] lemma5_rhos: radii must be positive");
    }
    if (!(c.families.power_cutoff > 0.0) || c.families.power_cutoff > 0.5 * c.extent) {
      fail("[" + fname + "] power_cutoff: must lie in (0, extent/2]");
    }
    for (double v : c.families.gaussian_widths) {
      if (!(v > 0.0)) fail("[" + fname + "] gaussian_widths: widths must be positive");
    }
    for (double v : c.families.power_fractions) {
      if (!(v >= 0.0) || !(v < 1.0)) fail("[" + fname + "] power_fractions: must lie in [0, 1)");
    }
    if (!(c.families.weight_smoothness > 0.0)) fail("[" + fname + "] weight_smoothness: must be positive");
    if (!(c.families.weight_floor >= 0.0)) fail("[" + fname + "] weight_floor: must be nonnegative");
    for (const auto& f : c.families.weight_files) validate_file(f, c, true);
    for (const auto& f : c.families.source_files) validate_file(f, c, false);
    config.campaigns.push_back(std::move(c));
  }

  for (const auto& [name, section] : tree) {
    const auto space = name.find(' ');
    if (space == std::string::npos) continue;
    const std::string kind = trim(name.substr(0, space));
    const std::string label = trim(name.substr(space + 1));
    if ((kind == "grid" || kind == "families" || kind == "checks") &&
        std::find(labels.begin(), labels.end(), label) == labels.end()) {
      fail("[" + name + "] refers to unknown campaign '" + label + "'");
    }
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config(os.str(), path.parent_path());
}

}  // namespace rieszcheck
