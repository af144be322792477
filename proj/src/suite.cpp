#include "rieszcheck/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "rieszcheck/error.hpp"
#include "rieszcheck/families.hpp"
#include "rieszcheck/field_io.hpp"

namespace rieszcheck {

namespace {

std::string number_label(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

struct Level {
  GridSpec spec;
  std::string prefix;
};

std::vector<Level> levels_of(const CampaignConfig& c) {
  std::vector<Level> levels;
  for (int k = 0; k <= c.refinements; ++k) {
    const std::size_t n = c.n << k;
    levels.push_back({centered_grid(c.params.d, n, c.extent), "n=" + std::to_string(n) + " "});
  }
  return levels;
}

}  // namespace

std::vector<NamedField> build_weights(const CampaignConfig& c, const GridSpec& spec, bool base_level) {
  const auto& fam = c.families;
  const auto& P = c.params;
  std::vector<NamedField> out;
  const double beta_cap = std::min(P.alpha, P.d / P.p);
  for (double fraction : fam.power_fractions) {
    out.push_back({"power" + number_label(fraction), power_weight(spec, fraction * beta_cap, 1.0, fam.power_cutoff)});
  }
  for (double radius : fam.indicator_radii) {
    out.push_back({"ball" + number_label(radius), indicator_weight(spec, radius)});
  }
  for (double half : fam.box_half_widths) {
    out.push_back({"box" + number_label(half), box_weight(spec, half)});
  }
  for (auto seed : fam.weight_seeds) {
    out.push_back({"random" + std::to_string(seed), random_weight(seed, spec, fam.weight_smoothness, fam.weight_floor)});
  }
  if (base_level) {
    for (const auto& path : fam.weight_files) out.push_back({"file:" + path.filename().string(), load_field(path)});
  }
  return out;
}

std::vector<NamedField> build_sources(const CampaignConfig& c, const GridSpec& spec, bool base_level) {
  const auto& fam = c.families;
  std::vector<NamedField> out;
  for (double sigma : fam.gaussian_widths) {
    out.push_back({"gauss" + number_label(sigma), gaussian_source(spec, sigma)});
  }
  for (auto seed : fam.source_seeds) {
    out.push_back({"bump" + std::to_string(seed), random_source(seed, spec)});
  }
  if (base_level) {
    for (const auto& path : fam.source_files) out.push_back({"file:" + path.filename().string(), load_field(path)});
  }
  return out;
}

SuiteReport run_suite(const RunConfig& config, const SuiteOptions& options) {
  if (!options.only_check.empty() && !is_check_name(options.only_check)) {
    throw Error(ErrorCode::ConfigError, "unknown check: " + options.only_check);
  }
  SuiteReport suite;
  suite.conventions = config.conventions;
  using clock = std::chrono::steady_clock;

  if (options.run_gate.value_or(config.oracle_gate)) {
    suite.gate = run_oracle_gate(options.gate);
    if (options.log) {
      *options.log << "oracle gate: " << (suite.gate->pass ? "pass" : "FAIL") << " ("
                   << suite.gate->seconds << " s)\n";
    }
  }

  for (const auto& campaign : config.campaigns) {
    std::vector<std::string> checks;
    for (const auto& name : campaign.checks) {
      if (options.only_check.empty() || options.only_check == name) checks.push_back(name);
    }
    if (checks.empty()) continue;

    std::vector<RatioReport> merged(checks.size());
    for (std::size_t c = 0; c < checks.size(); ++c) {
      merged[c].name = campaign.label + "/" + checks[c];
      merged[c].params = campaign.params;
      merged[c].conventions = config.conventions;
    }

    const auto levels = levels_of(campaign);
    for (std::size_t k = 0; k < levels.size(); ++k) {
      const Level& level = levels[k];
      const auto start = clock::now();
      std::optional<CheckContext> ctx;
      std::string setup_error;
      try {
        ctx.emplace(level.spec, campaign.params, config.conventions,
                    build_weights(campaign, level.spec, k == 0), build_sources(campaign, level.spec, k == 0));
      } catch (const std::exception& e) {
        setup_error = e.what();
      }
      for (std::size_t c = 0; c < checks.size(); ++c) {
        RatioReport& target = merged[c];
        if (!ctx) {
          target.verdict = Verdict::Error;
          target.commentary.push_back(level.prefix + "setup failed: " + setup_error);
          continue;
        }
        try {
          RatioReport r = run_check(checks[c], *ctx, campaign.settings);
          target.refinement.push_back({level.spec.h, r.sup_ratio});
          target.absorb(r, level.prefix);
        } catch (const std::exception& e) {
          target.verdict = Verdict::Error;
          target.commentary.push_back(level.prefix + "check failed: " + e.what());
        }
      }
      if (options.log) {
        const double seconds = std::chrono::duration<double>(clock::now() - start).count();
        *options.log << campaign.label << " " << level.prefix << "done (" << seconds << " s)\n";
      }
    }

    for (auto& report : merged) {
      assign_verdict(report, campaign.drift_tolerance, campaign.settings.flatness_factor);
      for (auto& point : report.curves) point.check = report.name;
      for (std::size_t k = 0; k < report.refinement.size(); ++k) {
        report.curves.push_back({report.name, "sup", "h", report.refinement[k].h, report.refinement[k].sup_ratio});
      }
      if (options.log) {
        *options.log << report.name << ": " << to_string(report.verdict) << " sup=" << report.sup_ratio << "\n";
      }
      suite.reports.push_back(std::move(report));
    }
  }
  return suite;
}

}  // namespace rieszcheck
