#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rieszcheck/params.hpp"
#include "rieszcheck/verify.hpp"

namespace rieszcheck {

/// Probe families of one campaign. Physical lengths are in the units of
/// the grid coordinates.
struct FamilyConfig {
  /// Power weights |x|^(-beta) with beta = fraction * min(alpha, d/p).
  std::vector<double> power_fractions = {0.3, 0.5, 0.7};
  double power_cutoff = 1.0;
  std::vector<double> indicator_radii = {0.5};
  std::vector<double> box_half_widths;
  std::vector<std::uint64_t> weight_seeds;
  double weight_smoothness = 0.25;
  double weight_floor = 0.05;
  std::vector<double> gaussian_widths = {0.1, 0.15, 0.2};
  std::vector<std::uint64_t> source_seeds;
  /// Field files (RZF1 or CSV) on the base grid of the campaign.
  std::vector<std::filesystem::path> weight_files;
  std::vector<std::filesystem::path> source_files;
};

struct CampaignConfig {
  std::string label;
  ExponentParams params;
  std::size_t n = 0;
  double extent = 0.0;
  /// Number of grid doublings after the base level.
  int refinements = 1;
  FamilyConfig families;
  std::vector<std::string> checks;
  CheckSettings settings;
  double drift_tolerance = 0.15;
};

struct OutputConfig {
  std::filesystem::path json;
  std::filesystem::path csv;
};

struct RunConfig {
  std::vector<CampaignConfig> campaigns;
  Conventions conventions;
  OutputConfig output;
  bool oracle_gate = true;
};

/// Parses INI text. Relative file references resolve against base_dir.
/// Throws Error(ConfigError) with a message naming the offending entry.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// "1..4, 9" -> {1, 2, 3, 4, 9}.
std::vector<std::uint64_t> parse_seed_list(std::string_view text);
std::vector<double> parse_number_list(std::string_view text);

}  // namespace rieszcheck
