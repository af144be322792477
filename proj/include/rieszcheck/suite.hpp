#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rieszcheck/config.hpp"
#include "rieszcheck/verify.hpp"

namespace rieszcheck {

struct SuiteOptions {
  /// Restricts the run to one check name; empty runs every configured check.
  std::string only_check;
  /// Overrides the oracle_gate setting of the config when set.
  std::optional<bool> run_gate;
  OracleGateOptions gate;
  /// Progress lines go here when non-null.
  std::ostream* log = nullptr;
};

/// Weight probes of a campaign on one grid level. File fields are used only
/// on the base grid they were written for.
std::vector<NamedField> build_weights(const CampaignConfig& campaign, const GridSpec& spec, bool base_level);
std::vector<NamedField> build_sources(const CampaignConfig& campaign, const GridSpec& spec, bool base_level);

/// Runs every campaign at every refinement level. Reports are named
/// "<campaign>/<check>" and hold the cases of all levels; a check that throws
/// becomes an ERROR report instead of aborting the run.
SuiteReport run_suite(const RunConfig& config, const SuiteOptions& options = {});

}  // namespace rieszcheck
