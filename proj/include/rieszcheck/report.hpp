#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include <json.hpp>

#include "rieszcheck/config.hpp"
#include "rieszcheck/morrey.hpp"
#include "rieszcheck/verify.hpp"

namespace rieszcheck {

using Json = nlohmann::ordered_json;

/// Non-finite numbers become null.
Json number_json(double v);

Json to_json(const Conventions& conventions);
Json to_json(const ExponentParams& params);
Json to_json(const RunConfig& config);
Json to_json(const RatioReport& report);
Json to_json(const OracleGateReport& gate);
Json to_json(const MorreyReport& report, int d);

/// Full suite document. The timestamp is the only field that differs
/// between two runs of the same config.
Json suite_json(const SuiteReport& suite, const RunConfig& config, const std::string& timestamp);

/// Current UTC time as 2026-01-31T12:00:00Z.
std::string utc_timestamp();

/// One row per curve point: check,case,x_name,x,ratio.
void write_curves_csv(const SuiteReport& suite, std::ostream& out);

void write_json_file(const Json& doc, const std::filesystem::path& path);
void write_curves_csv_file(const SuiteReport& suite, const std::filesystem::path& path);

/// Human-readable summary, one line per report.
void write_summary(const SuiteReport& suite, std::ostream& out);

}  // namespace rieszcheck
