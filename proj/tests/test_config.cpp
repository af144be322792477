#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rieszcheck/config.hpp"
#include "rieszcheck/error.hpp"
#include "rieszcheck/families.hpp"
#include "rieszcheck/field_io.hpp"
#include "rieszcheck/report.hpp"
#include "rieszcheck/suite.hpp"

using namespace rieszcheck;

namespace {

const char* kSmall = R"(
[conventions]
morrey = avg

[suite]
oracle_gate = false

[families]
power_fractions = 0.5
indicator_radii = 0.5
weight_seeds = 1..2
gaussian_widths = 0.2
source_seeds = 1

[params a]
d = 1
alpha = 0.25
r = 2
p = 3
q = 1.5

[grid a]
n = 64
extent = 8
refinements = 1

[checks a]
list = theorem1, duality
)";

std::string config_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConfigError);
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Config, SeedLists) {
  EXPECT_EQ(parse_seed_list("1..4, 9"), (std::vector<std::uint64_t>{1, 2, 3, 4, 9}));
  EXPECT_TRUE(parse_seed_list("").empty());
  EXPECT_THROW(parse_seed_list("4..1"), Error);
  EXPECT_THROW(parse_seed_list("x"), Error);
  EXPECT_EQ(parse_number_list("0.5, 1e-1"), (std::vector<double>{0.5, 0.1}));
}

TEST(Config, ParsesCampaign) {
  const RunConfig c = parse_config(kSmall);
  ASSERT_EQ(c.campaigns.size(), 1u);
  const auto& a = c.campaigns[0];
  EXPECT_EQ(a.label, "a");
  EXPECT_EQ(a.n, 64u);
  EXPECT_DOUBLE_EQ(a.extent, 8.0);
  EXPECT_EQ(a.params.d, 1);
  EXPECT_DOUBLE_EQ(a.params.q, 1.5);
  EXPECT_EQ(a.checks, (std::vector<std::string>{"theorem1", "duality"}));
  EXPECT_EQ(a.families.weight_seeds, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_FALSE(c.oracle_gate);
}

TEST(Config, GridFromSpacing) {
  std::string text = kSmall;
  text.replace(text.find("extent = 8"), 10, "h = 0.125");
  EXPECT_DOUBLE_EQ(parse_config(text).campaigns[0].extent, 8.0);
}

TEST(Config, Errors) {
  EXPECT_NE(config_error("[params a]\nd = 1\nalpha = 0.5\nr = 2\np = 2\n[grid a]\nn=64\nextent=2\n").find("p <= r"),
            std::string::npos);
  EXPECT_NE(config_error("[params a]\nd = 1\nalpha = 0.5\nr = 2\np = 3\n").find("no [grid a]"), std::string::npos);
  EXPECT_NE(config_error("[bogus]\nx = 1\n").find("unknown section"), std::string::npos);
  EXPECT_NE(config_error("[checks]\nlist = theorem9\n").find("theorem9"), std::string::npos);
  EXPECT_NE(config_error("[conventions]\nmorrey = mean\n").find("conventions"), std::string::npos);
  EXPECT_NE(config_error("[families]\ncolour = red\n").find("colour"), std::string::npos);
  std::string bad_ref = kSmall;
  bad_ref.replace(bad_ref.find("refinements = 1"), 15, "refinements = 0");
  EXPECT_NE(config_error(bad_ref).find("refinements"), std::string::npos);
  EXPECT_NE(config_error("[grid zz]\nn = 8\nextent = 1\n").find("unknown campaign"), std::string::npos);
}

TEST(Config, NegativeWeightFileIsRejectedByName) {
  const auto dir = std::filesystem::temp_directory_path() / "rieszcheck_cfg_test";
  std::filesystem::create_directories(dir);
  Field b(centered_grid(1, 64, 8.0));
  b[10] = -1.0;
  save_field(b, dir / "neg.rzf");
  std::string text = kSmall;
  text += "\n[families a]\nweight_files = file:neg.rzf\n";
  try {
    parse_config(text, dir);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConfigError);
    EXPECT_NE(std::string(e.what()).find("neg.rzf"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("negative"), std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST(Suite, EmptyCheckListGivesEmptyReport) {
  std::string text = kSmall;
  text.replace(text.find("list = theorem1, duality"), 24, "list =");
  const SuiteReport s = run_suite(parse_config(text));
  EXPECT_TRUE(s.reports.empty());
  EXPECT_EQ(s.exit_code(), 0);
}

TEST(Suite, RunsAllLevelsAndMergesCases) {
  const RunConfig c = parse_config(kSmall);
  const SuiteReport s = run_suite(c);
  ASSERT_EQ(s.reports.size(), 2u);
  EXPECT_EQ(s.reports[0].name, "a/theorem1");
  // 4 weights x 2 sources at two levels.
  EXPECT_EQ(s.reports[0].cases.size(), 16u);
  EXPECT_EQ(s.reports[0].refinement.size(), 2u);
  EXPECT_EQ(s.reports[0].cases[0].descriptor.rfind("n=64 ", 0), 0u);
  EXPECT_EQ(s.exit_code(), 0);
  SuiteOptions only;
  only.only_check = "duality";
  EXPECT_EQ(run_suite(c, only).reports.size(), 1u);
  only.only_check = "nope";
  EXPECT_THROW(run_suite(c, only), Error);
}

TEST(Report, JsonSchemaAndDeterminism) {
  const RunConfig c = parse_config(kSmall);
  const Json a = suite_json(run_suite(c), c, "T");
  const Json b = suite_json(run_suite(c), c, "T");
  EXPECT_EQ(a.dump(), b.dump());
  for (const char* key : {"config", "conventions", "reports", "verdicts", "timestamp"}) {
    EXPECT_TRUE(a.contains(key)) << key;
  }
  const auto& r = a["reports"][0];
  for (const char* key : {"name", "params", "cases", "sup_ratio", "refinement", "verdict", "commentary"}) {
    EXPECT_TRUE(r.contains(key)) << key;
  }
  EXPECT_TRUE(r["cases"][0].contains("case"));
  EXPECT_EQ(a["conventions"]["morrey"], "avg");
  EXPECT_EQ(a["config"]["campaigns"][0]["label"], "a");
}

TEST(Report, NonFiniteNumbersBecomeNull) {
  EXPECT_TRUE(number_json(std::numeric_limits<double>::infinity()).is_null());
  EXPECT_TRUE(number_json(std::nan("")).is_null());
  EXPECT_EQ(number_json(1.5), 1.5);
}

TEST(Report, CsvCurves) {
  SuiteReport s;
  RatioReport r;
  r.name = "x/lemma5";
  r.curves.push_back({"x/lemma5", "ball, wide", "rho", 0.5, 1.25});
  s.reports.push_back(r);
  std::ostringstream os;
  write_curves_csv(s, os);
  EXPECT_EQ(os.str(), "check,case,x_name,x,ratio\nx/lemma5,\"ball, wide\",rho,0.5,1.25\n");
}

TEST(Report, TimestampFormat) {
  const std::string t = utc_timestamp();
  ASSERT_EQ(t.size(), 20u);
  EXPECT_EQ(t[10], 'T');
  EXPECT_EQ(t.back(), 'Z');
}
