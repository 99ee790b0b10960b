#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

using namespace homstruct;
using namespace homstruct::cli;

namespace {

Config parse(std::vector<const char*> args) {
  args.insert(args.begin(), "homstruct");
  return parse_config(static_cast<int>(args.size()), args.data());
}

int run(std::vector<const char*> args, std::string* out = nullptr) {
  args.insert(args.begin(), "homstruct");
  std::ostringstream o, e;
  int rc = run_main(static_cast<int>(args.size()), args.data(), o, e);
  if (out) *out = o.str();
  return rc;
}

Config small() {
  Config c;
  c.samples_per_case = 1;
  return c;
}

}  // namespace

TEST(ParseConfig, VerifyExample) {
  auto c = parse({"verify", "--case", "symmetric", "--samples", "8", "--seed", "42", "--out", "r.json"});
  EXPECT_EQ(c.command, "verify");
  ASSERT_EQ(c.cases.size(), 1u);
  EXPECT_EQ(c.cases[0], MetricCase::Symmetric);
  EXPECT_EQ(c.samples_per_case, 8);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.output_path, "r.json");
}

TEST(ParseConfig, SolveSinglePoint) {
  auto c = parse({"solve", "--lambda", "-2/1", "--mu", "1", "--nu", "1"});
  EXPECT_EQ(c.command, "solve");
  auto g = c.metric();
  ASSERT_TRUE(g);
  EXPECT_EQ(g->lambda, -2);
  EXPECT_EQ(g->metric_case(), MetricCase::Timelike);
}

TEST(ParseConfig, Rejections) {
  EXPECT_THROW(parse({"verify", "--samples", "0"}), ConfigError);
  EXPECT_THROW(parse({"solve", "--lambda", "1/0", "--mu", "1", "--nu", "1"}), ConfigError);
  EXPECT_THROW(parse({"solve", "--lambda", "abc", "--mu", "1", "--nu", "1"}), ConfigError);
  EXPECT_THROW(parse({"solve", "--lambda", "-2"}), ConfigError);
  EXPECT_THROW(parse({"verify", "--no-such-flag"}), ConfigError);
  EXPECT_THROW(parse({"verify", "--case", "lightlike"}), ConfigError);
  EXPECT_THROW(parse({"verify", "--case", "timelike,timelike"}), ConfigError);
  EXPECT_THROW(parse({"tables", "--which", "table9"}), ConfigError);
  EXPECT_THROW(parse({}), ConfigError);
}

TEST(ParseConfig, CaseConflictsWithExplicitMetric) {
  Config c;
  c.command = "group";
  c.cases = {MetricCase::Timelike};
  c.lambda = -2, c.mu = 1, c.nu = 1;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(ParseConfig, LowIdentitySamplesNeedUnsafeFlag) {
  EXPECT_THROW(parse({"verify", "--identity-samples", "8"}), ConfigError);
  EXPECT_EQ(parse({"verify", "--identity-samples", "8", "--unsafe-low-samples"}).identity_sample_count, 8);
  EXPECT_THROW(parse({"group", "--points", "4"}), ConfigError);
}

TEST(ParseConfig, SeedFromEnvironment) {
  ::setenv("HOMSTRUCT_SEED", "777", 1);
  EXPECT_EQ(parse({"verify"}).seed, 777u);
  EXPECT_EQ(parse({"verify", "--seed", "5"}).seed, 5u);
  ::setenv("HOMSTRUCT_SEED", "seven", 1);
  EXPECT_THROW(parse({"verify"}), ConfigError);
  ::unsetenv("HOMSTRUCT_SEED");
  EXPECT_EQ(parse({"verify"}).seed, 42u);
}

TEST(Report, DeterministicForSameSeed) {
  auto cfg = small();
  auto a = emit(run_suite(cfg), Format::Json);
  auto b = emit(run_suite(cfg), Format::Json);
  EXPECT_EQ(a, b);
  cfg.seed = 43;
  EXPECT_NE(emit(run_suite(cfg), Format::Json), a);
}

TEST(Report, SmallRunPasses) {
  auto r = run_suite(small());
  EXPECT_TRUE(r.ok());
  std::set<std::string> ids;
  for (const auto& s : r.suites) {
    ids.insert(s.id);
    EXPECT_NE(s.status, Status::Fail) << s.id << "/" << s.metric_case;
  }
  EXPECT_EQ(ids.size(), suite_ids().size());
  EXPECT_TRUE(std::is_sorted(r.suites.begin(), r.suites.end(), [](const auto& x, const auto& y) { return x.id < y.id; }));
}

TEST(Report, JsonRoundTrip) {
  auto cfg = small();
  cfg.cases = {MetricCase::Timelike, MetricCase::Symmetric};
  auto j = to_json(run_suite(cfg));
  EXPECT_EQ(to_json(report_from_json(j)), j);
  EXPECT_EQ(to_json(report_from_json(Json::parse(j.dump()))), j);
}

TEST(Report, RationalsAreStrings) {
  auto cfg = small();
  cfg.cases = {MetricCase::Timelike};
  auto j = to_json(run_suite(cfg));
  for (const auto& s : j["suites"])
    for (const auto& p : s["params"]) {
      ASSERT_TRUE(p.is_string());
      EXPECT_TRUE(parse_rational(p.get<std::string>()));
    }
}

TEST(Report, SymmetricOnlyGivesFiveTableTwoRows) {
  auto cfg = small();
  cfg.cases = {MetricCase::Symmetric};
  auto r = run_suite(cfg);
  ASSERT_TRUE(r.tables.contains("table2"));
  EXPECT_EQ(r.tables["table2"].size(), 5u);
  ASSERT_TRUE(r.tables.contains("table1"));
  EXPECT_EQ(r.tables["table1"].size(), 1u);
  for (const auto& s : r.suites) EXPECT_TRUE(s.metric_case == "symmetric" || s.metric_case == "all") << s.id << "/" << s.metric_case;
}

TEST(Report, MarkdownHasOneTableOneRowPerCase) {
  auto cfg = small();
  cfg.command = "tables";
  cfg.which = {"table1"};
  auto md = to_markdown(run_tables(cfg));
  for (auto c : all_cases()) EXPECT_NE(md.find("| " + case_name(c) + " |"), std::string::npos) << case_name(c);
  std::size_t rows = 0;
  auto at = md.find("## Table 1");
  ASSERT_NE(at, std::string::npos);
  std::istringstream in(md.substr(at));
  std::string line;
  while (std::getline(in, line) && line.rfind("## Corr", 0) != 0)
    if (line.rfind("| ", 0) == 0 && line.find("**") != std::string::npos) ++rows;
  EXPECT_EQ(rows, 5u);
}

TEST(Report, TablesThreeToFive) {
  auto cfg = small();
  cfg.command = "tables";
  cfg.which = {"table3", "table4", "table5"};
  auto r = run_tables(cfg);
  EXPECT_EQ(r.tables["table3"].size(), 3u);
  EXPECT_EQ(r.tables["table4"].size(), 2u);
  EXPECT_EQ(r.tables["table5"].size(), 4u);
  EXPECT_FALSE(r.tables.contains("table1"));
  for (const auto& k : {"table3", "table4", "table5"})
    for (const auto& row : r.tables[k]) EXPECT_EQ(row["status"], "PASS");
}

TEST(Report, FailIffSomeSuiteFails) {
  Report r;
  r.suites.push_back({"a", "all", {}, Status::Pass, {}, 0});
  r.suites.push_back({"b", "all", {}, Status::Sampled, {}, 0});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.sampled_components(), std::vector<std::string>{"b/all"});
  EXPECT_EQ(r.certified_components(), std::vector<std::string>{"a/all"});
  r.suites.push_back({"c", "all", {}, Status::Fail, {"bad"}, 0});
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(to_json(r)["status"], "FAIL");
}

TEST(Report, UnknownSuiteRejected) {
  Json t;
  EXPECT_THROW(run_suite_id("nope", Config{}, t), std::invalid_argument);
}

TEST(Report, SolveDumpsCatalogLine) {
  auto cfg = parse({"solve", "--lambda", "-2", "--mu", "1", "--nu", "1", "--t", "3"});
  auto r = run_solve(cfg);
  EXPECT_TRUE(r.ok());
  const auto& s = r.tables["solve"];
  EXPECT_EQ(s["metric_case"], "timelike");
  ASSERT_EQ(s["components"].size(), 1u);
  EXPECT_EQ(s["components"][0]["families"][0], "Slambda");
}

TEST(Report, GroupAtExplicitMetric) {
  auto r = run_group(parse({"group", "--lambda", "-4", "--mu", "9", "--nu", "9", "--t", "1/2"}));
  EXPECT_TRUE(r.ok());
  EXPECT_THROW(run_group(parse({"group", "--lambda", "1", "--mu", "2", "--nu", "4"})), ConfigError);
}

TEST(ExitStatus, Contract) {
  std::string out;
  EXPECT_EQ(run({"group", "--lambda", "-4", "--mu", "9", "--nu", "9"}, &out), 0);
  EXPECT_NE(out.find("\"status\": \"PASS\""), std::string::npos);
  EXPECT_EQ(run({"verify", "--samples", "0"}), 2);
  EXPECT_EQ(run({"group", "--lambda", "1", "--mu", "2", "--nu", "4"}), 2);
  EXPECT_EQ(run({"group", "--out", "/nonexistent-dir/r.json"}), 3);
  EXPECT_EQ(run({"--help"}, &out), 0);
  EXPECT_NE(out.find("verify"), std::string::npos);
}
