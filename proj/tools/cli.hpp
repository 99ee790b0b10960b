#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homstruct/homstruct.hpp"
#include "json.hpp"

namespace homstruct::cli {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Sampled };
std::string status_name(Status s);

enum class Format { Json, Markdown };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --help / --version: carries the text to print, exit status 0.
struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string command = "verify";
  std::vector<MetricCase> cases;  // empty: all five
  int samples_per_case = 8;
  int identity_sample_count = 16;
  std::uint64_t seed = 42;
  bool perfect_square_only = false;
  bool unsafe_low_samples = false;
  std::optional<Rational> lambda, mu, nu, t;
  std::vector<std::string> which;  // tables for `tables`
  int points = 16;                 // group-model points
  std::string output_path;
  Format format = Format::Json;

  std::vector<MetricCase> active_cases() const;
  std::optional<DiagonalMetric> metric() const;
  void validate() const;  // throws ConfigError
};

// Default configuration; HOMSTRUCT_SEED overrides the seed.
Config default_config();
Config parse_config(int argc, const char* const* argv);

struct SuiteRecord {
  std::string id;
  std::string metric_case;  // "all" for suites not split by case
  std::vector<std::string> params;
  Status status = Status::Pass;
  std::vector<std::string> details;
  double seconds = 0;  // wall time, not serialized
};

struct Report {
  Json config = Json::object();
  std::vector<SuiteRecord> suites;
  Json tables = Json::object();
  std::vector<std::string> corrections;

  bool ok() const;
  std::vector<std::string> sampled_components() const;
  std::vector<std::string> certified_components() const;
};

const std::vector<std::string>& suite_ids();

// Records of one suite, in case order; table rows go to `tables`.
std::vector<SuiteRecord> run_suite_id(const std::string& id, const Config& cfg, Json& tables);

Report run_suite(const Config& cfg);
Report run_solve(const Config& cfg);
Report run_tables(const Config& cfg);
Report run_group(const Config& cfg);
Report run_command(const Config& cfg);

Json config_to_json(const Config& cfg);
Json to_json(const Report& r);
Report report_from_json(const Json& j);
std::string to_markdown(const Report& r);
std::string emit(const Report& r, Format f);

// Exit status: 0 all PASS, 1 some FAIL, 2 bad configuration, 3 unwritable output.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace homstruct::cli
