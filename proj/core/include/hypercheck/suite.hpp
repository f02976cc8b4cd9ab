#pragma once

// Grid-driven verification runs. A suite groups identity families; each family
// expands its grid into parameter points, runs one check per point and the
// results are merged in sorted parameter order.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypercheck/identities.hpp"

namespace hypercheck {

// Usage or configuration problem; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { json, csv, markdown };

std::string format_name(OutputFormat f);
// Throws ConfigError for unknown names.
OutputFormat parse_format(std::string_view name);

// One axis of a grid block: a single parameter, or several parameters zipped
// together so that each tuple is one combined value.
struct GridAxis {
  std::vector<std::string> names;
  std::vector<std::vector<double>> tuples;

  friend bool operator==(const GridAxis&, const GridAxis&) = default;
};

// Cartesian product of its axes.
using GridBlock = std::vector<GridAxis>;
// Union of its blocks.
using Grid = std::vector<GridBlock>;

using ParamPoint = std::map<std::string, double>;

inline constexpr double kMinSuiteTolerance = 1e-14;
inline constexpr double kMaxSuiteTolerance = 1e-2;
inline constexpr unsigned kMaxParallelism = 256;

struct SuiteConfig {
  std::vector<std::string> suites;
  // Family name -> grid. Families without an entry use their default grid.
  std::map<std::string, Grid> grids;
  double tolerance = kDefaultIdentityTolerance;
  unsigned parallelism = 1;
  OutputFormat output_format = OutputFormat::json;
  std::optional<std::string> output_path;

  friend bool operator==(const SuiteConfig&, const SuiteConfig&) = default;
};

const std::vector<std::string>& suite_names();
// Throws ConfigError for unknown suites.
const std::vector<std::string>& suite_families(const std::string& suite);
const std::vector<std::string>& family_names();
bool is_family(const std::string& name);
const std::vector<std::string>& family_params(const std::string& family);
const Grid& default_grid(const std::string& family);

// All seven suites with every default grid filled in.
SuiteConfig default_grids();

// The family grid with each overridden parameter pinned to its given value.
// Throws ConfigError for parameters the family does not take.
Grid pin_parameters(const std::string& family, const Grid& grid, const ParamPoint& overrides);

struct FamilyPlan {
  std::string family;
  std::vector<ParamPoint> points;
};

struct SuitePlan {
  std::string suite;
  std::vector<FamilyPlan> families;
};

// Expanded, filtered, deduplicated points in sorted parameter order.
// Throws ConfigError if any point violates the family's parameter invariants.
std::vector<ParamPoint> expand_grid(const std::string& family, const Grid& grid);

// Validates the whole config (tolerance range, parallelism, suite and family
// names, block shapes, every point) and returns the run plan.
std::vector<SuitePlan> plan_run(const SuiteConfig& config);
void validate_config(const SuiteConfig& config);

enum class CaseStatus { pass, fail, error };
std::string status_name(CaseStatus s);

struct CaseResult {
  IdentityReport report;
  CaseStatus status = CaseStatus::error;
  std::string error;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t error = 0;
  std::size_t total() const { return pass + fail + error; }
};

struct SuiteReport {
  std::string suite;
  double tolerance = 0.0;
  std::vector<std::string> families;
  std::vector<CaseResult> cases;
  Summary summary;
  double wall_ms = 0.0;
};

struct RunResult {
  std::vector<SuiteReport> suites;
  Summary summary;
  double wall_ms = 0.0;
  // Emit the multi-suite layout even for one suite.
  bool combined = false;
};

// One check. Exceptions from the check become status error.
CaseResult run_case(const std::string& family, const ParamPoint& point, double tol);

// Runs the plan, spreading points over config.parallelism threads.
RunResult run_plan(const std::vector<SuitePlan>& plan, const SuiteConfig& config);
RunResult run_suites(const SuiteConfig& config);

// 0 when every case passed, 1 otherwise.
int exit_code(const RunResult& result);

SuiteConfig parse_config(std::string_view json_text);
SuiteConfig load_config(const std::string& path);
std::string config_to_json(const SuiteConfig& config);
void save_config(const SuiteConfig& config, const std::string& path);

}  // namespace hypercheck
