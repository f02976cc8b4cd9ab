// hypercheck: run single identity checks or whole suites and report results.
//
//   hypercheck verify <identity> [--a 2 --b 1 ...] [--tol R] [--format F] [--out PATH]
//   hypercheck suite <name|all> [--config PATH] [--tol R] [--jobs N] [--format F] [--out PATH]
//   hypercheck list
//
// Exit codes: 0 all cases pass, 1 some case failed or errored, 2 usage or config error.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "hypercheck/report.hpp"
#include "hypercheck/suite.hpp"

using namespace hypercheck;

namespace {

constexpr int kUsageError = 2;

std::set<std::string> all_param_names() {
  std::set<std::string> names;
  for (const auto& fam : family_names()) {
    for (const auto& p : family_params(fam)) names.insert(p);
  }
  return names;
}

std::string option_names(const std::string& param) {
  std::string names = "--" + param;
  if (param.find('_') != std::string::npos) {
    std::string dashed = param;
    std::replace(dashed.begin(), dashed.end(), '_', '-');
    names += ",--" + dashed;
  }
  return names;
}

void list_families() {
  for (const auto& suite : suite_names()) {
    std::cout << suite << "\n";
    for (const auto& fam : suite_families(suite)) {
      std::cout << "  " << fam;
      for (const auto& p : family_params(fam)) std::cout << " --" << p;
      std::cout << "  (" << expand_grid(fam, default_grid(fam)).size() << " default cases)\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical and exact verification of hypergeometric integral identities"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  double tol = kDefaultIdentityTolerance;

  auto* verify = app.add_subcommand("verify", "Check one identity family at given parameters");
  std::string identity;
  verify->add_option("identity", identity, "Identity family (see 'list')")->required();
  std::map<std::string, double> values;
  std::map<std::string, CLI::Option*> param_options;
  for (const auto& p : all_param_names()) {
    param_options[p] = verify->add_option(option_names(p), values[p], "Parameter " + p);
  }
  verify->add_option("--tol", tol, "Relative tolerance")->capture_default_str();
  verify->add_option("--format", format, "json, csv or markdown")->capture_default_str();
  verify->add_option("--out", out_path, "Write the report here instead of standard output");

  auto* suite = app.add_subcommand("suite", "Run a suite over its parameter grid");
  std::string suite_name;
  std::string config_path;
  unsigned jobs = 1;
  suite->add_option("name", suite_name, "Suite name or 'all'")->required();
  suite->add_option("--config", config_path, "JSON SuiteConfig file");
  auto* suite_tol = suite->add_option("--tol", tol, "Relative tolerance");
  auto* suite_jobs = suite->add_option("--jobs", jobs, "Worker threads");
  auto* suite_format = suite->add_option("--format", format, "json, csv or markdown");
  suite->add_option("--out", out_path, "Write the report here instead of standard output");

  app.add_subcommand("list", "List suites, identity families and their parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (app.got_subcommand("list")) {
      list_families();
      return 0;
    }

    if (verify->parsed()) {
      if (!is_family(identity)) throw ConfigError("unknown identity '" + identity + "' (see 'hypercheck list')");
      ParamPoint overrides;
      for (const auto& [p, opt] : param_options) {
        if (opt->count() > 0) overrides[p] = values[p];
      }
      SuiteConfig config;
      config.tolerance = tol;
      config.output_format = parse_format(format);
      if (!out_path.empty()) config.output_path = out_path;
      std::vector<SuitePlan> plan{
          {identity, {{identity, expand_grid(identity, pin_parameters(identity, default_grid(identity), overrides))}}}};
      if (plan[0].families[0].points.empty()) {
        throw ConfigError("no cases: the given parameters lie outside the domain of '" + identity + "'");
      }
      config.suites = {identity};
      if (!(tol >= kMinSuiteTolerance && tol <= kMaxSuiteTolerance)) {
        throw ConfigError("tolerance must lie in [1e-14, 1e-2]");
      }
      const RunResult result = run_plan(plan, config);
      write_report(result, config.output_format, config.output_path);
      return exit_code(result);
    }

    SuiteConfig config = config_path.empty() ? default_grids() : load_config(config_path);
    if (suite_name == "all") {
      config.suites = suite_names();
    } else {
      suite_families(suite_name);
      config.suites = {suite_name};
    }
    if (suite_tol->count() > 0) config.tolerance = tol;
    if (suite_jobs->count() > 0) config.parallelism = jobs;
    if (suite_format->count() > 0) config.output_format = parse_format(format);
    if (!out_path.empty()) config.output_path = out_path;
    RunResult result = run_plan(plan_run(config), config);
    result.combined = suite_name == "all";
    write_report(result, config.output_format, config.output_path);
    return exit_code(result);
  } catch (const ConfigError& e) {
    std::cerr << "hypercheck: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "hypercheck: " << e.what() << "\n";
    return kUsageError;
  }
}
