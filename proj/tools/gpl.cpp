// gpl - run, check and search two-Galois-point configurations on P^1 and the
// Fermat cubic, with deterministic text/JSON certificates.
//
// Exit codes: 0 ok, 1 usage, 2 criterion failed, 3 construction failed,
// 4 expectation mismatch, 5 config error, 6 i/o error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

#include "gpl/scenario.hpp"

namespace {

gpl::json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) gpl::raise(gpl::Errc::ConfigError, "cannot read config file '" + path + "'");
  gpl::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    gpl::raise(gpl::Errc::ConfigError, "bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const gpl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gpl::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gpl::kExitConfig;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certificates for birational plane models with two Galois points"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  std::string scenario_name;
  std::string config_path;

  CLI::App* list_cmd = app.add_subcommand("list", "list the built-in scenarios");

  CLI::App* scenario_cmd = app.add_subcommand("scenario", "run a scenario and emit certificates");
  scenario_cmd->add_option("name", scenario_name, "built-in scenario name");
  scenario_cmd->add_option("--config", config_path, "JSON scenario config file");
  scenario_cmd->add_option("--format", format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  scenario_cmd->add_option("--out", out_path, "write the report to this path");

  CLI::App* search_cmd = app.add_subcommand("search", "search a finite field for witness points");
  search_cmd->add_option("--config", config_path, "JSON search config file")->required();
  search_cmd->add_option("--format", format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  search_cmd->add_option("--out", out_path, "write the report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (list_cmd->parsed()) {
    for (const auto& name : gpl::builtin_scenario_names()) std::cout << name << "\n";
    return 0;
  }

  if (scenario_cmd->parsed()) {
    return guarded([&] {
      if (scenario_name.empty() == config_path.empty())
        gpl::raise(gpl::Errc::ConfigError, "give exactly one of <name> or --config FILE");
      gpl::ScenarioConfig cfg = scenario_name.empty()
                                    ? gpl::config_from_json(load_json_file(config_path))
                                    : gpl::builtin_scenario(scenario_name);
      gpl::RunReport report = gpl::run_scenario(cfg);
      gpl::emit(report, format, out_path);
      return report.exit_code;
    });
  }

  if (search_cmd->parsed()) {
    return guarded([&] {
      gpl::ScenarioConfig cfg = gpl::config_from_json(load_json_file(config_path));
      gpl::RunReport report = gpl::run_search(cfg);
      gpl::emit(report, format, out_path);
      return report.exit_code;
    });
  }
  return 1;
}
