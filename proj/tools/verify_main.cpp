#include <iostream>

#include <CLI11.hpp>

#include "photon/verify/runner.hpp"

int main(int argc, char** argv) {
  using namespace photon::verify;
  CLI::App app{"Verification suites for the bispinor photon wave function"};
  app.require_subcommand(1);
  app.footer(csv_documentation() + "\nEnvironment: VERIFY_LOG=trace|debug|info|warn|error|off (default warn)");

  RunOptions opts;
  auto* run_cmd = app.add_subcommand("run", "run the suites of a scenario and write report.json plus CSVs");
  run_cmd->add_option("scenario", opts.scenario_path, "scenario JSON file")->required();
  run_cmd->add_option("--out", opts.out_dir, "output directory")->required();
  run_cmd->add_option("--seed", opts.seed, "seed of the suite random streams")->default_val(0);
  run_cmd->add_flag("--parallel", opts.parallel, "run independent suites concurrently");

  bool as_json = false;
  auto* list_cmd = app.add_subcommand("list-suites", "print the suite registry");
  list_cmd->add_flag("--json", as_json, "print a JSON array of suite ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  if (*list_cmd) {
    std::cout << (as_json ? list_suites_json() : list_suites_text());
    return kPass;
  }
  return run(opts);
}
