#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thinfilm/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Thin-film simulator for an Ellis shear-thinning fluid"};
  app.require_subcommand(1);

  std::string run_config, mms_config, sweep_config;
  std::string sweep_param;
  std::vector<double> sweep_values;

  CLI::App* run = app.add_subcommand("run", "execute a configured simulation");
  run->add_option("config", run_config, "config file")->required();

  CLI::App* mms = app.add_subcommand(
      "mms", "manufactured-solution convergence study");
  mms->add_option("config", mms_config, "config file with [mms] block")
      ->required();

  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep");
  sweep->add_option("config", sweep_config, "base config file")->required();
  sweep->add_option("--param", sweep_param, "alpha | tau_star | amplitude")
      ->required();
  sweep->add_option("--values", sweep_values, "comma-separated values")
      ->required()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (run->parsed()) return thinfilm::cmd_run(run_config);
  if (mms->parsed()) return thinfilm::cmd_mms(mms_config);
  return thinfilm::cmd_sweep(sweep_config, sweep_param, sweep_values);
}
