// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "drude/commands.hpp"

namespace {

struct Options {
  std::string config_path;
  std::string out_dir;
  int threads = 1;
};

drude::cli::RunConfig load(const Options& opt) {
  drude::cli::RunConfig config = drude::cli::load_config(opt.config_path);
  if (!opt.out_dir.empty()) config.output.directory = opt.out_dir;
  return config;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config_path, "JSON configuration file")
      ->required();
  cmd->add_option("--out", opt.out_dir, "Output directory (overrides config)");
  cmd->add_option("--threads", opt.threads, "Worker threads for sweeps")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified spectral data for a lossy dispersive slab in a "
               "semi-infinite rectangular waveguide"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  Options opt;
  CLI::App* enclosure = app.add_subcommand(
      "enclosure", "Sample the spectral enclosure sets on a grid");
  CLI::App* essential = app.add_subcommand(
      "essential", "Essential-spectrum curves and points");
  CLI::App* eigs = app.add_subcommand(
      "eigs", "Certified eigenvalue sweep of the dispersion relations");
  CLI::App* study = app.add_subcommand(
      "truncate-study", "Track eigenvalues across domain truncations");
  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "Cross-validate against the finite-difference determinant");
  CLI::App* asym = app.add_subcommand(
      "asymptotics", "Compare quartic roots with their large-t expansions");
  for (CLI::App* cmd : {enclosure, essential, eigs, study, oracle, asym})
    add_common(cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : drude::cli::kExitUsage;
  }

  try {
    const drude::cli::RunConfig config = load(opt);
    drude::cli::CommandOutcome outcome;
    if (enclosure->parsed()) outcome = drude::cli::cmd_enclosure(config);
    else if (essential->parsed()) outcome = drude::cli::cmd_essential(config);
    else if (eigs->parsed()) outcome = drude::cli::cmd_eigs(config, opt.threads);
    else if (study->parsed())
      outcome = drude::cli::cmd_truncate_study(config, opt.threads);
    else if (oracle->parsed())
      outcome = drude::cli::cmd_oracle_check(config, opt.threads);
    else outcome = drude::cli::cmd_asymptotics(config);
    for (const std::string& f : outcome.files)
      std::printf("wrote %s\n", f.c_str());
    return outcome.exit_code;
  } catch (const drude::cli::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return drude::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return drude::cli::kExitComputation;
  }
}
