// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef DRUDE_COMMANDS_HPP
#define DRUDE_COMMANDS_HPP

#include <string>
#include <vector>

#include "drude/config.hpp"
#include "drude/report.hpp"

namespace drude::cli {

// Exit codes: 0 success, 1 computation failure, 2 usage/config error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

struct CommandOutcome {
  int exit_code = kExitOk;
  std::vector<std::string> files;  // paths written
};

// Membership sweep of the enclosure sets on a grid: enclosure.csv/.svg.
CommandOutcome cmd_enclosure(const RunConfig& config);

// Essential-spectrum curves and points: essential.csv/.svg.
CommandOutcome cmd_essential(const RunConfig& config);

// Eigenvalue sweep: eigs.csv/.svg, report.json, warnings.json on partial
// failure. Exit code 1 only when every mode fails.
CommandOutcome cmd_eigs(const RunConfig& config, int threads = 1);

// Domain-truncation study: study.csv/.svg, report.json.
CommandOutcome cmd_truncate_study(const RunConfig& config, int threads = 1);

// Finite-difference cross-validation: oracle.csv.
CommandOutcome cmd_oracle_check(const RunConfig& config, int threads = 1);

// Quartic-root asymptotics table: asymptotics.csv.
CommandOutcome cmd_asymptotics(const RunConfig& config);

}  // namespace drude::cli

#endif  // DRUDE_COMMANDS_HPP
