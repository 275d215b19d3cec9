// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef DRUDE_CONFIG_HPP
#define DRUDE_CONFIG_HPP

#include <string>
#include <vector>

#include "drude/rootfinding.hpp"
#include "drude/types.hpp"

namespace drude::cli {

// Configuration problems map to the usage exit code.
struct ConfigError : Error {
  using Error::Error;
};

struct SearchConfig {
  rootfinding::SearchRegion region{-30.0, 30.0, -5.0, -1e-6, 48, 64};
  int n_max = 6;
  double tol = 1e-9;
  int grid_n = 200;  // membership-grid resolution for the enclosure command
};

struct StudyConfig {
  std::vector<double> X_list{5.0, 10.0, 25.0};
};

struct OracleConfig {
  bool enable = true;
  std::vector<double> h_list;  // empty: X/1024 and X/2048
  int n_max = 1;
};

struct EssentialConfig {
  double t_min = 1.0;
  double t_max = 2000.0;
  int n_samples = 400;
  double theta_sq_min = 0.0;
  double theta_sq_max = -1.0;  // negative: defaults to alpha_e
  int curve_samples = 200;
};

struct AsymptoticsConfig {
  std::vector<double> t_list{1e4, 1e6, 1e8};
};

struct OutputConfig {
  std::string directory = "out";
  bool csv = true;
  bool json = true;
  bool svg = true;
};

// Whole-run configuration; defaults describe the conducting-slab demo
// (gamma_e=4, gamma_m=1, alpha_e=400, alpha_m=10, L2=1, L3=pi).
struct RunConfig {
  MaterialParams material;
  WaveguideGeometry geometry;
  SearchConfig search;
  StudyConfig study;
  OracleConfig oracle;
  EssentialConfig essential;
  AsymptoticsConfig asymptotics;
  OutputConfig output;

  void validate() const;
};

// Parses and validates a config document. Unknown keys anywhere are
// rejected. Throws ConfigError on malformed input.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

// Normalized JSON echo of a configuration (used in report metadata).
std::string config_to_json_string(const RunConfig& config);

}  // namespace drude::cli

#endif  // DRUDE_CONFIG_HPP
