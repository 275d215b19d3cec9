// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef DRUDE_REPORT_HPP
#define DRUDE_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "drude/types.hpp"
#include "drude/waveguide.hpp"

namespace drude::cli {

struct ReportMetadata {
  std::string tool_version = kToolVersion;
  std::string timestamp;    // ISO-8601, UTC
  std::string config_echo;  // normalized configuration as JSON text
};

// Essential-spectrum content: constant-coefficient curve samples (t, omega),
// the gradient-field points, the parametric gradient curve (theta_sq, omega)
// and the essential numerical range threshold when it exists.
struct EssentialCurves {
  std::vector<std::pair<double, Complex>> s_infty;
  std::vector<Complex> g_points;
  std::vector<std::pair<double, Complex>> g_curve;
  bool has_we_halfline = false;
  double we_threshold = 0.0;
};

struct EnclosureSets {
  std::vector<Complex> gamma_boundary;
  std::vector<Complex> poles;
};

// Full output of a sweep; serializes losslessly through JSON.
struct SpectrumReport {
  ReportMetadata metadata;
  std::vector<waveguide::SpectrumPoint> points;
  EssentialCurves curves;
  EnclosureSets sets;
  std::vector<waveguide::TrajectoryReport> trajectories;
  std::vector<waveguide::ModeWarning> warnings;
};

std::string to_json_string(const SpectrumReport& report, int indent = 2);
SpectrumReport report_from_json_string(const std::string& text);

std::string current_timestamp();

}  // namespace drude::cli

#endif  // DRUDE_REPORT_HPP
