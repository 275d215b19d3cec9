// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#include "drude/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "drude/fd_oracle.hpp"
#include "drude/model.hpp"
#include "drude/svg.hpp"
#include "drude/waveguide.hpp"

namespace drude::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& header) : out_(path) {
    if (!out_) throw Error("csv: cannot open '" + path + "' for writing");
    out_ << header << '\n';
  }
  void row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

std::string prepare_output_dir(const RunConfig& config) {
  fs::path dir(config.output.directory);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("output: cannot create directory '" + dir.string() + "'");
  return dir.string();
}

ReportMetadata make_metadata(const RunConfig& config) {
  ReportMetadata meta;
  meta.timestamp = current_timestamp();
  meta.config_echo = config_to_json_string(config);
  return meta;
}

// Lower boundary of the refined enclosure off the imaginary axis:
// Im = -min((gamma_e+gamma_m)/2, max gamma, K/Re^2).
std::vector<Complex> gamma_boundary_samples(const RunConfig& config, int n) {
  const MaterialParams& m = config.material;
  const double k = m.gamma_e * m.theta_e_sup_sq() + m.gamma_m * m.theta_m_sup_sq();
  const double cap = std::min(0.5 * (m.gamma_e + m.gamma_m), m.gamma_max());
  const auto& r = config.search.region;
  std::vector<Complex> pts;
  pts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = r.re_min + (r.re_max - r.re_min) * i / (n - 1);
    const double depth = x == 0.0 ? cap : std::min(cap, k / (x * x));
    pts.emplace_back(x, -depth);
  }
  return pts;
}

EssentialCurves compute_essential_curves(const RunConfig& config) {
  EssentialCurves curves;
  const MaterialParams& m = config.material;
  const EssentialConfig& e = config.essential;

  const double t_lo = e.t_min;
  const double t_hi = e.t_max;
  for (int i = 0; i < e.n_samples; ++i) {
    const double t = t_lo + (t_hi - t_lo) * i / (e.n_samples - 1);
    for (const Complex& w : model::essential_curve_s_infty(m, t, t, 2))
      curves.s_infty.emplace_back(t, w);
  }

  curves.g_points = model::sigma_e_G_points(m);

  const double theta_hi = e.theta_sq_max < 0.0 ? m.alpha_e : e.theta_sq_max;
  const auto curve = model::sigma_e_G_curve(e.theta_sq_min, theta_hi,
                                            m.gamma_e, e.curve_samples);
  for (int i = 0; i < static_cast<int>(curve.size()); ++i) {
    const int sample = i % e.curve_samples;
    const double t =
        e.curve_samples == 1
            ? e.theta_sq_min
            : e.theta_sq_min + (theta_hi - e.theta_sq_min) * sample /
                                   (e.curve_samples - 1);
    curves.g_curve.emplace_back(t, curve[static_cast<size_t>(i)]);
  }

  if (m.vacuum_at_infinity()) {
    curves.has_we_halfline = true;
    curves.we_threshold = model::we_s_infty(config.geometry, m).threshold;
  }
  return curves;
}

void draw_essential_sets(SvgPlot& plot, const EssentialCurves& curves,
                         const MaterialParams& m,
                         const rootfinding::SearchRegion& r) {
  std::vector<Complex> s_pts;
  for (const auto& [t, w] : curves.s_infty) s_pts.push_back(w);
  for (const Complex& w : s_pts) plot.circle(w, 1.2, "#cc0000");
  for (const Complex& w : curves.g_points) plot.cross(w, 5.0, "#cc0000");
  if (curves.has_we_halfline) {
    const double c = curves.we_threshold;
    plot.segment({c, 0.0}, {r.re_max, 0.0}, "#cc0000", 1.5);
    plot.segment({-c, 0.0}, {r.re_min, 0.0}, "#cc0000", 1.5);
  }
  plot.square({0.0, -m.gamma_e}, 3.0, "#000000");
  plot.square({0.0, -m.gamma_m}, 3.0, "#000000");
}

void write_report_json(const std::string& dir, const SpectrumReport& report,
                       CommandOutcome& outcome) {
  const std::string path = dir + "/report.json";
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("report: cannot open '" + path + "' for writing");
  f << to_json_string(report) << '\n';
  outcome.files.push_back(path);
}

void write_warnings_json(const std::string& dir,
                         const std::vector<waveguide::ModeWarning>& warnings,
                         CommandOutcome& outcome) {
  if (warnings.empty()) return;
  json j = json::array();
  for (const auto& w : warnings)
    j.push_back({{"n2", w.mode.n2}, {"n3", w.mode.n3}, {"message", w.message}});
  const std::string path = dir + "/warnings.json";
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("report: cannot open '" + path + "' for writing");
  f << j.dump(2) << '\n';
  outcome.files.push_back(path);
}

}  // namespace

CommandOutcome cmd_enclosure(const RunConfig& config) {
  config.validate();
  CommandOutcome outcome;
  const std::string dir = prepare_output_dir(config);
  const MaterialParams& m = config.material;
  const auto& r = config.search.region;
  const int n = config.search.grid_n;

  if (config.output.csv) {
    const std::string path = dir + "/enclosure.csv";
    CsvWriter csv(path, "re,im,in_strip,in_enc,in_gamma,sigma_tag");
    for (int i = 0; i < n; ++i) {
      const double re = r.re_min + (r.re_max - r.re_min) * i / (n - 1);
      for (int j = 0; j < n; ++j) {
        const double im = r.im_min + (r.im_max - r.im_min) * j / (n - 1);
        const Complex w(re, im);
        csv.row({num(re), num(im),
                 model::strip_contains(w, m) ? "1" : "0",
                 model::enc_contains(w, m) ? "1" : "0",
                 model::gamma_set_contains(w, m) ? "1" : "0",
                 to_string(model::classify_sigma(w, m.gamma_m))});
      }
    }
    outcome.files.push_back(path);
  }

  if (config.output.svg) {
    SvgPlot plot(r.re_min, r.re_max, r.im_min, r.im_max);
    plot.axes();
    plot.polyline(gamma_boundary_samples(config, 512), "#009900", 1.5);
    plot.segment({r.re_min, 0.0}, {r.re_max, 0.0}, "#009900", 1.5);
    plot.segment({r.re_min, -m.gamma_max()}, {r.re_max, -m.gamma_max()},
                 "#999999", 1.0);
    plot.square({0.0, -m.gamma_e}, 3.0, "#000000");
    plot.square({0.0, -m.gamma_m}, 3.0, "#000000");
    const std::string path = dir + "/enclosure.svg";
    plot.write(path);
    outcome.files.push_back(path);
  }
  return outcome;
}

CommandOutcome cmd_essential(const RunConfig& config) {
  config.validate();
  CommandOutcome outcome;
  const std::string dir = prepare_output_dir(config);
  const EssentialCurves curves = compute_essential_curves(config);

  if (config.output.csv) {
    const std::string path = dir + "/essential.csv";
    CsvWriter csv(path, "source,param,re,im");
    for (const auto& [t, w] : curves.s_infty)
      csv.row({"s_infty", num(t), num(w.real()), num(w.imag())});
    for (const Complex& w : curves.g_points)
      csv.row({"G_points", "0", num(w.real()), num(w.imag())});
    for (const auto& [t, w] : curves.g_curve)
      csv.row({"G_curve", num(t), num(w.real()), num(w.imag())});
    if (curves.has_we_halfline) {
      csv.row({"We_halfline", num(curves.we_threshold), num(curves.we_threshold), "0"});
      csv.row({"We_halfline", num(curves.we_threshold), num(-curves.we_threshold), "0"});
    }
    outcome.files.push_back(path);
  }

  if (config.output.svg) {
    const auto& r = config.search.region;
    SvgPlot plot(r.re_min, r.re_max, r.im_min, r.im_max);
    plot.axes();
    draw_essential_sets(plot, curves, config.material, r);
    const std::string path = dir + "/essential.svg";
    plot.write(path);
    outcome.files.push_back(path);
  }

  if (config.output.json) {
    SpectrumReport report;
    report.metadata = make_metadata(config);
    report.curves = curves;
    report.sets.gamma_boundary = gamma_boundary_samples(config, 512);
    report.sets.poles = {{0.0, -config.material.gamma_e},
                         {0.0, -config.material.gamma_m}};
    write_report_json(dir, report, outcome);
  }
  return outcome;
}

CommandOutcome cmd_eigs(const RunConfig& config, int threads) {
  config.validate();
  CommandOutcome outcome;
  const std::string dir = prepare_output_dir(config);

  const waveguide::SpectrumResult result =
      waveguide::spectrum(config.geometry, config.material, config.search.region,
                          config.search.n_max, config.search.tol, threads);

  const int total_modes = config.search.n_max * config.search.n_max;
  if (static_cast<int>(result.warnings.size()) >= total_modes &&
      result.points.empty())
    outcome.exit_code = kExitComputation;

  if (config.output.csv) {
    const std::string path = dir + "/eigs.csv";
    CsvWriter csv(path, "n2,n3,re_omega,im_omega,residual,winding,in_gamma,sigma_tag");
    for (const auto& p : result.points)
      csv.row({std::to_string(p.mode.n2), std::to_string(p.mode.n3),
               num(p.omega.real()), num(p.omega.imag()), num(p.residual),
               std::to_string(p.winding), p.in_gamma ? "1" : "0",
               to_string(p.sigma)});
    outcome.files.push_back(path);
  }

  SpectrumReport report;
  report.metadata = make_metadata(config);
  report.points = result.points;
  report.warnings = result.warnings;
  report.curves = compute_essential_curves(config);
  report.sets.gamma_boundary = gamma_boundary_samples(config, 512);
  report.sets.poles = {{0.0, -config.material.gamma_e},
                       {0.0, -config.material.gamma_m}};

  if (config.output.svg) {
    const auto& r = config.search.region;
    SvgPlot plot(r.re_min, r.re_max, std::min(r.im_min, -1.0),
                 std::max(r.im_max, 0.5));
    plot.axes();
    plot.polyline(report.sets.gamma_boundary, "#009900", 1.5);
    draw_essential_sets(plot, report.curves, config.material, r);
    for (const auto& p : result.points) plot.circle(p.omega, 2.5, "#0033cc");
    const std::string path = dir + "/eigs.svg";
    plot.write(path);
    outcome.files.push_back(path);
  }

  if (config.output.json) write_report_json(dir, report, outcome);
  write_warnings_json(dir, result.warnings, outcome);
  return outcome;
}

CommandOutcome cmd_truncate_study(const RunConfig& config, int threads) {
  config.validate();
  CommandOutcome outcome;
  const std::string dir = prepare_output_dir(config);

  const auto trajectories = waveguide::truncation_study(
      config.geometry, config.material, config.study.X_list,
      config.search.region, config.search.n_max, config.search.tol, threads);

  if (config.output.csv) {
    const std::string path = dir + "/study.csv";
    CsvWriter csv(path,
                  "X,n2,n3,re_omega,im_omega,chain_id,class,dist_to_We,dist_to_true");
    for (const auto& chain : trajectories)
      for (const auto& s : chain.samples)
        csv.row({num(s.X), std::to_string(chain.mode.n2),
                 std::to_string(chain.mode.n3), num(s.omega.real()),
                 num(s.omega.imag()), std::to_string(chain.chain_id),
                 waveguide::to_string(chain.limit_class), num(s.dist_to_we),
                 num(s.dist_to_true)});
    outcome.files.push_back(path);
  }

  if (config.output.svg) {
    const auto& r = config.search.region;
    SvgPlot plot(r.re_min, r.re_max, std::min(r.im_min, -1.0),
                 std::max(r.im_max, 0.5));
    plot.axes();
    const std::vector<std::string> shades{"#99bbee", "#4477dd", "#0033cc",
                                          "#001a80"};
    for (const auto& chain : trajectories)
      for (size_t k = 0; k < chain.samples.size(); ++k)
        plot.circle(chain.samples[k].omega, 2.0,
                    shades[std::min(k, shades.size() - 1)]);
    if (config.material.vacuum_at_infinity()) {
      const double c =
          model::we_s_infty(config.geometry, config.material).threshold;
      plot.segment({c, 0.0}, {r.re_max, 0.0}, "#cc0000", 1.5);
      plot.segment({-c, 0.0}, {r.re_min, 0.0}, "#cc0000", 1.5);
    }
    plot.square({0.0, -config.material.gamma_e}, 3.0, "#000000");
    plot.square({0.0, -config.material.gamma_m}, 3.0, "#000000");
    const std::string path = dir + "/study.svg";
    plot.write(path);
    outcome.files.push_back(path);
  }

  if (config.output.json) {
    SpectrumReport report;
    report.metadata = make_metadata(config);
    report.trajectories = trajectories;
    report.sets.poles = {{0.0, -config.material.gamma_e},
                         {0.0, -config.material.gamma_m}};
    write_report_json(dir, report, outcome);
  }
  return outcome;
}

CommandOutcome cmd_oracle_check(const RunConfig& config, int threads) {
  (void)threads;
  config.validate();
  if (!config.oracle.enable)
    throw ConfigError("oracle-check: oracle.enable is false");
  if (!config.geometry.truncated())
    throw ConfigError("oracle-check: geometry.X must be finite");
  CommandOutcome outcome;
  const std::string dir = prepare_output_dir(config);

  std::vector<double> h_list = config.oracle.h_list;
  if (h_list.empty())
    h_list = {config.geometry.X / 1024.0, config.geometry.X / 2048.0};
  std::sort(h_list.rbegin(), h_list.rend());

  const std::string path = dir + "/oracle.csv";
  CsvWriter csv(path, "n2,n3,h,re_fd,im_fd,gap_to_dispersion,observed_order");
  bool any_ok = false;
  std::vector<waveguide::ModeWarning> warnings;
  for (int n2 = 1; n2 <= config.oracle.n_max; ++n2) {
    for (int n3 = 1; n3 <= config.oracle.n_max; ++n3) {
      const ModeIndex mode{n2, n3};
      try {
        const auto result = fd::convergence_order(
            mode, config.geometry, config.material, h_list,
            config.search.region, config.search.region.center(),
            config.search.tol);
        for (const auto& s : result.samples)
          csv.row({std::to_string(n2), std::to_string(n3), num(s.h),
                   num(s.fd_root.real()), num(s.fd_root.imag()), num(s.gap),
                   num(result.order)});
        any_ok = true;
      } catch (const Error& e) {
        warnings.push_back({mode, e.what()});
      }
    }
  }
  outcome.files.push_back(path);
  write_warnings_json(dir, warnings, outcome);
  if (!any_ok) outcome.exit_code = kExitComputation;
  return outcome;
}

CommandOutcome cmd_asymptotics(const RunConfig& config) {
  config.validate();
  CommandOutcome outcome;
  const std::string dir = prepare_output_dir(config);

  const std::string path = dir + "/asymptotics.csv";
  CsvWriter csv(path, "t,branch,re_asym,im_asym,re_quartic,im_quartic,abs_error");
  using model::AsymptoticBranch;
  const std::vector<std::pair<AsymptoticBranch, std::string>> branches{
      {AsymptoticBranch::NearPoleE, "near_pole_e"},
      {AsymptoticBranch::NearPoleM, "near_pole_m"},
      {AsymptoticBranch::LargeRealPlus, "large_real_plus"},
      {AsymptoticBranch::LargeRealMinus, "large_real_minus"}};
  for (const double t : config.asymptotics.t_list) {
    const auto roots =
        rootfinding::poly_roots(model::essential_quartic(config.material, t));
    for (const auto& [branch, name] : branches) {
      Complex prediction;
      try {
        prediction = model::asymptotic_root(t, branch, config.material);
      } catch (const DegenerateParams&) {
        continue;
      }
      Complex nearest = roots.front();
      for (const Complex& r : roots)
        if (std::abs(r - prediction) < std::abs(nearest - prediction))
          nearest = r;
      csv.row({num(t), name, num(prediction.real()), num(prediction.imag()),
               num(nearest.real()), num(nearest.imag()),
               num(std::abs(nearest - prediction))});
    }
  }
  outcome.files.push_back(path);
  return outcome;
}

}  // namespace drude::cli
