// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#include "drude/report.hpp"

#include <chrono>
#include <ctime>

#include <json.hpp>

namespace drude::cli {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

Complex complex_from_json(const json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

waveguide::PointClass point_class_from_string(const std::string& s) {
  using waveguide::PointClass;
  if (s == "true_eig") return PointClass::TrueEig;
  if (s == "truncated_eig") return PointClass::TruncatedEig;
  if (s == "pollution_candidate") return PointClass::PollutionCandidate;
  if (s == "converged") return PointClass::Converged;
  throw InvalidInput("report: unknown point class '" + s + "'");
}

waveguide::LimitClass limit_class_from_string(const std::string& s) {
  using waveguide::LimitClass;
  if (s == "converges_to_true_eig") return LimitClass::ConvergesToTrueEig;
  if (s == "accumulates_on_we") return LimitClass::AccumulatesOnWe;
  if (s == "undecided") return LimitClass::Undecided;
  throw InvalidInput("report: unknown limit class '" + s + "'");
}

RegionTag region_tag_from_string(const std::string& s) {
  if (s == "sigma1") return RegionTag::Sigma1;
  if (s == "sigma2") return RegionTag::Sigma2;
  if (s == "excluded") return RegionTag::Excluded;
  throw InvalidInput("report: unknown sigma tag '" + s + "'");
}

json point_to_json(const waveguide::SpectrumPoint& p) {
  return json{{"n2", p.mode.n2},
              {"n3", p.mode.n3},
              {"omega", complex_to_json(p.omega)},
              {"residual", p.residual},
              {"winding", p.winding},
              {"class", waveguide::to_string(p.cls)},
              {"in_strip", p.in_strip},
              {"in_enc", p.in_enc},
              {"in_gamma", p.in_gamma},
              {"sigma_tag", to_string(p.sigma)}};
}

waveguide::SpectrumPoint point_from_json(const json& j) {
  waveguide::SpectrumPoint p;
  p.mode = {j.at("n2").get<int>(), j.at("n3").get<int>()};
  p.omega = complex_from_json(j.at("omega"));
  p.residual = j.at("residual").get<double>();
  p.winding = j.at("winding").get<int>();
  p.cls = point_class_from_string(j.at("class").get<std::string>());
  p.in_strip = j.at("in_strip").get<bool>();
  p.in_enc = j.at("in_enc").get<bool>();
  p.in_gamma = j.at("in_gamma").get<bool>();
  p.sigma = region_tag_from_string(j.at("sigma_tag").get<std::string>());
  return p;
}

json trajectory_to_json(const waveguide::TrajectoryReport& t) {
  json samples = json::array();
  for (const auto& s : t.samples)
    samples.push_back(json{{"X", s.X},
                           {"omega", complex_to_json(s.omega)},
                           {"dist_to_we", s.dist_to_we},
                           {"dist_to_true", s.dist_to_true}});
  return json{{"chain_id", t.chain_id},
              {"n2", t.mode.n2},
              {"n3", t.mode.n3},
              {"class", waveguide::to_string(t.limit_class)},
              {"target", complex_to_json(t.limit_target)},
              {"broken", t.broken},
              {"samples", samples}};
}

waveguide::TrajectoryReport trajectory_from_json(const json& j) {
  waveguide::TrajectoryReport t;
  t.chain_id = j.at("chain_id").get<int>();
  t.mode = {j.at("n2").get<int>(), j.at("n3").get<int>()};
  t.limit_class = limit_class_from_string(j.at("class").get<std::string>());
  t.limit_target = complex_from_json(j.at("target"));
  t.broken = j.at("broken").get<bool>();
  for (const auto& s : j.at("samples"))
    t.samples.push_back({s.at("X").get<double>(), complex_from_json(s.at("omega")),
                         s.at("dist_to_we").get<double>(),
                         s.at("dist_to_true").get<double>()});
  return t;
}

}  // namespace

std::string to_json_string(const SpectrumReport& report, int indent) {
  json j;
  j["metadata"] = json{{"tool_version", report.metadata.tool_version},
                       {"timestamp", report.metadata.timestamp},
                       {"config_echo", report.metadata.config_echo}};
  j["points"] = json::array();
  for (const auto& p : report.points) j["points"].push_back(point_to_json(p));

  json s_infty = json::array();
  for (const auto& [t, w] : report.curves.s_infty)
    s_infty.push_back(json{{"t", t}, {"omega", complex_to_json(w)}});
  json g_curve = json::array();
  for (const auto& [t, w] : report.curves.g_curve)
    g_curve.push_back(json{{"theta_sq", t}, {"omega", complex_to_json(w)}});
  json g_points = json::array();
  for (const auto& w : report.curves.g_points) g_points.push_back(complex_to_json(w));
  j["curves"] = json{{"s_infty", s_infty},
                     {"g_points", g_points},
                     {"g_curve", g_curve},
                     {"has_we_halfline", report.curves.has_we_halfline},
                     {"we_threshold", report.curves.we_threshold}};

  json gamma_boundary = json::array();
  for (const auto& w : report.sets.gamma_boundary)
    gamma_boundary.push_back(complex_to_json(w));
  json poles = json::array();
  for (const auto& w : report.sets.poles) poles.push_back(complex_to_json(w));
  j["sets"] = json{{"gamma_boundary", gamma_boundary}, {"poles", poles}};

  j["trajectories"] = json::array();
  for (const auto& t : report.trajectories)
    j["trajectories"].push_back(trajectory_to_json(t));

  j["warnings"] = json::array();
  for (const auto& w : report.warnings)
    j["warnings"].push_back(json{{"n2", w.mode.n2},
                                 {"n3", w.mode.n3},
                                 {"message", w.message}});
  return j.dump(indent);
}

SpectrumReport report_from_json_string(const std::string& text) {
  const json j = json::parse(text);
  SpectrumReport r;
  const json& meta = j.at("metadata");
  r.metadata.tool_version = meta.at("tool_version").get<std::string>();
  r.metadata.timestamp = meta.at("timestamp").get<std::string>();
  r.metadata.config_echo = meta.at("config_echo").get<std::string>();
  for (const auto& p : j.at("points")) r.points.push_back(point_from_json(p));
  const json& curves = j.at("curves");
  for (const auto& e : curves.at("s_infty"))
    r.curves.s_infty.emplace_back(e.at("t").get<double>(),
                                  complex_from_json(e.at("omega")));
  for (const auto& e : curves.at("g_points"))
    r.curves.g_points.push_back(complex_from_json(e));
  for (const auto& e : curves.at("g_curve"))
    r.curves.g_curve.emplace_back(e.at("theta_sq").get<double>(),
                                  complex_from_json(e.at("omega")));
  r.curves.has_we_halfline = curves.at("has_we_halfline").get<bool>();
  r.curves.we_threshold = curves.at("we_threshold").get<double>();
  const json& sets = j.at("sets");
  for (const auto& e : sets.at("gamma_boundary"))
    r.sets.gamma_boundary.push_back(complex_from_json(e));
  for (const auto& e : sets.at("poles")) r.sets.poles.push_back(complex_from_json(e));
  for (const auto& t : j.at("trajectories"))
    r.trajectories.push_back(trajectory_from_json(t));
  for (const auto& w : j.at("warnings"))
    r.warnings.push_back({{w.at("n2").get<int>(), w.at("n3").get<int>()},
                          w.at("message").get<std::string>()});
  return r;
}

std::string current_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace drude::cli
