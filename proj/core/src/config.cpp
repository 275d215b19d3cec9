// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#include "drude/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace drude::cli {

using nlohmann::json;

namespace {

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
  if (!obj.is_object())
    throw ConfigError("config: '" + where + "' must be an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key))
      throw ConfigError("config: unknown key '" + key + "' in '" + where + "'");
  }
}

double get_num(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_number())
    throw ConfigError(std::string("config: '") + key + "' must be a number");
  return obj.at(key).get<double>();
}

int get_int(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_number_integer())
    throw ConfigError(std::string("config: '") + key + "' must be an integer");
  return obj.at(key).get<int>();
}

bool get_bool(const json& obj, const char* key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_boolean())
    throw ConfigError(std::string("config: '") + key + "' must be a boolean");
  return obj.at(key).get<bool>();
}

std::vector<double> get_num_list(const json& obj, const char* key,
                                 std::vector<double> fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_array())
    throw ConfigError(std::string("config: '") + key + "' must be an array");
  std::vector<double> out;
  for (const auto& v : obj.at(key)) {
    if (!v.is_number())
      throw ConfigError(std::string("config: '") + key + "' entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

void RunConfig::validate() const {
  try {
    material.validate();
    geometry.validate();
    search.region.validate();
  } catch (const InvalidInput& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (search.n_max < 1) throw ConfigError("config: search.n_max must be >= 1");
  if (!(search.tol > 0.0)) throw ConfigError("config: search.tol must be positive");
  if (search.grid_n < 2) throw ConfigError("config: search.grid must be >= 2");
  for (size_t i = 0; i + 1 < study.X_list.size(); ++i)
    if (!(study.X_list[i] < study.X_list[i + 1]))
      throw ConfigError("config: study.X_list must be strictly increasing");
  for (const double x : study.X_list)
    if (!(x > geometry.slab_end))
      throw ConfigError("config: study.X_list entries must exceed slab_end");
  if (!(essential.t_min <= essential.t_max))
    throw ConfigError("config: essential.t_min exceeds t_max");
  if (essential.n_samples < 2)
    throw ConfigError("config: essential.n_samples must be >= 2");
  if (essential.curve_samples < 1)
    throw ConfigError("config: essential.curve_samples must be >= 1");
  if (oracle.n_max < 1) throw ConfigError("config: oracle.n_max must be >= 1");
  for (const double h : oracle.h_list)
    if (!(h > 0.0)) throw ConfigError("config: oracle.h_list entries must be positive");
  for (const double t : asymptotics.t_list)
    if (!(t > 0.0)) throw ConfigError("config: asymptotics.t_list entries must be positive");
  if (output.directory.empty())
    throw ConfigError("config: output.directory must not be empty");
}

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  require_keys(j, "(root)",
               {"material", "geometry", "search", "study", "oracle", "essential",
                "asymptotics", "output"});

  RunConfig c;
  if (j.contains("material")) {
    const json& m = j.at("material");
    require_keys(m, "material",
                 {"gamma_e", "gamma_m", "alpha_e", "alpha_m", "theta_e_inf_sq",
                  "theta_m_inf_sq"});
    c.material.gamma_e = get_num(m, "gamma_e", c.material.gamma_e);
    c.material.gamma_m = get_num(m, "gamma_m", c.material.gamma_m);
    c.material.alpha_e = get_num(m, "alpha_e", c.material.alpha_e);
    c.material.alpha_m = get_num(m, "alpha_m", c.material.alpha_m);
    c.material.theta_e_inf_sq = get_num(m, "theta_e_inf_sq", c.material.theta_e_inf_sq);
    c.material.theta_m_inf_sq = get_num(m, "theta_m_inf_sq", c.material.theta_m_inf_sq);
  }
  if (j.contains("geometry")) {
    const json& g = j.at("geometry");
    require_keys(g, "geometry", {"L2", "L3", "slab_end", "X"});
    c.geometry.L2 = get_num(g, "L2", c.geometry.L2);
    c.geometry.L3 = get_num(g, "L3", c.geometry.L3);
    c.geometry.slab_end = get_num(g, "slab_end", c.geometry.slab_end);
    if (g.contains("X")) {
      const json& x = g.at("X");
      if (x.is_string()) {
        if (x.get<std::string>() != "inf")
          throw ConfigError("config: geometry.X string value must be \"inf\"");
        c.geometry.X = std::numeric_limits<double>::infinity();
      } else if (x.is_number()) {
        c.geometry.X = x.get<double>();
      } else {
        throw ConfigError("config: geometry.X must be a number or \"inf\"");
      }
    }
  }
  if (j.contains("search")) {
    const json& s = j.at("search");
    require_keys(s, "search",
                 {"re_min", "re_max", "im_min", "im_max", "n_max", "tol",
                  "max_depth", "boundary_samples", "grid"});
    c.search.region.re_min = get_num(s, "re_min", c.search.region.re_min);
    c.search.region.re_max = get_num(s, "re_max", c.search.region.re_max);
    c.search.region.im_min = get_num(s, "im_min", c.search.region.im_min);
    c.search.region.im_max = get_num(s, "im_max", c.search.region.im_max);
    c.search.region.max_depth = get_int(s, "max_depth", c.search.region.max_depth);
    c.search.region.boundary_samples =
        get_int(s, "boundary_samples", c.search.region.boundary_samples);
    c.search.n_max = get_int(s, "n_max", c.search.n_max);
    c.search.tol = get_num(s, "tol", c.search.tol);
    c.search.grid_n = get_int(s, "grid", c.search.grid_n);
  }
  if (j.contains("study")) {
    const json& s = j.at("study");
    require_keys(s, "study", {"X_list"});
    c.study.X_list = get_num_list(s, "X_list", c.study.X_list);
  }
  if (j.contains("oracle")) {
    const json& o = j.at("oracle");
    require_keys(o, "oracle", {"enable", "h_list", "n_max"});
    c.oracle.enable = get_bool(o, "enable", c.oracle.enable);
    c.oracle.h_list = get_num_list(o, "h_list", c.oracle.h_list);
    c.oracle.n_max = get_int(o, "n_max", c.oracle.n_max);
  }
  if (j.contains("essential")) {
    const json& e = j.at("essential");
    require_keys(e, "essential",
                 {"t_min", "t_max", "n_samples", "theta_sq_min", "theta_sq_max",
                  "curve_samples"});
    c.essential.t_min = get_num(e, "t_min", c.essential.t_min);
    c.essential.t_max = get_num(e, "t_max", c.essential.t_max);
    c.essential.n_samples = get_int(e, "n_samples", c.essential.n_samples);
    c.essential.theta_sq_min = get_num(e, "theta_sq_min", c.essential.theta_sq_min);
    c.essential.theta_sq_max = get_num(e, "theta_sq_max", c.essential.theta_sq_max);
    c.essential.curve_samples = get_int(e, "curve_samples", c.essential.curve_samples);
  }
  if (j.contains("asymptotics")) {
    const json& a = j.at("asymptotics");
    require_keys(a, "asymptotics", {"t_list"});
    c.asymptotics.t_list = get_num_list(a, "t_list", c.asymptotics.t_list);
  }
  if (j.contains("output")) {
    const json& o = j.at("output");
    require_keys(o, "output", {"directory", "formats"});
    if (o.contains("directory")) {
      if (!o.at("directory").is_string())
        throw ConfigError("config: output.directory must be a string");
      c.output.directory = o.at("directory").get<std::string>();
    }
    if (o.contains("formats")) {
      if (!o.at("formats").is_array())
        throw ConfigError("config: output.formats must be an array");
      c.output.csv = c.output.json = c.output.svg = false;
      for (const auto& f : o.at("formats")) {
        const std::string name = f.is_string() ? f.get<std::string>() : "";
        if (name == "csv") c.output.csv = true;
        else if (name == "json") c.output.json = true;
        else if (name == "svg") c.output.svg = true;
        else throw ConfigError("config: output.formats entries must be csv|json|svg");
      }
    }
  }

  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string config_to_json_string(const RunConfig& c) {
  json j;
  j["material"] = {{"gamma_e", c.material.gamma_e},
                   {"gamma_m", c.material.gamma_m},
                   {"alpha_e", c.material.alpha_e},
                   {"alpha_m", c.material.alpha_m},
                   {"theta_e_inf_sq", c.material.theta_e_inf_sq},
                   {"theta_m_inf_sq", c.material.theta_m_inf_sq}};
  j["geometry"] = {{"L2", c.geometry.L2},
                   {"L3", c.geometry.L3},
                   {"slab_end", c.geometry.slab_end}};
  if (c.geometry.truncated())
    j["geometry"]["X"] = c.geometry.X;
  else
    j["geometry"]["X"] = "inf";
  j["search"] = {{"re_min", c.search.region.re_min},
                 {"re_max", c.search.region.re_max},
                 {"im_min", c.search.region.im_min},
                 {"im_max", c.search.region.im_max},
                 {"max_depth", c.search.region.max_depth},
                 {"boundary_samples", c.search.region.boundary_samples},
                 {"n_max", c.search.n_max},
                 {"tol", c.search.tol},
                 {"grid", c.search.grid_n}};
  j["study"] = {{"X_list", c.study.X_list}};
  j["oracle"] = {{"enable", c.oracle.enable},
                 {"h_list", c.oracle.h_list},
                 {"n_max", c.oracle.n_max}};
  j["essential"] = {{"t_min", c.essential.t_min},
                    {"t_max", c.essential.t_max},
                    {"n_samples", c.essential.n_samples},
                    {"theta_sq_min", c.essential.theta_sq_min},
                    {"theta_sq_max", c.essential.theta_sq_max},
                    {"curve_samples", c.essential.curve_samples}};
  j["asymptotics"] = {{"t_list", c.asymptotics.t_list}};
  std::vector<std::string> formats;
  if (c.output.csv) formats.push_back("csv");
  if (c.output.json) formats.push_back("json");
  if (c.output.svg) formats.push_back("svg");
  j["output"] = {{"directory", c.output.directory}, {"formats", formats}};
  return j.dump(2);
}

}  // namespace drude::cli
