// Copyright 2026 The magsteer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "magsteer/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace magsteer {

using nlohmann::json;

namespace {

template <typename F>
SystemParams map_frequencies(const SystemParams& in, F f) {
  SystemParams out = in;
  for (Pair* v : {&out.delta_c, &out.delta_m, &out.kappa_c, &out.kappa_m, &out.g, &out.lambda_opa, &out.mu_sq,
                  &out.omega_m_abs})
    for (double& x : *v) x = f(x);
  return out;
}

const std::set<std::string>& frequency_keys() {
  static const std::set<std::string> keys = {"delta_c", "delta_m", "kappa_c",  "kappa_m",
                                             "g",       "lambda_opa", "mu_sq", "omega_m_abs"};
  return keys;
}

const std::set<std::string>& top_level_keys() {
  static const std::set<std::string> keys = {
      "frequencies_are_cyclic", "preset", "delta_c", "delta_m", "kappa_c", "kappa_m", "g", "lambda_opa",
      "theta", "mu_sq", "nu", "r", "temperature", "omega_m_abs", "n_m_override", "diffusion_convention", "sweep"};
  return keys;
}

double number(const json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError("'" + key + "' must be a number");
  return j.get<double>();
}

Pair pair_of(const json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 2) throw ConfigError("'" + key + "' must be an array of two numbers");
  return {number(j[0], key + "[0]"), number(j[1], key + "[1]")};
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "'" + where);
}

GridAxis parse_axis(const json& j, std::size_t k) {
  const std::string where = "sweep.axes[" + std::to_string(k) + "]";
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  reject_unknown(j, {"path", "start", "stop", "count"}, " in " + where);
  for (const char* req : {"path", "start", "stop", "count"})
    if (!j.contains(req)) throw ConfigError(where + " is missing '" + req + "'");
  if (!j["path"].is_string()) throw ConfigError(where + ".path must be a string");
  if (!j["count"].is_number_integer() || j["count"].get<long long>() < 1)
    throw ConfigError(where + ".count must be an integer >= 1");
  GridAxis axis{j["path"].get<std::string>(), number(j["start"], where + ".start"),
                number(j["stop"], where + ".stop"), j["count"].get<std::size_t>()};
  try {
    validate_axis(axis);
  } catch (const InvalidParameter& e) {
    throw ConfigError(where + ": " + e.what());
  }
  return axis;
}

json pair_json(const Pair& p) { return json::array({p[0], p[1]}); }

}  // namespace

SystemParams to_angular(const SystemParams& cyclic) {
  return map_frequencies(cyclic, [](double x) { return kTwoPi * x; });
}

SystemParams to_cyclic(const SystemParams& angular) {
  return map_frequencies(angular, [](double x) { return x / kTwoPi; });
}

SystemParams ConfigFile::params() const { return to_angular(cyclic); }

ConfigFile preset_config(const std::string& name) {
  const FigurePreset preset = make_preset(name);
  ConfigFile config;
  config.preset = name;
  config.cyclic = to_cyclic(preset.base);
  config.axes = preset.axes;
  return config;
}

ConfigFile parse_config_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be a JSON object");
  reject_unknown(root, top_level_keys(), "");

  ConfigFile config;
  if (root.contains("preset")) {
    if (!root["preset"].is_string()) throw ConfigError("'preset' must be a string");
    const std::string name = root["preset"].get<std::string>();
    try {
      config = preset_config(name);
    } catch (const InvalidParameter& e) {
      throw ConfigError(e.what());
    }
  } else {
    config.cyclic = to_cyclic(baseline_params());
  }

  bool has_frequency = false;
  for (const auto& key : frequency_keys()) has_frequency = has_frequency || root.contains(key);
  if (root.contains("frequencies_are_cyclic")) {
    const auto& flag = root["frequencies_are_cyclic"];
    if (!flag.is_boolean() || !flag.get<bool>())
      throw ConfigError("'frequencies_are_cyclic' must be true (frequencies are given in Hz)");
  } else if (has_frequency) {
    throw ConfigError("'frequencies_are_cyclic': true is required when frequency fields are given");
  }

  SystemParams& p = config.cyclic;
  const std::pair<const char*, Pair*> pairs[] = {
      {"delta_c", &p.delta_c}, {"delta_m", &p.delta_m},        {"kappa_c", &p.kappa_c},
      {"kappa_m", &p.kappa_m}, {"g", &p.g},                    {"lambda_opa", &p.lambda_opa},
      {"mu_sq", &p.mu_sq},     {"omega_m_abs", &p.omega_m_abs}};
  for (const auto& [key, field] : pairs)
    if (root.contains(key)) *field = pair_of(root[key], key);
  const std::pair<const char*, double*> scalars[] = {
      {"theta", &p.theta}, {"nu", &p.nu}, {"r", &p.r}, {"temperature", &p.temperature}};
  for (const auto& [key, field] : scalars)
    if (root.contains(key)) *field = number(root[key], key);
  if (root.contains("n_m_override")) {
    if (root["n_m_override"].is_null())
      p.n_m_override.reset();
    else
      p.n_m_override = pair_of(root["n_m_override"], "n_m_override");
  }
  if (root.contains("diffusion_convention")) {
    const auto& c = root["diffusion_convention"];
    const auto conv = c.is_string() ? parse_convention(c.get<std::string>()) : std::nullopt;
    if (!conv) throw ConfigError("'diffusion_convention' must be \"derived\" or \"paper\"");
    p.diffusion_convention = *conv;
  }

  if (root.contains("sweep")) {
    const auto& sweep = root["sweep"];
    if (!sweep.is_object()) throw ConfigError("'sweep' must be an object");
    reject_unknown(sweep, {"axes", "threads"}, " in sweep");
    if (sweep.contains("axes")) {
      const auto& axes = sweep["axes"];
      if (!axes.is_array() || axes.empty() || axes.size() > 2)
        throw ConfigError("sweep.axes must be an array of one or two axes");
      config.axes.clear();
      for (std::size_t k = 0; k < axes.size(); ++k) config.axes.push_back(parse_axis(axes[k], k));
    }
    if (sweep.contains("threads")) {
      if (!sweep["threads"].is_number_integer()) throw ConfigError("sweep.threads must be an integer");
      config.threads = sweep["threads"].get<int>();
    }
  }

  const auto errors = validate(config.params());
  if (!errors.empty()) {
    std::string msg = "invalid parameters:";
    for (const auto& e : errors) msg += " " + e + ";";
    throw ConfigError(msg);
  }
  return config;
}

ConfigFile parse_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string serialize_config(const ConfigFile& config) {
  const SystemParams& p = config.cyclic;
  json root;
  root["frequencies_are_cyclic"] = true;
  if (config.preset) root["preset"] = *config.preset;
  root["delta_c"] = pair_json(p.delta_c);
  root["delta_m"] = pair_json(p.delta_m);
  root["kappa_c"] = pair_json(p.kappa_c);
  root["kappa_m"] = pair_json(p.kappa_m);
  root["g"] = pair_json(p.g);
  root["lambda_opa"] = pair_json(p.lambda_opa);
  root["theta"] = p.theta;
  root["mu_sq"] = pair_json(p.mu_sq);
  root["nu"] = p.nu;
  root["r"] = p.r;
  root["temperature"] = p.temperature;
  root["omega_m_abs"] = pair_json(p.omega_m_abs);
  root["n_m_override"] = p.n_m_override ? pair_json(*p.n_m_override) : json(nullptr);
  root["diffusion_convention"] = to_string(p.diffusion_convention);
  json sweep = json::object();
  if (!config.axes.empty()) {
    json axes = json::array();
    for (const auto& a : config.axes)
      axes.push_back({{"path", a.parameter_path}, {"start", a.start}, {"stop", a.stop}, {"count", a.count}});
    sweep["axes"] = axes;
  }
  if (config.threads) sweep["threads"] = *config.threads;
  if (!sweep.empty()) root["sweep"] = sweep;
  return root.dump(2) + "\n";
}

}  // namespace magsteer
