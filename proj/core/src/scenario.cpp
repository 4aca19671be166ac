// Copyright 2026 The afdm-isac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "afdm/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace afdm {

AfdmConfig scenario_config(const Scenario& scenario, Preset preset) {
  AfdmConfig config = make_preset(preset, scenario.n_c, scenario.k_chirps, scenario.params.k_max);
  if (scenario.l_cpp > 0) config = config.with_cpp(scenario.l_cpp);
  validate_scenario(config, scenario.params);
  return config;
}

std::vector<PathTap> scenario_paths(const Scenario& scenario) {
  std::vector<PathTap> paths;
  for (const TargetSpec& t : scenario.targets) paths.push_back({t.gain, t.l, t.k});
  return paths;
}

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "name",    "n_c",    "k_chirps",       "n_p",  "l_cpp",        "preset",       "presets",
      "l_max",   "k_max",  "snr_db",         "seed", "bandwidth_hz", "carrier_hz",   "subcarrier_spacing_hz",
      "targets", "pilot_overhead", "random_target_phase"};
  return keys;
}

template <typename T>
T read(const YAML::Node& node, const std::string& key) {
  try {
    return node[key].as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError("bad value for key " + key);
  }
}

}  // namespace

Scenario parse_scenario(std::string_view yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("scenario is not valid YAML: ") + e.what());
  }
  if (root.IsNull()) throw ConfigError("missing key n_c");
  if (!root.IsMap()) throw ConfigError("scenario must be a key-value map");

  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    if (!known_keys().contains(key)) throw ConfigError("unknown key " + key);
  }
  for (const char* key : {"n_c", "k_chirps"})
    if (!root[key]) throw ConfigError(std::string("missing key ") + key);

  Scenario s;
  if (root["name"]) s.name = read<std::string>(root, "name");
  s.n_c = read<std::int64_t>(root, "n_c");
  s.k_chirps = read<int>(root, "k_chirps");
  if (s.n_c <= 0 || s.k_chirps <= 0 || s.n_c % s.k_chirps != 0)
    throw ConfigError("n_c must be a positive multiple of k_chirps");
  if (root["n_p"] && read<std::int64_t>(root, "n_p") * s.k_chirps != s.n_c)
    throw ConfigError("n_p must equal n_c / k_chirps");
  if (root["l_cpp"]) s.l_cpp = read<int>(root, "l_cpp");

  if (root["preset"] && root["presets"]) throw ConfigError("give either preset or presets, not both");
  if (root["preset"]) s.presets = {parse_preset(read<std::string>(root, "preset"))};
  if (root["presets"]) {
    s.presets.clear();
    for (const auto& p : root["presets"]) s.presets.push_back(parse_preset(p.as<std::string>()));
    if (s.presets.empty()) throw ConfigError("presets must not be empty");
  }

  ScenarioConfig& c = s.params;
  if (root["l_max"]) c.l_max = read<int>(root, "l_max");
  if (root["k_max"]) c.k_max = read<int>(root, "k_max");
  if (root["snr_db"]) c.snr_db = read<double>(root, "snr_db");
  if (root["pilot_overhead"]) c.pilot_overhead = read<double>(root, "pilot_overhead");
  if (root["seed"]) c.rng_seed = read<std::uint64_t>(root, "seed");
  if (root["bandwidth_hz"]) c.bandwidth_hz = read<double>(root, "bandwidth_hz");
  if (root["carrier_hz"]) c.carrier_hz = read<double>(root, "carrier_hz");
  if (root["subcarrier_spacing_hz"]) c.subcarrier_spacing_hz = read<double>(root, "subcarrier_spacing_hz");
  if (root["random_target_phase"]) s.random_target_phase = read<bool>(root, "random_target_phase");

  if (root["targets"]) {
    for (const auto& t : root["targets"]) {
      static const std::set<std::string> target_keys{"l", "k", "power", "phase", "gain_re", "gain_im"};
      for (const auto& kv : t) {
        const auto key = kv.first.as<std::string>();
        if (!target_keys.contains(key)) throw ConfigError("unknown target key " + key);
      }
      if (!t["l"] || !t["k"]) throw ConfigError("target needs l and k");
      const bool polar = t["power"] || t["phase"];
      const bool cartesian = t["gain_re"] || t["gain_im"];
      if (polar && cartesian) throw ConfigError("give a target gain as power/phase or gain_re/gain_im, not both");
      TargetSpec spec{read<int>(t, "l"), read<int>(t, "k")};
      if (cartesian) {
        spec.gain = {t["gain_re"] ? read<double>(t, "gain_re") : 0.0, t["gain_im"] ? read<double>(t, "gain_im") : 0.0};
      } else {
        const double power = t["power"] ? read<double>(t, "power") : 1.0;
        if (!(power >= 0.0)) throw ConfigError("target power must be non-negative");
        spec.gain = std::polar(std::sqrt(power), t["phase"] ? read<double>(t, "phase") : 0.0);
      }
      s.targets.push_back(spec);
    }
  }

  for (Preset p : s.presets) scenario_config(s, p);
  return s;
}

std::string dump_scenario(const Scenario& s) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << s.name;
  out << YAML::Key << "n_c" << YAML::Value << s.n_c;
  out << YAML::Key << "k_chirps" << YAML::Value << s.k_chirps;
  out << YAML::Key << "n_p" << YAML::Value << s.n_c / s.k_chirps;
  out << YAML::Key << "l_cpp" << YAML::Value << s.l_cpp;
  out << YAML::Key << "presets" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (Preset p : s.presets) out << std::string(to_string(p));
  out << YAML::EndSeq;
  out << YAML::Key << "l_max" << YAML::Value << s.params.l_max;
  out << YAML::Key << "k_max" << YAML::Value << s.params.k_max;
  out << YAML::Key << "snr_db" << YAML::Value << s.params.snr_db;
  out << YAML::Key << "pilot_overhead" << YAML::Value << s.params.pilot_overhead;
  out << YAML::Key << "seed" << YAML::Value << s.params.rng_seed;
  out << YAML::Key << "bandwidth_hz" << YAML::Value << s.params.bandwidth_hz;
  out << YAML::Key << "carrier_hz" << YAML::Value << s.params.carrier_hz;
  out << YAML::Key << "subcarrier_spacing_hz" << YAML::Value << s.params.subcarrier_spacing_hz;
  out << YAML::Key << "random_target_phase" << YAML::Value << s.random_target_phase;
  out << YAML::Key << "targets" << YAML::Value << YAML::BeginSeq;
  for (const TargetSpec& t : s.targets)
    out << YAML::Flow << YAML::BeginMap << YAML::Key << "l" << YAML::Value << t.l << YAML::Key << "k" << YAML::Value
        << t.k << YAML::Key << "gain_re" << YAML::Value << t.gain.real() << YAML::Key << "gain_im" << YAML::Value
        << t.gain.imag() << YAML::EndMap;
  out << YAML::EndSeq;
  out << YAML::EndMap;
  return out.c_str();
}

std::vector<Scenario> builtin_scenarios() {
  Scenario table1;
  table1.name = "table1";
  table1.n_c = 512;
  table1.k_chirps = 8;
  table1.presets = {Preset::proposed, Preset::classic};
  table1.params.l_max = 10;
  table1.params.k_max = 3;
  table1.targets = {{10, 3, 1.0}};

  Scenario fig4 = table1;
  fig4.name = "fig4";
  fig4.targets = {{3, 0, std::sqrt(0.6)}, {7, 2, std::sqrt(0.3)}, {10, 3, std::sqrt(0.1)}};
  fig4.random_target_phase = true;

  Scenario fig5 = table1;
  fig5.name = "fig5";
  fig5.targets = {{10, 3, 1.0}};

  Scenario desk;
  desk.name = "desk";
  desk.n_c = 32;
  desk.k_chirps = 4;
  desk.presets = {Preset::proposed, Preset::classic};
  desk.params.l_max = 3;
  desk.params.k_max = 1;
  desk.targets = {{3, 1, 1.0}};

  return {table1, fig4, fig5, desk};
}

Scenario load_scenario(const std::string& name_or_path) {
  for (const Scenario& s : builtin_scenarios())
    if (s.name == name_or_path) return s;
  std::ifstream in(name_or_path);
  if (!in) throw ConfigError("no builtin scenario or readable file named '" + name_or_path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  Scenario s = parse_scenario(text.str());
  if (s.name == "custom") s.name = std::filesystem::path(name_or_path).stem().string();
  return s;
}

}  // namespace afdm
