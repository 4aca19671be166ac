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

// Named scenarios and their YAML representation.
//
//   name: fig5
//   n_c: 512
//   k_chirps: 8
//   preset: proposed        # or a list under `presets:`
//   l_max: 10
//   k_max: 3
//   snr_db: 20
//   pilot_overhead: 1
//   seed: 1
//   targets:
//     - {l: 10, k: 3, power: 1.0}
//     - {l: 3, k: 0, gain_re: 0.5, gain_im: -0.2}
//
// n_c and k_chirps are required; everything else has a default. Unknown keys
// are rejected.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "afdm/channel.hpp"
#include "afdm/params.hpp"

namespace afdm {

// A path is {l, k} plus either {power, phase} (phase in radians, default 0)
// or {gain_re, gain_im}.
struct TargetSpec {
  int l = 0;
  int k = 0;  // signed Doppler tap
  cplx gain{1.0, 0.0};

  double power() const { return std::norm(gain); }
};

struct Scenario {
  std::string name = "custom";
  std::int64_t n_c = 0;
  int k_chirps = 0;
  int l_cpp = 0;
  std::vector<Preset> presets{Preset::proposed};
  ScenarioConfig params;
  std::vector<TargetSpec> targets;
  bool random_target_phase = false;
};

// Waveform for one of the scenario's presets, validated against the scenario.
AfdmConfig scenario_config(const Scenario& scenario, Preset preset);

// The scenario's paths as channel taps.
std::vector<PathTap> scenario_paths(const Scenario& scenario);

Scenario parse_scenario(std::string_view yaml_text);
std::string dump_scenario(const Scenario& scenario);

// table1, fig4, fig5, desk.
std::vector<Scenario> builtin_scenarios();

// A builtin name or a path to a YAML file.
Scenario load_scenario(const std::string& name_or_path);

}  // namespace afdm
