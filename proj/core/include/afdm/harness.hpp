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

// Experiment orchestration: turns a scenario plus an experiment kind into
// plot-ready CSV files, a manifest of every setting that influenced them and
// a column schema.
//
// Files are named <kind>_<preset>_<algorithm>.csv. Kinds without a sensing
// algorithm use "lmmse" (ber_curve) or "na" (af_surface, io_check).

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "afdm/metrics.hpp"
#include "afdm/scenario.hpp"

namespace afdm {

enum class ExperimentKind { ddm, af_surface, snr_sweep, po_sweep, pd_curve, ber_curve, io_check, runtime_scaling };

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view name);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::ddm;
  Scenario scenario;
  std::vector<Preset> presets;        // empty: the scenario's presets
  std::vector<Algorithm> algorithms;  // empty: every algorithm the preset supports
  std::filesystem::path out_dir = ".";
  int trials = 100;
  std::optional<std::uint64_t> seed;  // overrides the scenario seed
  std::optional<double> snr_db;       // overrides the scenario SNR
  std::optional<double> pilot_overhead;
  std::vector<double> snr_points{0.0, 5.0, 10.0, 15.0, 20.0};
  std::vector<double> po_points{0.0, 0.25, 0.5, 0.75, 1.0};
  bool pilot_only_reference = false;
  bool redraw_data = true;
  std::vector<std::int64_t> scaling_sizes{256, 512, 1024, 2048};
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 configuration error, 2 numerical check failed
  std::string diagnostic;
  std::vector<std::filesystem::path> files;
  double check_error = 0.0;  // io_check: worst absolute deviation
};

// Never throws for configuration problems; they come back as exit code 1
// with every file written so far removed.
RunResult run(const ExperimentSpec& spec);

SensingSetup sensing_setup(const Scenario& scenario, Preset preset);

// Worst absolute deviation between io_predict and, in turn, the time-domain
// oracle, the interaction-coefficient sum and the 2D-convolution kernel, over
// random grids and path sets drawn inside the scenario's tap ranges.
struct IoCheckRow {
  int instance = 0;
  std::string form;
  double max_abs_error = 0.0;
};
std::vector<IoCheckRow> io_check(const AfdmConfig& config, const ScenarioConfig& scenario, int instances,
                                 std::uint64_t seed);

struct TimingPoint {
  std::int64_t n_c = 0;
  double seconds = 0.0;  // per call
};

// Best-of-batches wall time per map for n_p = n_c / k_chirps.
std::vector<TimingPoint> time_pipeline(Algorithm algorithm, std::span<const std::int64_t> sizes, int k_chirps = 8,
                                       double min_batch_seconds = 0.05);

// Least-squares slope of log(seconds) against log(n_c).
double loglog_slope(std::span<const TimingPoint> points);

}  // namespace afdm
