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

// Pilot frames, sensing-quality metrics, Monte-Carlo drivers and LMMSE
// detection for the communication side.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "afdm/channel.hpp"
#include "afdm/sensing.hpp"

namespace afdm {

// Returned by pslr_db / image_snr_db when the comparison set is all zero.
inline constexpr double kMetricSentinelDb = 300.0;

// Pilot at m = 0, Q zero guards on each cyclic side, unit-power 4QAM data
// elsewhere. Q may reach n_c/2, at which point pilot and guards fill the
// whole symbol.
struct FrameSpec {
  bool has_pilot = true;
  int q_guard = 0;
  // Defaults to the energy released by the pilot slot and its guards, so the
  // data cells keep unit power. An explicit value rescales the data cells to
  // keep the symbol energy at n_c.
  std::optional<double> pilot_power;

  // PO <= 0 gives an all-data frame; otherwise Q = round((PO n_c - 1)/2),
  // clamped to [0, n_c/2].
  static FrameSpec from_overhead(std::int64_t n_c, double pilot_overhead);

  std::int64_t occupied(std::int64_t n_c) const;  // pilot + distinct guard cells
  double overhead(std::int64_t n_c) const { return static_cast<double>(occupied(n_c)) / static_cast<double>(n_c); }
};

// Gray-coded unit-energy 4QAM: bit 0 -> I sign, bit 1 -> Q sign.
cplx qam4_map(std::uint8_t b0, std::uint8_t b1);
void qam4_demap(cplx symbol, std::uint8_t& b0, std::uint8_t& b1);

struct Frame {
  DaftSymbols symbols;
  DaftSymbols pilot;                // symbols with the data cells zeroed
  std::vector<std::uint8_t> bits;   // two per data cell, in subcarrier order
  std::vector<std::int64_t> data_cells;
};

Frame build_frame(const AfdmConfig& config, const FrameSpec& spec, Rng& rng);

// 20 log10(|z_target| / max_{other} |z|).
double pslr_db(const DelayDopplerMap& map, DdIndex target);
// 10 log10(|z_target|^2 / mean |z|^2 outside the +-1 ring around target).
double image_snr_db(const DelayDopplerMap& map, DdIndex target);

struct SensingSetup {
  AfdmConfig config;
  std::vector<PathTap> targets;  // the first one is scored for PSLR / image SNR / Pd
  double snr_db = 20.0;
  double pilot_overhead = 1.0;
  bool pilot_only_reference = false;  // TFMF reference: pilot only instead of the full transmit signal
  bool redraw_data = true;
  bool random_target_phase = false;   // rotate every target gain by a fresh uniform phase per trial
  CfarParams cfar;
};

struct TrialMetrics {
  double pslr_db = 0.0;
  double image_snr_db = 0.0;
  std::vector<bool> hits;  // per target, clustered CFAR detection within +-1 cell
};

// One noisy realization: frame, channel, AWGN, pipeline. Draw order is fixed
// (data, target phases, noise) so the same (seed, trial) gives the same
// randomness to every preset and algorithm.
DelayDopplerMap sense_once(const SensingSetup& setup, Algorithm algorithm, std::uint64_t seed, std::uint64_t trial);

TrialMetrics score_map(const SensingSetup& setup, const DelayDopplerMap& map);

struct MetricReport {
  double pslr_db = 0.0;
  double pslr_se = 0.0;
  double image_snr_db = 0.0;
  double image_snr_se = 0.0;
  double pd = 0.0;  // first target
  double pd_se = 0.0;
  std::vector<double> pd_per_target;
  double ber = 0.0;
  double ber_se = 0.0;
  std::int64_t trials = 0;
};

struct SensingRun {
  MetricReport report;
  std::vector<TrialMetrics> samples;
};

SensingRun monte_carlo_sensing(const SensingSetup& setup, Algorithm algorithm, int trials, std::uint64_t seed);
double monte_carlo_pd(const SensingSetup& setup, Algorithm algorithm, int trials, std::uint64_t seed);

using SparseCMatrix = Eigen::SparseMatrix<cplx>;
using CVector = Eigen::VectorXcd;

// Column m = demodulate(apply_channel(modulate(e_m))). Entries below 1e-12
// of the column peak are dropped.
SparseCMatrix build_effective_channel(const AfdmConfig& config, std::span<const PathTap> paths);

// x = H^H (H H^H + noise_var I)^{-1} y. Empty when the system is singular.
std::optional<CVector> lmmse_detect(const SparseCMatrix& h, const CVector& y, double noise_var);
std::optional<CVector> lmmse_detect(const Eigen::MatrixXcd& h, const CVector& y, double noise_var);

std::int64_t bit_errors(const CVector& estimate, const Frame& frame);
double ber(const CVector& estimate, const Frame& frame);

// Tap position and mean power of one Rayleigh path.
struct PathProfile {
  int delay_tap = 0;
  int doppler_tap = 0;
  double power = 1.0;
};

struct BerComparison {
  std::vector<std::int64_t> bit_errors;  // per config
  std::vector<std::int64_t> failures;    // singular solves, counted as all bits wrong
  std::int64_t bits = 0;                 // per config
  std::int64_t symbols = 0;

  double ber(std::size_t i) const { return bits ? static_cast<double>(bit_errors[i]) / bits : 0.0; }
};

// All-data frames, h_i = sqrt(p_i) CN(0, 1), AWGN at snr_db, LMMSE. Every
// config sees the same bits, gains and time-domain noise in each trial.
BerComparison monte_carlo_ber(std::span<const AfdmConfig> configs, std::span<const PathProfile> paths, double snr_db,
                              int symbols, std::uint64_t seed);

}  // namespace afdm
