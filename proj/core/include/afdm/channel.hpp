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

// Discrete delay-Doppler channel: tap quantization, cyclic and physical
// (linear) propagation, AWGN.

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "afdm/params.hpp"
#include "afdm/waveform.hpp"

namespace afdm {

inline constexpr double kSpeedOfLight = 299'792'458.0;

using Rng = std::mt19937_64;

// Independent, reproducible stream for (seed, stream) pairs. Monte-Carlo
// trials draw from trial_rng(seed, trial_index) so results do not depend on
// evaluation order.
Rng trial_rng(std::uint64_t seed, std::uint64_t stream);

// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
cplx complex_gaussian(Rng& rng, double variance);

struct PathTap {
  cplx gain{1.0, 0.0};
  int delay_tap = 0;
  int doppler_tap = 0;  // signed
};

struct PhysicalPath {
  double range_m = 0.0;  // one-way
  double radial_velocity_mps = 0.0;
  cplx gain{1.0, 0.0};
};

// l = round(B tau), k = round(T nu).
PathTap quantize_delay_doppler(double delay_s, double doppler_hz, double bandwidth_hz, double duration_s,
                               cplx gain = {1.0, 0.0});

// Round-trip tau = 2R/c, nu = 2 v f_c / c, then quantize_delay_doppler().
PathTap quantize_path(const PhysicalPath& path, double bandwidth_hz, double duration_s, double carrier_hz);

// r[n] = sum_i h_i s[(n - l_i) mod n_c] e^{-j 2 pi k_i n / n_c}. Noise-free.
TimeSignal apply_channel(const AfdmConfig& config, const TimeSignal& s, std::span<const PathTap> paths);

// Physical propagation of a CPP-carrying block: linear (non-cyclic) delay over
// the n_c + l_cpp samples, nothing arriving before the block starts, Doppler
// phase referenced to the post-CPP sample index. Output keeps the CPP.
TimeSignal apply_linear_channel(const AfdmConfig& config, const TimeSignal& s_with_cpp,
                                std::span<const PathTap> paths);

// Noise variance for unit transmit power: 10^{-snr_db/10}. Zero for +inf.
double noise_variance(double snr_db);

// Adds CN(0, noise_variance(snr_db)) per sample. snr_db = +inf is a no-op.
TimeSignal add_awgn(const TimeSignal& r, double snr_db, Rng& rng);

}  // namespace afdm
