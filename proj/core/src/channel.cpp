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

#include "afdm/channel.hpp"

#include <cmath>
#include <limits>

namespace afdm {

Rng trial_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), 0x41464d44u};
  return Rng(seq);
}

cplx complex_gaussian(Rng& rng, double variance) {
  std::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

PathTap quantize_delay_doppler(double delay_s, double doppler_hz, double bandwidth_hz, double duration_s, cplx gain) {
  if (!(bandwidth_hz > 0.0) || !(duration_s > 0.0)) throw ConfigError("bandwidth and duration must be positive");
  PathTap tap;
  tap.gain = gain;
  tap.delay_tap = static_cast<int>(std::lround(bandwidth_hz * delay_s));
  tap.doppler_tap = static_cast<int>(std::lround(duration_s * doppler_hz));
  return tap;
}

PathTap quantize_path(const PhysicalPath& path, double bandwidth_hz, double duration_s, double carrier_hz) {
  if (path.range_m < 0.0) throw ConfigError("range must be non-negative");
  const double tau = 2.0 * path.range_m / kSpeedOfLight;
  const double nu = 2.0 * path.radial_velocity_mps * carrier_hz / kSpeedOfLight;
  return quantize_delay_doppler(tau, nu, bandwidth_hz, duration_s, path.gain);
}

TimeSignal apply_channel(const AfdmConfig& config, const TimeSignal& s, std::span<const PathTap> paths) {
  const std::int64_t n_c = config.n_c();
  if (s.has_cpp) throw ConfigError("apply_channel: expects a CPP-free symbol");
  if (static_cast<std::int64_t>(s.samples.size()) != n_c) throw ConfigError("apply_channel: length mismatch");
  TimeSignal r;
  r.samples.assign(n_c, cplx{});
  for (const PathTap& p : paths) {
    for (std::int64_t n = 0; n < n_c; ++n) {
      r.samples[n] += p.gain * s.samples[mod(n - p.delay_tap, n_c)] * unit_phasor(-p.doppler_tap * n, n_c);
    }
  }
  return r;
}

TimeSignal apply_linear_channel(const AfdmConfig& config, const TimeSignal& s_with_cpp,
                                std::span<const PathTap> paths) {
  const std::int64_t n_c = config.n_c();
  const std::int64_t len = config.l_cpp();
  if (!s_with_cpp.has_cpp) throw ConfigError("apply_linear_channel: expects a CPP-carrying block");
  if (static_cast<std::int64_t>(s_with_cpp.samples.size()) != n_c + len)
    throw ConfigError("apply_linear_channel: length mismatch");
  TimeSignal r;
  r.has_cpp = true;
  r.samples.assign(n_c + len, cplx{});
  for (const PathTap& p : paths) {
    if (p.delay_tap < 0) throw ConfigError("apply_linear_channel: negative delay");
    for (std::int64_t j = p.delay_tap; j < n_c + len; ++j) {
      r.samples[j] += p.gain * s_with_cpp.samples[j - p.delay_tap] * unit_phasor(-p.doppler_tap * (j - len), n_c);
    }
  }
  return r;
}

double noise_variance(double snr_db) {
  if (std::isinf(snr_db) && snr_db > 0) return 0.0;
  if (!std::isfinite(snr_db)) throw ConfigError("snr_db must be finite or +inf");
  return std::pow(10.0, -snr_db / 10.0);
}

TimeSignal add_awgn(const TimeSignal& r, double snr_db, Rng& rng) {
  const double var = noise_variance(snr_db);
  TimeSignal out = r;
  if (var == 0.0) return out;
  for (cplx& v : out.samples) v += complex_gaussian(rng, var);
  return out;
}

}  // namespace afdm
