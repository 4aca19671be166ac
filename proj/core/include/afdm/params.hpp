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

// AFDM waveform geometry and chirp-parameter presets.
//
// A symbol of n_c samples is viewed as k_chirps periods of n_p samples.
// The time chirp c1 is always an exact rational so that phases of the form
// 2 pi c1 n^2 can be reduced modulo one without rounding; the frequency
// chirp c2 is either exact or (for the classic preset, c2 = sqrt(2)) a real
// number kept in extended precision.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "afdm/rational.hpp"
#include "afdm/types.hpp"

namespace afdm {

// `periodic` is the Z_A > 1 periodic-chirp family; it has no named preset.
enum class Preset { proposed, classic, ofdm, ocdm, periodic };

std::string_view to_string(Preset preset);
Preset parse_preset(std::string_view name);

// c2 coefficient: exact fraction or an irrational real.
class ChirpCoefficient {
 public:
  static ChirpCoefficient exact(Rational value);
  static ChirpCoefficient real(long double value);

  bool is_exact() const { return exact_; }
  bool is_zero() const { return exact_ && rational_.is_zero(); }
  const Rational& rational() const;
  long double value() const;

  // Fractional part of (c * m^2) in cycles, in [0, 1).
  double quadratic_cycles(std::int64_t m) const;

 private:
  bool exact_ = true;
  Rational rational_;
  long double real_ = 0.0L;
};

class AfdmConfig {
 public:
  std::int64_t n_c() const { return n_c_; }
  int k_chirps() const { return k_chirps_; }
  int n_p() const { return n_p_; }
  const Rational& c1() const { return c1_; }
  const ChirpCoefficient& c2() const { return c2_; }
  int l_cpp() const { return l_cpp_; }
  const std::optional<int>& z_a() const { return z_a_; }
  Preset preset() const { return preset_; }

  // True for the FMCW-equivalent choice c1 = 1/(2 n_p), c2 = 0.
  bool is_proposed() const { return preset_ == Preset::proposed; }

  // Copy with a different CPP length (validated).
  AfdmConfig with_cpp(int l_cpp) const;

  // e^{j 2 pi c1 n^2}
  cplx time_chirp(std::int64_t n) const;
  // e^{j 2 pi c2 m^2}
  cplx freq_chirp(std::int64_t m) const;
  // psi_m[n] = e^{j 2 pi (c1 n^2 + m n / n_c + c2 m^2)}
  cplx subcarrier_sample(std::int64_t m, std::int64_t n) const;

  std::string describe() const;

 private:
  friend AfdmConfig make_config(Preset, std::int64_t, int, Rational, ChirpCoefficient, int,
                                std::optional<int>);
  AfdmConfig() = default;
  void validate() const;

  std::int64_t n_c_ = 0;
  int k_chirps_ = 0;
  int n_p_ = 0;
  Rational c1_;
  ChirpCoefficient c2_;
  int l_cpp_ = 0;
  std::optional<int> z_a_;
  Preset preset_ = Preset::proposed;
};

// Validated construction; every factory below funnels through here.
AfdmConfig make_config(Preset preset, std::int64_t n_c, int k_chirps, Rational c1,
                       ChirpCoefficient c2, int l_cpp = 0, std::optional<int> z_a = std::nullopt);

// c1 = 1/(2 n_p), c2 = 0, z_a = 1. Rejects odd n_p.
AfdmConfig proposed_params(int n_p, int k_chirps);

// Periodic-chirp family c1 = z_a/(2 n_p), c2 = 0, subject to z_a n_p even.
AfdmConfig periodic_chirp_params(int n_p, int k_chirps, int z_a);

// c1 = (2 k_max + 1)/(2 n_c), c2 = sqrt(2). The (n_p, k_chirps) split only
// matters for the fast/slow-time reshaping used by the sensing pipelines.
AfdmConfig classic_params(std::int64_t n_c, int k_max, int k_chirps = 1);

AfdmConfig ofdm_params(std::int64_t n_c, int k_chirps = 1);
AfdmConfig ocdm_params(std::int64_t n_c, int k_chirps = 1);

// Dispatch by name. For `proposed` n_c must be divisible by k_chirps with an
// even quotient; k_max is only read by `classic`.
AfdmConfig make_preset(Preset preset, std::int64_t n_c, int k_chirps, int k_max = 0);

// Scenario-level quantities that are not part of the waveform itself.
struct ScenarioConfig {
  int l_max = 0;
  int k_max = 0;
  double bandwidth_hz = 7.68e6;
  double carrier_hz = 79e9;
  double subcarrier_spacing_hz = 15e3;
  double snr_db = 20.0;
  double pilot_overhead = 1.0;
  std::uint64_t rng_seed = 1;
};

// Throws ConfigError when the waveform cannot separate the scenario's paths
// (proposed: k_chirps > 2 k_max and n_p > l_max) or the CPP is too short.
void validate_scenario(const AfdmConfig& config, const ScenarioConfig& scenario);

}  // namespace afdm
