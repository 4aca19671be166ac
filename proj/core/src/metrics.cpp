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

#include "afdm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/LU>
#include <Eigen/SparseCholesky>

#include "afdm/dd_daft.hpp"

namespace afdm {

namespace {

// Uniform in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Stream index reserved for data symbols that stay fixed across trials.
constexpr std::uint64_t kFixedDataStream = ~std::uint64_t{0};

}  // namespace

FrameSpec FrameSpec::from_overhead(std::int64_t n_c, double pilot_overhead) {
  if (!(pilot_overhead >= 0.0 && pilot_overhead <= 1.0)) throw ConfigError("pilot overhead must lie in [0, 1]");
  FrameSpec spec;
  if (pilot_overhead <= 0.0) {
    spec.has_pilot = false;
    return spec;
  }
  const double q = std::round((pilot_overhead * static_cast<double>(n_c) - 1.0) / 2.0);
  spec.q_guard = static_cast<int>(std::clamp(q, 0.0, static_cast<double>(n_c / 2)));
  return spec;
}

std::int64_t FrameSpec::occupied(std::int64_t n_c) const {
  if (!has_pilot) return 0;
  return std::min<std::int64_t>(2LL * q_guard + 1, n_c);
}

cplx qam4_map(std::uint8_t b0, std::uint8_t b1) {
  constexpr double a = 0.70710678118654752440;
  return {b0 ? -a : a, b1 ? -a : a};
}

void qam4_demap(cplx symbol, std::uint8_t& b0, std::uint8_t& b1) {
  b0 = symbol.real() < 0.0 ? 1 : 0;
  b1 = symbol.imag() < 0.0 ? 1 : 0;
}

Frame build_frame(const AfdmConfig& config, const FrameSpec& spec, Rng& rng) {
  const std::int64_t n_c = config.n_c();
  if (spec.has_pilot && (spec.q_guard < 0 || spec.q_guard > n_c / 2))
    throw ConfigError("guard count Q=" + std::to_string(spec.q_guard) + " outside [0, n_c/2]");

  std::vector<bool> taken(static_cast<std::size_t>(n_c), false);
  if (spec.has_pilot)
    for (std::int64_t d = -spec.q_guard; d <= spec.q_guard; ++d) taken[mod(d, n_c)] = true;

  Frame frame;
  for (std::int64_t m = 0; m < n_c; ++m)
    if (!taken[m]) frame.data_cells.push_back(m);
  const auto n_data = static_cast<std::int64_t>(frame.data_cells.size());

  double data_amp = 1.0;
  double pilot_power = static_cast<double>(spec.occupied(n_c));
  if (spec.has_pilot && spec.pilot_power) {
    pilot_power = *spec.pilot_power;
    if (!(pilot_power > 0.0 && pilot_power <= static_cast<double>(n_c)))
      throw ConfigError("pilot power must lie in (0, n_c]");
    if (n_data == 0) {
      if (std::abs(pilot_power - static_cast<double>(n_c)) > 1e-9)
        throw ConfigError("pilot and guards cover the whole symbol; data power cannot absorb the remaining energy");
    } else {
      data_amp = std::sqrt((static_cast<double>(n_c) - pilot_power) / static_cast<double>(n_data));
    }
  }

  frame.symbols.values.assign(static_cast<std::size_t>(n_c), cplx{});
  frame.pilot.values.assign(static_cast<std::size_t>(n_c), cplx{});
  if (spec.has_pilot) {
    frame.symbols.values[0] = std::sqrt(pilot_power);
    frame.pilot.values[0] = frame.symbols.values[0];
  }
  frame.bits.reserve(2 * frame.data_cells.size());
  for (std::int64_t m : frame.data_cells) {
    const std::uint64_t u = rng();
    const auto b0 = static_cast<std::uint8_t>(u & 1U);
    const auto b1 = static_cast<std::uint8_t>((u >> 1) & 1U);
    frame.bits.push_back(b0);
    frame.bits.push_back(b1);
    frame.symbols.values[m] = data_amp * qam4_map(b0, b1);
  }
  return frame;
}

namespace {

DdIndex wrap(const DelayDopplerMap& map, DdIndex target) {
  if (target.l < 0 || target.l >= map.n_p() || target.k < 0 || target.k >= map.k_chirps())
    throw ConfigError("target outside the map");
  return target;
}

DdIndex target_cell(const PathTap& p, int n_p, int k_chirps) {
  return {static_cast<int>(mod(p.delay_tap, n_p)), static_cast<int>(mod(p.doppler_tap, k_chirps))};
}

double to_db(double ratio, double scale) {
  if (ratio == std::numeric_limits<double>::infinity()) return kMetricSentinelDb;
  return scale * std::log10(ratio);
}

}  // namespace

double pslr_db(const DelayDopplerMap& map, DdIndex target) {
  wrap(map, target);
  double side = 0.0;
  for (int l = 0; l < map.n_p(); ++l)
    for (int k = 0; k < map.k_chirps(); ++k)
      if (l != target.l || k != target.k) side = std::max(side, std::abs(map(l, k)));
  if (side == 0.0) return kMetricSentinelDb;
  return to_db(std::abs(map(target.l, target.k)) / side, 20.0);
}

double image_snr_db(const DelayDopplerMap& map, DdIndex target) {
  wrap(map, target);
  const int n_p = map.n_p();
  const int big_k = map.k_chirps();
  std::vector<bool> ring(static_cast<std::size_t>(n_p) * big_k, false);
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b) ring[mod(target.l + a, n_p) * big_k + mod(target.k + b, big_k)] = true;
  double sum = 0.0;
  std::int64_t count = 0;
  for (int l = 0; l < n_p; ++l)
    for (int k = 0; k < big_k; ++k)
      if (!ring[static_cast<std::size_t>(l) * big_k + k]) {
        sum += std::norm(map(l, k));
        ++count;
      }
  if (count == 0) throw ConfigError("map too small to exclude the +-1 ring around the target");
  if (sum == 0.0) return kMetricSentinelDb;
  return to_db(std::norm(map(target.l, target.k)) / (sum / static_cast<double>(count)), 10.0);
}

DelayDopplerMap sense_once(const SensingSetup& setup, Algorithm algorithm, std::uint64_t seed, std::uint64_t trial) {
  const AfdmConfig& config = setup.config;
  if (setup.targets.empty()) throw ConfigError("sensing needs at least one target");
  if (algorithm == Algorithm::ddmf && !config.is_proposed()) throw ConfigError("ddmf requires the proposed preset");

  Rng rng = trial_rng(seed, trial);
  const FrameSpec spec = FrameSpec::from_overhead(config.n_c(), setup.pilot_overhead);
  Frame frame;
  if (setup.redraw_data) {
    frame = build_frame(config, spec, rng);
  } else {
    Rng fixed = trial_rng(seed, kFixedDataStream);
    frame = build_frame(config, spec, fixed);
  }

  std::vector<PathTap> targets = setup.targets;
  if (setup.random_target_phase)
    for (PathTap& t : targets) t.gain *= unit_phasor(uniform01(rng));

  const TimeSignal s = modulate(config, frame.symbols);
  const TimeSignal r = add_awgn(apply_channel(config, s, targets), setup.snr_db, rng);

  const auto pilot_signal = [&] { return spec.has_pilot ? modulate(config, frame.pilot) : subcarrier(config, 0); };
  switch (algorithm) {
    case Algorithm::tfmf: return tfmf(config, r, setup.pilot_only_reference ? pilot_signal() : s);
    case Algorithm::dechirp: return dechirp(config, r, pilot_signal());
    case Algorithm::ddmf:
      return ddmf(config, vector_to_grid(config, demodulate(config, r)), vector_to_grid(config, frame.symbols));
  }
  throw ConfigError("unknown algorithm");
}

TrialMetrics score_map(const SensingSetup& setup, const DelayDopplerMap& map) {
  const int n_p = map.n_p();
  const int big_k = map.k_chirps();
  const DdIndex primary = target_cell(setup.targets.front(), n_p, big_k);
  TrialMetrics out;
  out.pslr_db = pslr_db(map, primary);
  out.image_snr_db = image_snr_db(map, primary);
  const std::vector<Detection> detections = ca_cfar_2d(map, setup.cfar);
  for (const PathTap& t : setup.targets)
    out.hits.push_back(detected_near(detections, target_cell(t, n_p, big_k), n_p, big_k));
  return out;
}

namespace {

void mean_and_se(const std::vector<double>& v, double& mean, double& se) {
  const auto n = static_cast<double>(v.size());
  double s = 0.0;
  for (double x : v) s += x;
  mean = s / n;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  se = v.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
}

}  // namespace

SensingRun monte_carlo_sensing(const SensingSetup& setup, Algorithm algorithm, int trials, std::uint64_t seed) {
  if (trials < 1) throw ConfigError("trials must be at least 1");
  SensingRun run;
  run.samples.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t)
    run.samples.push_back(score_map(setup, sense_once(setup, algorithm, seed, static_cast<std::uint64_t>(t))));

  std::vector<double> pslr, isnr;
  std::vector<std::int64_t> hits(setup.targets.size(), 0);
  for (const TrialMetrics& m : run.samples) {
    pslr.push_back(m.pslr_db);
    isnr.push_back(m.image_snr_db);
    for (std::size_t i = 0; i < hits.size(); ++i) hits[i] += m.hits[i] ? 1 : 0;
  }
  MetricReport& rep = run.report;
  rep.trials = trials;
  mean_and_se(pslr, rep.pslr_db, rep.pslr_se);
  mean_and_se(isnr, rep.image_snr_db, rep.image_snr_se);
  for (std::int64_t h : hits) rep.pd_per_target.push_back(static_cast<double>(h) / trials);
  rep.pd = rep.pd_per_target.front();
  rep.pd_se = std::sqrt(rep.pd * (1.0 - rep.pd) / trials);
  return run;
}

double monte_carlo_pd(const SensingSetup& setup, Algorithm algorithm, int trials, std::uint64_t seed) {
  return monte_carlo_sensing(setup, algorithm, trials, seed).report.pd;
}

SparseCMatrix build_effective_channel(const AfdmConfig& config, std::span<const PathTap> paths) {
  const std::int64_t n_c = config.n_c();
  std::vector<Eigen::Triplet<cplx>> entries;
  DaftSymbols e;
  e.values.assign(static_cast<std::size_t>(n_c), cplx{});
  for (std::int64_t m = 0; m < n_c; ++m) {
    e.values[m] = 1.0;
    const DaftSymbols col = demodulate(config, apply_channel(config, modulate(config, e), paths));
    e.values[m] = 0.0;
    double peak = 0.0;
    for (const cplx& v : col.values) peak = std::max(peak, std::abs(v));
    const double floor = 1e-12 * peak;
    for (std::int64_t row = 0; row < n_c; ++row)
      if (peak > 0.0 && std::abs(col.values[row]) > floor)
        entries.emplace_back(static_cast<int>(row), static_cast<int>(m), col.values[row]);
  }
  SparseCMatrix h(n_c, n_c);
  h.setFromTriplets(entries.begin(), entries.end());
  return h;
}

std::optional<CVector> lmmse_detect(const SparseCMatrix& h, const CVector& y, double noise_var) {
  if (noise_var < 0.0) throw ConfigError("noise variance must be non-negative");
  if (h.rows() != y.size()) throw ConfigError("lmmse_detect: dimension mismatch");
  const SparseCMatrix hh = h.adjoint();
  SparseCMatrix a = h * hh;
  SparseCMatrix reg(h.rows(), h.rows());
  reg.setIdentity();
  a += noise_var * reg;

  Eigen::SimplicialLDLT<SparseCMatrix> solver(a);
  if (solver.info() != Eigen::Success) return std::nullopt;
  const Eigen::VectorXd d = solver.vectorD().real();
  const double dmax = d.cwiseAbs().maxCoeff();
  if (!(dmax > 0.0) || d.minCoeff() <= 1e-13 * dmax) return std::nullopt;
  const CVector z = solver.solve(y);
  if (solver.info() != Eigen::Success || !z.allFinite()) return std::nullopt;
  return CVector(hh * z);
}

std::optional<CVector> lmmse_detect(const Eigen::MatrixXcd& h, const CVector& y, double noise_var) {
  if (noise_var < 0.0) throw ConfigError("noise variance must be non-negative");
  if (h.rows() != y.size()) throw ConfigError("lmmse_detect: dimension mismatch");
  const Eigen::MatrixXcd a =
      h * h.adjoint() + noise_var * Eigen::MatrixXcd::Identity(h.rows(), h.rows());
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(a);
  if (lu.rank() < a.rows()) return std::nullopt;
  const CVector z = lu.solve(y);
  if (!z.allFinite()) return std::nullopt;
  return CVector(h.adjoint() * z);
}

std::int64_t bit_errors(const CVector& estimate, const Frame& frame) {
  std::int64_t errors = 0;
  for (std::size_t i = 0; i < frame.data_cells.size(); ++i) {
    std::uint8_t b0 = 0, b1 = 0;
    qam4_demap(estimate[frame.data_cells[i]], b0, b1);
    errors += (b0 != frame.bits[2 * i]) + (b1 != frame.bits[2 * i + 1]);
  }
  return errors;
}

double ber(const CVector& estimate, const Frame& frame) {
  if (frame.bits.empty()) return 0.0;
  return static_cast<double>(bit_errors(estimate, frame)) / static_cast<double>(frame.bits.size());
}

BerComparison monte_carlo_ber(std::span<const AfdmConfig> configs, std::span<const PathProfile> paths, double snr_db,
                              int symbols, std::uint64_t seed) {
  if (configs.empty()) throw ConfigError("monte_carlo_ber needs at least one config");
  if (symbols < 1) throw ConfigError("symbols must be at least 1");
  const std::int64_t n_c = configs.front().n_c();
  for (const AfdmConfig& c : configs)
    if (c.n_c() != n_c) throw ConfigError("monte_carlo_ber: configs must share n_c");

  // Per-path unit-gain channels; each trial only re-weights them.
  std::vector<std::vector<SparseCMatrix>> unit(configs.size());
  for (std::size_t c = 0; c < configs.size(); ++c)
    for (const PathProfile& p : paths) {
      const PathTap tap{1.0, p.delay_tap, p.doppler_tap};
      unit[c].push_back(build_effective_channel(configs[c], std::span(&tap, 1)));
    }

  const double noise_var = noise_variance(snr_db);
  const FrameSpec all_data = FrameSpec::from_overhead(n_c, 0.0);
  BerComparison out;
  out.bit_errors.assign(configs.size(), 0);
  out.failures.assign(configs.size(), 0);
  out.symbols = symbols;

  for (int t = 0; t < symbols; ++t) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const Frame frame = build_frame(configs.front(), all_data, rng);
    std::vector<PathTap> taps;
    for (const PathProfile& p : paths)
      taps.push_back({std::sqrt(p.power) * complex_gaussian(rng, 1.0), p.delay_tap, p.doppler_tap});
    CVec noise(static_cast<std::size_t>(n_c));
    for (cplx& w : noise) w = complex_gaussian(rng, noise_var);
    out.bits += static_cast<std::int64_t>(frame.bits.size());

    for (std::size_t c = 0; c < configs.size(); ++c) {
      SparseCMatrix h(n_c, n_c);
      for (std::size_t i = 0; i < taps.size(); ++i) h += taps[i].gain * unit[c][i];
      TimeSignal r = apply_channel(configs[c], modulate(configs[c], frame.symbols), taps);
      for (std::size_t n = 0; n < noise.size(); ++n) r.samples[n] += noise[n];
      const DaftSymbols y = demodulate(configs[c], r);
      const auto estimate = lmmse_detect(h, Eigen::Map<const CVector>(y.values.data(), n_c), noise_var);
      if (!estimate) {
        ++out.failures[c];
        out.bit_errors[c] += static_cast<std::int64_t>(frame.bits.size());
        continue;
      }
      out.bit_errors[c] += bit_errors(*estimate, frame);
    }
  }
  return out;
}

}  // namespace afdm
