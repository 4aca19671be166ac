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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "afdm/ambiguity.hpp"
#include "afdm/dd_daft.hpp"
#include "afdm/harness.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using afdm::Algorithm;
using afdm::cplx;
using afdm::CVec;
using afdm::DdIndex;
using afdm::PathTap;
using afdm::Preset;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Paired comparison: mean(a - b) and its standard error.
struct Paired {
  double mean = 0.0;
  double se = 0.0;
};

Paired paired(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  double s = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d;
    s2 += d * d;
  }
  const double mean = s / static_cast<double>(n);
  const double var = n > 1 ? (s2 - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1) : 0.0;
  return {mean, std::sqrt(std::max(var, 0.0) / static_cast<double>(n))};
}

afdm::TimeSignal oracle_subcarrier(const afdm::AfdmConfig& cfg, std::int64_t m) {
  const auto ch = oracle::chirps_of(cfg);
  afdm::TimeSignal s{CVec(static_cast<std::size_t>(cfg.n_c())), false};
  for (std::int64_t n = 0; n < cfg.n_c(); ++n) s.samples[n] = oracle::psi(ch, m, n);
  return s;
}

Verdict fmcw_equivalence() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (auto [n_p, k] : {std::pair{8, 4}, std::pair{64, 8}}) {
    const auto cfg = afdm::proposed_params(n_p, k);
    worst = std::max(worst, oracle::max_abs_diff(afdm::subcarrier(cfg, 0).samples, afdm::fmcw_signal(n_p, k).samples));
  }
  const double t = seconds_since(t0);
  return {worst < 1e-12 && t < 1.0, fmt("max error %.3g, %.3f s", worst, t)};
}

Verdict orthogonality() {
  const auto t0 = Clock::now();
  const std::vector<afdm::AfdmConfig> configs{afdm::proposed_params(64, 8), afdm::classic_params(512, 3, 8),
                                              afdm::ofdm_params(512), afdm::ocdm_params(512)};
  double worst = 0.0;
  afdm::Rng rng = afdm::trial_rng(2024, 2);
  std::uniform_int_distribution<std::int64_t> pick(0, 511);
  std::bernoulli_distribution same(0.25);
  for (const auto& cfg : configs)
    for (int pair = 0; pair < 200; ++pair) {
      const std::int64_t m = pick(rng);
      const std::int64_t mp = same(rng) ? m : pick(rng);
      const auto a = afdm::subcarrier(cfg, m);
      const auto b = afdm::subcarrier(cfg, mp);
      cplx ip{};
      for (std::size_t n = 0; n < a.samples.size(); ++n) ip += a.samples[n] * std::conj(b.samples[n]);
      worst = std::max(worst, std::abs(ip - cplx(m == mp ? 512.0 : 0.0, 0.0)) / 512.0);
    }
  const double t = seconds_since(t0);
  return {worst < 1e-9 && t < 5.0, fmt("max |<psi_m,psi_m'> - n_c delta| / n_c = %.3g over 800 pairs, %.2f s", worst, t)};
}

Verdict echo_form() {
  double worst = 0.0;
  int cases = 0;
  for (int n_p = 2; n_p <= 64; n_p += 2)
    for (int k = 1; n_p * k <= 64; ++k) {
      const auto cfg = afdm::proposed_params(n_p, k);
      const auto base = oracle_subcarrier(cfg, 0);
      const std::int64_t n_c = cfg.n_c();
      for (int l = 0; l < n_p; ++l)
        for (int q = 0; q < k; ++q) {
          const std::int64_t m = afdm::dd_to_daft_index(cfg, {l, q});
          const auto sub = afdm::subcarrier(cfg, m);
          // psi_0 delayed by l, Doppler-rotated by q, with the constant e^{-j pi l^2 / n_p}.
          CVec echo(static_cast<std::size_t>(n_c));
          for (std::int64_t n = 0; n < n_c; ++n)
            echo[n] = base.samples[afdm::mod(n - l, n_c)] *
                      oracle::phasor(-static_cast<long double>(l) * l / (2.0L * n_p) -
                                     static_cast<long double>(afdm::mod(static_cast<std::int64_t>(q) * n, n_c)) / n_c);
          worst = std::max(worst, oracle::max_abs_diff(sub.samples, echo));
          worst = std::max(worst, oracle::max_abs_diff(sub.samples, afdm::echo_form_subcarrier(cfg, {l, q}).samples));
          ++cases;
        }
    }
  return {worst < 1e-10, fmt("%d (config, l, k) cases, max error %.3g", cases, worst)};
}

Verdict dpaf_closed_form() {
  const auto t0 = Clock::now();
  const auto cfg = afdm::proposed_params(8, 4);
  const std::int64_t n_c = cfg.n_c();
  std::vector<afdm::TimeSignal> subs;
  std::vector<DdIndex> idx;
  for (int l = 0; l < 8; ++l)
    for (int k = 0; k < 4; ++k) {
      idx.push_back({l, k});
      subs.push_back(oracle_subcarrier(cfg, afdm::dd_to_daft_index(cfg, {l, k})));
    }
  const auto psi0 = oracle_subcarrier(cfg, 0);
  double worst = 0.0, worst_zero = 0.0;
  bool support_ok = true;
  for (std::int64_t l = 0; l < n_c; ++l)
    for (std::int64_t k = 0; k < n_c; ++k)
      worst = std::max(worst, std::abs(oracle::dpaf(psi0.samples, psi0.samples, l, k) - afdm::aaf_psi0_closed(cfg, l, k)));
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (std::size_t q = 0; q < idx.size(); ++q)
      for (std::int64_t l = 0; l < n_c; ++l)
        for (std::int64_t k = 0; k < n_c; ++k) {
          const cplx brute = oracle::dpaf(subs[p].samples, subs[q].samples, l, k);
          const cplx closed = afdm::caf_closed(cfg, idx[p], idx[q], l, k);
          worst = std::max(worst, std::abs(brute - closed));
          if (p == q) worst = std::max(worst, std::abs(brute - afdm::aaf_shifted_closed(cfg, idx[p], l, k)));
          if (!afdm::caf_support(cfg, idx[p], idx[q], l, k)) {
            worst_zero = std::max(worst_zero, std::abs(brute));
            support_ok = support_ok && closed == cplx{};
          }
        }
  const double t = seconds_since(t0);
  return {worst < 1e-9 && worst_zero < 1e-9 * static_cast<double>(n_c) && support_ok && t < 10.0,
          fmt("max error %.3g, off-support max %.3g, %.2f s", worst, worst_zero, t)};
}

Verdict dd_io_relation() {
  struct Size {
    int n_p, k, l_max, k_max;
  };
  double worst_oracle = 0.0, worst_general = 0.0, worst_conv = 0.0;
  int instances = 0;
  afdm::Rng rng = afdm::trial_rng(2024, 5);
  for (const Size sz : {Size{4, 4, 3, 1}, Size{8, 4, 7, 1}, Size{8, 8, 7, 3}}) {
    const auto cfg = afdm::proposed_params(sz.n_p, sz.k);
    const auto ch = oracle::chirps_of(cfg);
    std::uniform_int_distribution<int> n_paths(1, 3), tap_l(0, sz.l_max), tap_k(-sz.k_max, sz.k_max);
    for (int i = 0; i < 100; ++i) {
      afdm::DdGrid x(sz.n_p, sz.k);
      for (cplx& v : x.cells()) v = afdm::complex_gaussian(rng, 1.0);
      std::vector<PathTap> paths;
      for (int p = n_paths(rng); p > 0; --p) paths.push_back({afdm::complex_gaussian(rng, 1.0), tap_l(rng), tap_k(rng)});

      const auto predicted = afdm::io_predict(cfg, x, paths);
      const CVec y = oracle::demodulate(ch, oracle::channel(oracle::modulate(ch, afdm::grid_to_vector(cfg, x).values), paths));
      const auto y_grid = afdm::vector_to_grid(cfg, {y});
      worst_oracle = std::max(worst_oracle, oracle::max_abs_diff(predicted.cells(), y_grid.cells()));
      worst_general = std::max(worst_general, oracle::max_abs_diff(predicted.cells(), afdm::io_general(cfg, x, paths).cells()));
      worst_conv = std::max(worst_conv, oracle::max_abs_diff(predicted.cells(), afdm::io_convolve(cfg, x, paths).cells()));
      ++instances;
    }
  }
  return {worst_oracle < 1e-9 && worst_general < 1e-9 && worst_conv < 1e-9,
          fmt("%d instances; time-domain %.3g, interaction sum %.3g, convolution %.3g", instances, worst_oracle,
              worst_general, worst_conv)};
}

afdm::Frame pilot_frame(const afdm::AfdmConfig& cfg) {
  afdm::Rng rng = afdm::trial_rng(0, 0);
  return afdm::build_frame(cfg, afdm::FrameSpec::from_overhead(cfg.n_c(), 1.0), rng);
}

Verdict ddmf_decoupling() {
  const auto t0 = Clock::now();
  const afdm::Scenario sc = afdm::load_scenario("table1");
  const auto cfg = afdm::scenario_config(sc, Preset::proposed);
  const auto frame = pilot_frame(cfg);
  const auto s = afdm::modulate(cfg, frame.symbols);
  const auto x = afdm::vector_to_grid(cfg, frame.symbols);
  int exact = 0, total = 0;
  for (int l = 0; l <= 10; ++l)
    for (int k = -3; k <= 3; ++k) {
      const std::vector<PathTap> path{{1.0, l, k}};
      const auto y = afdm::vector_to_grid(cfg, afdm::demodulate(cfg, afdm::apply_channel(cfg, s, path)));
      const auto p = afdm::peak(afdm::ddmf(cfg, y, x));
      exact += (p.l == l && p.k == static_cast<int>(afdm::mod(k, cfg.k_chirps())));
      ++total;
    }
  const double t = seconds_since(t0);
  return {exact == 77 && total == 77 && t < 30.0, fmt("%d/%d exact argmax, %.2f s", exact, total, t)};
}

Verdict tfmf_dechirp_equivalence() {
  const afdm::Scenario sc = afdm::load_scenario("table1");
  const auto cfg = afdm::scenario_config(sc, Preset::proposed);
  const auto frame = pilot_frame(cfg);
  const auto s = afdm::modulate(cfg, frame.symbols);
  double worst = 0.0;
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    afdm::Rng rng = afdm::trial_rng(7, trial);
    std::vector<PathTap> paths;
    for (const auto& t : afdm::scenario_paths(sc)) paths.push_back(t);
    paths.push_back({afdm::complex_gaussian(rng, 0.3), 4, -2});
    const auto r = afdm::add_awgn(afdm::apply_channel(cfg, s, paths), static_cast<double>(trial), rng);
    const auto a = afdm::tfmf(cfg, r, s);
    const auto b = afdm::dechirp(cfg, r, afdm::modulate(cfg, frame.pilot));
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.cells().size(); ++i) {
      ma = std::max(ma, std::abs(a.cells()[i]));
      mb = std::max(mb, std::abs(b.cells()[i]));
    }
    for (std::size_t i = 0; i < a.cells().size(); ++i)
      worst = std::max(worst, std::abs(std::abs(a.cells()[i]) / ma - std::abs(b.cells()[i]) / mb));
  }
  return {worst < 1e-9, fmt("max deviation of peak-normalized magnitudes %.3g over 20 noisy maps", worst)};
}

Verdict three_target_detection() {
  const afdm::Scenario sc = afdm::load_scenario("fig4");
  afdm::SensingSetup setup = afdm::sensing_setup(sc, Preset::proposed);
  setup.snr_db = 20.0;
  constexpr int trials = 200;
  constexpr std::uint64_t seed = 4;

  setup.pilot_overhead = 1.0;
  double all_hit[2] = {0, 0};
  const Algorithm algs[2] = {Algorithm::tfmf, Algorithm::ddmf};
  for (int a = 0; a < 2; ++a) {
    const auto run = afdm::monte_carlo_sensing(setup, algs[a], trials, seed);
    for (const auto& m : run.samples) all_hit[a] += std::all_of(m.hits.begin(), m.hits.end(), [](bool h) { return h; });
    all_hit[a] /= trials;
  }

  setup.pilot_overhead = 0.0;
  const auto ddmf0 = afdm::monte_carlo_sensing(setup, Algorithm::ddmf, trials, seed);
  const auto tfmf0 = afdm::monte_carlo_sensing(setup, Algorithm::tfmf, trials, seed);
  const double weak_ddmf = ddmf0.report.pd_per_target.at(2);
  const double weak_tfmf = tfmf0.report.pd_per_target.at(2);

  const bool pass = all_hit[0] >= 0.95 && all_hit[1] >= 0.95 && weak_ddmf >= 0.80 && weak_tfmf < weak_ddmf;
  return {pass, fmt("PO=1 all three: TFMF %.3f, DDMF %.3f; PO=0 weak (10,3): DDMF %.3f, TFMF %.3f", all_hit[0],
                    all_hit[1], weak_ddmf, weak_tfmf)};
}

Verdict ordering_properties() {
  const afdm::Scenario sc = afdm::load_scenario("fig5");
  constexpr int trials = 500;
  constexpr std::uint64_t seed = 5;
  const std::vector<double> snrs{0.0, 10.0, 20.0};
  const std::vector<double> pos{0.0, 0.5, 1.0};

  auto collect = [](const afdm::SensingRun& run, auto field) {
    std::vector<double> v;
    for (const auto& m : run.samples) v.push_back(field(m));
    return v;
  };
  auto img = [](const afdm::TrialMetrics& m) { return m.image_snr_db; };
  auto pslr = [](const afdm::TrialMetrics& m) { return m.pslr_db; };
  auto hit = [](const afdm::TrialMetrics& m) { return m.hits.at(0) ? 1.0 : 0.0; };

  int violations_a = 0, violations_b = 0, violations_c = 0;
  int legs[3] = {0, 0, 0};  // DDMF >= TFMF, TFMF >= dechirp, DDMF >= dechirp
  std::string worst;
  for (double snr : snrs) {
    std::vector<std::vector<double>> pd_by_po[3];
    for (double po : pos) {
      afdm::SensingSetup prop = afdm::sensing_setup(sc, Preset::proposed);
      afdm::SensingSetup cls = afdm::sensing_setup(sc, Preset::classic);
      prop.snr_db = cls.snr_db = snr;
      prop.pilot_overhead = cls.pilot_overhead = po;
      const auto ddmf = afdm::monte_carlo_sensing(prop, Algorithm::ddmf, trials, seed);
      const auto tfmf = afdm::monte_carlo_sensing(prop, Algorithm::tfmf, trials, seed);
      const auto dech = afdm::monte_carlo_sensing(prop, Algorithm::dechirp, trials, seed);

      const Paired d1 = paired(collect(ddmf, img), collect(tfmf, img));
      const Paired d2 = paired(collect(tfmf, img), collect(dech, img));
      const Paired d3 = paired(collect(ddmf, img), collect(dech, img));
      const bool bad[3] = {d1.mean < -3.0 * d1.se, d2.mean < -3.0 * d2.se, d3.mean < -3.0 * d3.se};
      for (int leg = 0; leg < 3; ++leg) legs[leg] += bad[leg];
      if (bad[0] || bad[1] || bad[2]) {
        ++violations_a;
        worst += fmt(" [a: snr %g po %g ddmf-tfmf %.2f+-%.2f tfmf-dechirp %.2f+-%.2f dB]", snr, po, d1.mean, d1.se,
                     d2.mean, d2.se);
      }
      pd_by_po[0].push_back(collect(ddmf, hit));
      pd_by_po[1].push_back(collect(tfmf, hit));
      pd_by_po[2].push_back(collect(dech, hit));

      for (Algorithm alg : {Algorithm::tfmf, Algorithm::dechirp}) {
        const auto& p_run = alg == Algorithm::tfmf ? tfmf : dech;
        const auto c_run = afdm::monte_carlo_sensing(cls, alg, trials, seed);
        const Paired d = paired(collect(p_run, pslr), collect(c_run, pslr));
        if (d.mean < -3.0 * d.se) {
          ++violations_c;
          worst += fmt(" [c: %s snr %g po %g %.2f+-%.2f]", std::string(afdm::to_string(alg)).c_str(), snr, po, d.mean,
                       d.se);
        }
      }
    }
    for (int a = 0; a < 3; ++a)
      for (std::size_t j = 1; j < pos.size(); ++j) {
        const Paired d = paired(pd_by_po[a][j], pd_by_po[a][j - 1]);
        if (d.mean < -3.0 * d.se - 1e-15) {
          ++violations_b;
          worst += fmt(" [b: alg %d snr %g po %g->%g %.3f+-%.3f]", a, snr, pos[j - 1], pos[j], d.mean, d.se);
        }
      }
  }
  return {violations_a + violations_b + violations_c == 0,
          fmt("violations (a) %d of 9 [DDMF<TFMF %d, TFMF<dechirp %d, DDMF<dechirp %d], (b) %d of 18, (c) %d of 18",
              violations_a, legs[0], legs[1], legs[2], violations_b, violations_c) +
              worst};
}

Verdict cfar_calibration() {
  const afdm::Scenario sc = afdm::load_scenario("table1");
  const auto cfg = afdm::scenario_config(sc, Preset::proposed);
  const auto s = afdm::modulate(cfg, pilot_frame(cfg).symbols);
  const afdm::CfarParams params{};
  std::int64_t cells = 0, alarms = 0;
  for (std::uint64_t map = 0; cells < 10'000'000; ++map) {
    afdm::Rng rng = afdm::trial_rng(10, map);
    afdm::TimeSignal noise{CVec(static_cast<std::size_t>(cfg.n_c())), false};
    for (cplx& v : noise.samples) v = afdm::complex_gaussian(rng, 1.0);
    const auto ddm = afdm::tfmf(cfg, noise, s);
    alarms += static_cast<std::int64_t>(afdm::ca_cfar_2d(ddm, params).size());
    cells += static_cast<std::int64_t>(ddm.cells().size());
  }
  const double rate = static_cast<double>(alarms) / static_cast<double>(cells);
  return {rate >= params.pfa / 3.0 && rate <= params.pfa * 3.0,
          fmt("%lld alarms in %lld cells, rate %.3g for pfa %.0e", static_cast<long long>(alarms),
              static_cast<long long>(cells), rate, params.pfa)};
}

Verdict ber_parity() {
  const auto t0 = Clock::now();
  const afdm::Scenario sc = afdm::load_scenario("table1");
  const std::vector<afdm::AfdmConfig> configs{afdm::scenario_config(sc, Preset::proposed),
                                              afdm::scenario_config(sc, Preset::classic)};
  const std::vector<afdm::PathProfile> paths{{3, 0, 0.6}, {7, 2, 0.3}, {10, 3, 0.1}};
  bool ok = true;
  std::string detail;
  for (double snr : {5.0, 15.0}) {
    const auto cmp = afdm::monte_carlo_ber(configs, paths, snr, 2000, 11);
    const double p0 = cmp.ber(0), p1 = cmp.ber(1);
    const double n = static_cast<double>(cmp.bits);
    const double sigma = std::sqrt((p0 * (1 - p0) + p1 * (1 - p1)) / n);
    ok = ok && std::abs(p0 - p1) < 3.0 * sigma && cmp.failures[0] == 0 && cmp.failures[1] == 0;
    detail += fmt("%g dB: proposed %.5f classic %.5f (3 sigma %.5f); ", snr, p0, p1, 3.0 * sigma);
  }
  const double t = seconds_since(t0);
  return {ok && t < 300.0, detail + fmt("%.1f s", t)};
}

Verdict complexity_scaling() {
  const std::vector<std::int64_t> sizes{256, 512, 1024, 2048};
  const double tf = afdm::loglog_slope(afdm::time_pipeline(Algorithm::tfmf, sizes));
  const double dc = afdm::loglog_slope(afdm::time_pipeline(Algorithm::dechirp, sizes));
  const double dd = afdm::loglog_slope(afdm::time_pipeline(Algorithm::ddmf, sizes));
  auto in = [](double v, double lo, double hi) { return v >= lo && v <= hi; };
  return {in(tf, 0.8, 1.4) && in(dc, 0.8, 1.4) && in(dd, 1.7, 2.3),
          fmt("slopes TFMF %.2f, dechirp %.2f, DDMF %.2f", tf, dc, dd)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict determinism() {
  const fs::path root = fs::temp_directory_path() / "afdm_acceptance_determinism";
  fs::remove_all(root);
  struct Job {
    afdm::ExperimentKind kind;
    const char* scenario;
  };
  const Job jobs[] = {{afdm::ExperimentKind::ddm, "fig4"},        {afdm::ExperimentKind::af_surface, "desk"},
                      {afdm::ExperimentKind::snr_sweep, "fig5"},  {afdm::ExperimentKind::po_sweep, "fig5"},
                      {afdm::ExperimentKind::pd_curve, "fig4"},   {afdm::ExperimentKind::ber_curve, "desk"},
                      {afdm::ExperimentKind::io_check, "desk"}};
  int files = 0, mismatches = 0, failures = 0;
  for (const Job& job : jobs) {
    afdm::ExperimentSpec spec;
    spec.kind = job.kind;
    spec.scenario = afdm::load_scenario(job.scenario);
    spec.trials = 5;
    spec.seed = 99;
    spec.snr_points = {0.0, 10.0};
    spec.po_points = {0.0, 1.0};
    std::vector<afdm::RunResult> results;
    for (const char* rep : {"a", "b"}) {
      spec.out_dir = root / rep / std::string(afdm::to_string(job.kind));
      results.push_back(afdm::run(spec));
    }
    if (results[0].exit_code != 0 || results[1].exit_code != 0 || results[0].files.size() != results[1].files.size()) {
      ++failures;
      continue;
    }
    for (std::size_t i = 0; i < results[0].files.size(); ++i) {
      ++files;
      mismatches += slurp(results[0].files[i]) != slurp(results[1].files[i]);
    }
  }
  fs::remove_all(root);
  return {failures == 0 && mismatches == 0 && files > 0,
          fmt("%d files compared, %d differ, %d runs failed", files, mismatches, failures)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"FMCW equivalence of the base subcarrier", fmcw_equivalence},
      {"subcarrier orthogonality", orthogonality},
      {"subcarriers as delay-Doppler echoes", echo_form},
      {"ambiguity closed forms", dpaf_closed_form},
      {"DD-DAFT input-output relation", dd_io_relation},
      {"DDMF decoupling", ddmf_decoupling},
      {"TFMF and dechirp equivalence with a full pilot", tfmf_dechirp_equivalence},
      {"three-target detection", three_target_detection},
      {"image SNR, Pd and PSLR ordering", ordering_properties},
      {"CA-CFAR false-alarm calibration", cfar_calibration},
      {"BER parity of proposed and classic", ber_parity},
      {"runtime scaling", complexity_scaling},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
