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

#include "afdm/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "afdm/ambiguity.hpp"
#include "afdm/csv.hpp"
#include "afdm/dd_daft.hpp"

namespace afdm {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr std::array<std::pair<ExperimentKind, std::string_view>, 8> kKindNames{{
    {ExperimentKind::ddm, "ddm"},
    {ExperimentKind::af_surface, "af_surface"},
    {ExperimentKind::snr_sweep, "snr_sweep"},
    {ExperimentKind::po_sweep, "po_sweep"},
    {ExperimentKind::pd_curve, "pd_curve"},
    {ExperimentKind::ber_curve, "ber_curve"},
    {ExperimentKind::io_check, "io_check"},
    {ExperimentKind::runtime_scaling, "runtime_scaling"},
}};

constexpr double kIoTolerance = 1e-9;

const char* const kSweepHeader =
    "snr_db,po,algorithm,preset,pslr_db,pslr_se,image_snr_db,image_snr_se,pd,pd_se,ber,ber_se,trials\n";

// Tracks every file written so a failed run can be rolled back.
class Outputs {
 public:
  explicit Outputs(fs::path dir) : dir_(std::move(dir)) {}

  std::ofstream open(const std::string& name) {
    const fs::path path = dir_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + path.string());
    files_.push_back(path);
    return out;
  }

  void rollback() {
    std::error_code ec;
    for (const fs::path& p : files_) fs::remove(p, ec);
    files_.clear();
  }

  const std::vector<fs::path>& files() const { return files_; }

 private:
  fs::path dir_;
  std::vector<fs::path> files_;
};

std::string file_name(ExperimentKind kind, Preset preset, std::string_view algorithm) {
  return std::string(to_string(kind)) + "_" + std::string(to_string(preset)) + "_" + std::string(algorithm) + ".csv";
}

bool supports(Preset preset, Algorithm algorithm) { return algorithm != Algorithm::ddmf || preset == Preset::proposed; }

std::vector<Algorithm> algorithms_for(const ExperimentSpec& spec, Preset preset) {
  if (spec.algorithms.empty()) {
    std::vector<Algorithm> all{Algorithm::tfmf, Algorithm::dechirp};
    if (preset == Preset::proposed) all.push_back(Algorithm::ddmf);
    return all;
  }
  for (Algorithm a : spec.algorithms)
    if (!supports(preset, a))
      throw ConfigError(std::string(to_string(a)) + " is not defined for the " + std::string(to_string(preset)) +
                        " preset");
  return spec.algorithms;
}

void write_sweep_row(std::ostream& os, double snr, double po, Algorithm a, Preset p, const MetricReport& r) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  os << format_number(snr) << ',' << format_number(po) << ',' << to_string(a) << ',' << to_string(p) << ','
     << format_number(r.pslr_db) << ',' << format_number(r.pslr_se) << ',' << format_number(r.image_snr_db) << ','
     << format_number(r.image_snr_se) << ',' << format_number(r.pd) << ',' << format_number(r.pd_se) << ','
     << format_number(nan) << ',' << format_number(nan) << ',' << r.trials << '\n';
}

json config_json(const AfdmConfig& c) {
  json j;
  j["preset"] = std::string(to_string(c.preset()));
  j["n_c"] = c.n_c();
  j["k_chirps"] = c.k_chirps();
  j["n_p"] = c.n_p();
  j["c1"] = c.c1().str();
  j["c2"] = c.c2().is_exact() ? c.c2().rational().str() : format_number(static_cast<double>(c.c2().value()));
  j["l_cpp"] = c.l_cpp();
  if (c.z_a()) j["z_a"] = *c.z_a();
  return j;
}

json scenario_json(const Scenario& s) {
  json j;
  j["name"] = s.name;
  j["n_c"] = s.n_c;
  j["k_chirps"] = s.k_chirps;
  j["n_p"] = s.n_c / s.k_chirps;
  j["l_cpp"] = s.l_cpp;
  j["l_max"] = s.params.l_max;
  j["k_max"] = s.params.k_max;
  j["bandwidth_hz"] = s.params.bandwidth_hz;
  j["carrier_hz"] = s.params.carrier_hz;
  j["subcarrier_spacing_hz"] = s.params.subcarrier_spacing_hz;
  j["snr_db"] = s.params.snr_db;
  j["pilot_overhead"] = s.params.pilot_overhead;
  j["seed"] = s.params.rng_seed;
  j["random_target_phase"] = s.random_target_phase;
  json targets = json::array();
  for (const TargetSpec& t : s.targets)
    targets.push_back({{"l", t.l}, {"k", t.k}, {"gain_re", t.gain.real()}, {"gain_im", t.gain.imag()}});
  j["targets"] = targets;
  return j;
}

json schema_json(ExperimentKind kind) {
  const auto cols = [](std::initializer_list<std::pair<const char*, const char*>> list) {
    json arr = json::array();
    for (const auto& [name, desc] : list) arr.push_back({{"name", name}, {"description", desc}});
    return arr;
  };
  switch (kind) {
    case ExperimentKind::ddm:
      return cols({{"l", "delay tap"}, {"k", "Doppler bin in [0, K)"}, {"magnitude_db", "20 log10 |Z|, floor -300"}});
    case ExperimentKind::af_surface:
      return cols({{"l", "delay lag"},
                   {"k", "Doppler lag"},
                   {"re", "real part"},
                   {"im", "imaginary part"},
                   {"magnitude_db", "20 log10 |A|, floor -300"}});
    case ExperimentKind::snr_sweep:
    case ExperimentKind::po_sweep:
    case ExperimentKind::pd_curve:
    case ExperimentKind::ber_curve:
      return cols({{"snr_db", "per-sample SNR for unit transmit power"},
                   {"po", "pilot overhead (2Q+1)/n_c"},
                   {"algorithm", "sensing pipeline or detector"},
                   {"preset", "waveform preset"},
                   {"pslr_db", "mean PSLR at the first target"},
                   {"pslr_se", "standard error of pslr_db"},
                   {"image_snr_db", "mean image SNR at the first target"},
                   {"image_snr_se", "standard error of image_snr_db"},
                   {"pd", "CA-CFAR detection rate within +-1 cell of the first target"},
                   {"pd_se", "binomial standard error of pd"},
                   {"ber", "uncoded 4QAM bit error rate"},
                   {"ber_se", "binomial standard error of ber"},
                   {"trials", "Monte-Carlo trials (symbols for ber)"}});
    case ExperimentKind::io_check:
      return cols({{"instance", "random instance index"},
                   {"form", "time_domain, interaction_sum or convolution"},
                   {"max_abs_error", "max |Y_form - Y_predict| over the grid"}});
    case ExperimentKind::runtime_scaling:
      return cols({{"n_c", "symbol length"}, {"seconds", "wall time per map"}});
  }
  return json::array();
}

void run_ddm(const ExperimentSpec& spec, const Scenario& sc, std::uint64_t seed, Outputs& out) {
  for (Preset p : spec.presets.empty() ? sc.presets : spec.presets) {
    SensingSetup setup = sensing_setup(sc, p);
    setup.pilot_only_reference = spec.pilot_only_reference;
    for (Algorithm a : algorithms_for(spec, p)) {
      const DelayDopplerMap map = sense_once(setup, a, seed, 0);
      auto os = out.open(file_name(spec.kind, p, to_string(a)));
      write_ddm_csv(os, map);
    }
  }
}

void run_af_surface(const ExperimentSpec& spec, const Scenario& sc, Outputs& out) {
  for (Preset p : spec.presets.empty() ? sc.presets : spec.presets) {
    const AfdmConfig config = scenario_config(sc, p);
    auto os = out.open(file_name(spec.kind, p, "na"));
    write_af_csv(os, dpaf_surface(config, 0, 0));
  }
}

void run_sensing_sweep(const ExperimentSpec& spec, const Scenario& sc, std::uint64_t seed, Outputs& out) {
  const bool over_po = spec.kind == ExperimentKind::po_sweep;
  const std::vector<double>& points = over_po ? spec.po_points : spec.snr_points;
  for (Preset p : spec.presets.empty() ? sc.presets : spec.presets) {
    SensingSetup setup = sensing_setup(sc, p);
    setup.pilot_only_reference = spec.pilot_only_reference;
    setup.redraw_data = spec.redraw_data;
    for (Algorithm a : algorithms_for(spec, p)) {
      auto os = out.open(file_name(spec.kind, p, to_string(a)));
      os << kSweepHeader;
      for (double x : points) {
        (over_po ? setup.pilot_overhead : setup.snr_db) = x;
        const MetricReport r = monte_carlo_sensing(setup, a, spec.trials, seed).report;
        write_sweep_row(os, setup.snr_db, setup.pilot_overhead, a, p, r);
      }
    }
  }
}

void run_ber_curve(const ExperimentSpec& spec, const Scenario& sc, std::uint64_t seed, Outputs& out) {
  const std::vector<Preset> presets = spec.presets.empty() ? sc.presets : spec.presets;
  if (sc.targets.empty()) throw ConfigError("ber_curve needs at least one path in targets");
  std::vector<AfdmConfig> configs;
  for (Preset p : presets) configs.push_back(scenario_config(sc, p));
  std::vector<PathProfile> paths;
  for (const TargetSpec& t : sc.targets) paths.push_back({t.l, t.k, t.power()});

  std::vector<std::ostringstream> rows(presets.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double snr : spec.snr_points) {
    const BerComparison cmp = monte_carlo_ber(configs, paths, snr, spec.trials, seed);
    for (std::size_t i = 0; i < presets.size(); ++i) {
      const double b = cmp.ber(i);
      rows[i] << format_number(snr) << ",0,lmmse," << to_string(presets[i]) << ',' << format_number(nan) << ','
              << format_number(nan) << ',' << format_number(nan) << ',' << format_number(nan) << ','
              << format_number(nan) << ',' << format_number(nan) << ',' << format_number(b) << ','
              << format_number(std::sqrt(b * (1.0 - b) / static_cast<double>(cmp.bits))) << ',' << cmp.symbols
              << '\n';
    }
  }
  for (std::size_t i = 0; i < presets.size(); ++i) {
    auto os = out.open(file_name(spec.kind, presets[i], "lmmse"));
    os << kSweepHeader << rows[i].str();
  }
}

double run_io_check(const ExperimentSpec& spec, const Scenario& sc, std::uint64_t seed, Outputs& out) {
  const AfdmConfig config = scenario_config(sc, Preset::proposed);
  const std::vector<IoCheckRow> rows = io_check(config, sc.params, spec.trials, seed);
  auto os = out.open(file_name(spec.kind, Preset::proposed, "na"));
  os << "instance,form,max_abs_error\n";
  double worst = 0.0;
  for (const IoCheckRow& r : rows) {
    os << r.instance << ',' << r.form << ',' << format_number(r.max_abs_error) << '\n';
    worst = std::max(worst, r.max_abs_error);
  }
  return worst;
}

json run_runtime_scaling(const ExperimentSpec& spec, const Scenario& sc, Outputs& out) {
  json slopes;
  const std::vector<Algorithm> algorithms = algorithms_for(spec, Preset::proposed);
  for (Algorithm a : algorithms) {
    const std::vector<TimingPoint> points = time_pipeline(a, spec.scaling_sizes, sc.k_chirps);
    auto os = out.open(file_name(spec.kind, Preset::proposed, to_string(a)));
    os << "n_c,seconds\n";
    for (const TimingPoint& t : points) os << t.n_c << ',' << format_number(t.seconds) << '\n';
    slopes[std::string(to_string(a))] = loglog_slope(points);
  }
  return slopes;
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "?";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  throw ConfigError("unknown experiment kind '" + std::string(name) + "'");
}

SensingSetup sensing_setup(const Scenario& scenario, Preset preset) {
  if (scenario.targets.empty()) throw ConfigError("scenario " + scenario.name + " has no targets");
  return SensingSetup{scenario_config(scenario, preset),
                      scenario_paths(scenario),
                      scenario.params.snr_db,
                      scenario.params.pilot_overhead,
                      false,
                      true,
                      scenario.random_target_phase,
                      CfarParams{}};
}

std::vector<IoCheckRow> io_check(const AfdmConfig& config, const ScenarioConfig& scenario, int instances,
                                 std::uint64_t seed) {
  if (instances < 1) throw ConfigError("io_check needs at least one instance");
  std::vector<IoCheckRow> rows;
  const auto max_dev = [](const DdGrid& a, const DdGrid& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.cells().size(); ++i) m = std::max(m, std::abs(a.cells()[i] - b.cells()[i]));
    return m;
  };
  for (int t = 0; t < instances; ++t) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    DdGrid x(config.n_p(), config.k_chirps());
    for (cplx& v : x.cells()) v = complex_gaussian(rng, 1.0);
    const int n_paths = 1 + static_cast<int>(rng() % 4);
    std::vector<PathTap> paths;
    for (int i = 0; i < n_paths; ++i) {
      const int l = static_cast<int>(rng() % static_cast<std::uint64_t>(scenario.l_max + 1));
      const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * scenario.k_max + 1)) - scenario.k_max;
      paths.push_back({complex_gaussian(rng, 1.0), l, k});
    }
    const DdGrid predicted = io_predict(config, x, paths);
    const DdGrid oracle = vector_to_grid(
        config, demodulate(config, apply_channel(config, modulate(config, grid_to_vector(config, x)), paths)));
    rows.push_back({t, "time_domain", max_dev(predicted, oracle)});
    rows.push_back({t, "interaction_sum", max_dev(predicted, io_general(config, x, paths))});
    rows.push_back({t, "convolution", max_dev(predicted, io_convolve(config, x, paths))});
  }
  return rows;
}

std::vector<TimingPoint> time_pipeline(Algorithm algorithm, std::span<const std::int64_t> sizes, int k_chirps,
                                       double min_batch_seconds) {
  using clock = std::chrono::steady_clock;
  std::vector<TimingPoint> points;
  for (std::int64_t n_c : sizes) {
    if (n_c % k_chirps != 0) throw ConfigError("timing size must be a multiple of k_chirps");
    const AfdmConfig config = proposed_params(static_cast<int>(n_c / k_chirps), k_chirps);
    Rng rng = trial_rng(1, static_cast<std::uint64_t>(n_c));
    const Frame frame = build_frame(config, FrameSpec::from_overhead(n_c, 0.0), rng);
    const TimeSignal s = modulate(config, frame.symbols);
    const std::vector<PathTap> path{{1.0, 1, 1}};
    const TimeSignal r = add_awgn(apply_channel(config, s, path), 10.0, rng);
    const DdGrid y = vector_to_grid(config, demodulate(config, r));
    const DdGrid x = vector_to_grid(config, frame.symbols);

    double sink = 0.0;
    const auto once = [&] {
      switch (algorithm) {
        case Algorithm::tfmf: sink += std::abs(tfmf(config, r, s)(0, 0)); break;
        case Algorithm::dechirp: sink += std::abs(dechirp(config, r, s)(0, 0)); break;
        case Algorithm::ddmf: sink += std::abs(ddmf(config, y, x)(0, 0)); break;
      }
    };
    once();  // warm-up: FFT plans, caches
    double best = std::numeric_limits<double>::infinity();
    for (int batch = 0; batch < 3; ++batch) {
      int calls = 0;
      const auto start = clock::now();
      double elapsed = 0.0;
      do {
        once();
        ++calls;
        elapsed = std::chrono::duration<double>(clock::now() - start).count();
      } while (elapsed < min_batch_seconds);
      best = std::min(best, elapsed / calls);
    }
    if (sink < 0.0) best = -best;  // keeps the calls observable
    points.push_back({n_c, best});
  }
  return points;
}

double loglog_slope(std::span<const TimingPoint> points) {
  if (points.size() < 2) throw ConfigError("slope needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(points.size());
  for (const TimingPoint& p : points) {
    const double x = std::log(static_cast<double>(p.n_c));
    const double y = std::log(p.seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

RunResult run(const ExperimentSpec& spec) {
  RunResult result;
  Outputs out(spec.out_dir);
  try {
    if (spec.trials < 1) throw ConfigError("trials must be at least 1");
    std::error_code ec;
    fs::create_directories(spec.out_dir, ec);
    if (!fs::is_directory(spec.out_dir)) throw ConfigError("cannot create output directory " + spec.out_dir.string());

    Scenario sc = spec.scenario;
    if (spec.seed) sc.params.rng_seed = *spec.seed;
    if (spec.snr_db) sc.params.snr_db = *spec.snr_db;
    if (spec.pilot_overhead) sc.params.pilot_overhead = *spec.pilot_overhead;
    const std::uint64_t seed = sc.params.rng_seed;
    const std::vector<Preset> presets = spec.presets.empty() ? sc.presets : spec.presets;

    json manifest;
    manifest["kind"] = std::string(to_string(spec.kind));
    manifest["scenario"] = scenario_json(sc);
    manifest["seed"] = seed;
    manifest["trials"] = spec.trials;
    json configs = json::array();
    for (Preset p : presets) configs.push_back(config_json(scenario_config(sc, p)));
    manifest["waveforms"] = configs;
    json algs = json::array();
    for (Preset p : presets)
      for (Algorithm a : algorithms_for(spec, p)) algs.push_back(std::string(to_string(p)) + "/" + std::string(to_string(a)));
    manifest["preset_algorithm_pairs"] = algs;
    manifest["snr_points"] = spec.snr_points;
    manifest["po_points"] = spec.po_points;
    manifest["tfmf_reference"] = spec.pilot_only_reference ? "pilot_only" : "full_transmit";
    manifest["data_symbols"] = spec.redraw_data ? "redrawn_per_trial" : "fixed";
    const CfarParams cfar;
    manifest["cfar"] = {{"train", cfar.train}, {"guard", cfar.guard}, {"pfa", cfar.pfa}, {"window", "square, cyclic"}};
    manifest["frame"] = {{"pilot_index", 0},
                         {"pilot_power", "min(2Q+1, n_c)"},
                         {"q_from_po", "round((PO n_c - 1)/2) clamped to [0, n_c/2]; PO=0 all data"},
                         {"data", "Gray 4QAM, unit power"}};
    manifest["detection_association"] = "+-1 cell, cyclic";
    manifest["image_snr_guard"] = "+-1 cell ring excluded";
    manifest["metric_sentinel_db"] = kMetricSentinelDb;
    manifest["noise"] = "CN(0, 10^(-snr_db/10)) per time sample, unit transmit power";

    switch (spec.kind) {
      case ExperimentKind::ddm: run_ddm(spec, sc, seed, out); break;
      case ExperimentKind::af_surface: run_af_surface(spec, sc, out); break;
      case ExperimentKind::snr_sweep:
      case ExperimentKind::po_sweep:
      case ExperimentKind::pd_curve: run_sensing_sweep(spec, sc, seed, out); break;
      case ExperimentKind::ber_curve: run_ber_curve(spec, sc, seed, out); break;
      case ExperimentKind::io_check:
        result.check_error = run_io_check(spec, sc, seed, out);
        manifest["io_check"] = {{"max_abs_error", result.check_error}, {"tolerance", kIoTolerance}};
        break;
      case ExperimentKind::runtime_scaling:
        manifest["scaling_sizes"] = spec.scaling_sizes;
        manifest["loglog_slope"] = run_runtime_scaling(spec, sc, out);
        break;
    }

    json files = json::array();
    for (const fs::path& p : out.files()) files.push_back(p.filename().string());
    manifest["files"] = files;
    {
      auto os = out.open("schema.json");
      os << json{{std::string(to_string(spec.kind)), schema_json(spec.kind)}}.dump(2) << '\n';
    }
    {
      auto os = out.open("manifest.json");
      os << manifest.dump(2) << '\n';
    }
    result.files = out.files();

    if (spec.kind == ExperimentKind::io_check && !(result.check_error < kIoTolerance)) {
      result.exit_code = 2;
      result.diagnostic = "io_check: max abs error " + format_number(result.check_error) + " exceeds " +
                          format_number(kIoTolerance);
    }
  } catch (const std::exception& e) {
    out.rollback();
    result.files.clear();
    result.exit_code = 1;
    result.diagnostic = e.what();
  }
  return result;
}

}  // namespace afdm
