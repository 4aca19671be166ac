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

// afdm_cli: runs one experiment kind per subcommand and writes CSV, a
// manifest and a schema file into --out.

#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "afdm/harness.hpp"

namespace {

struct Options {
  std::string scenario = "table1";
  std::vector<std::string> presets;
  std::vector<std::string> algorithms;
  std::optional<std::uint64_t> seed;
  int trials = 100;
  std::string out;
  std::optional<double> snr;
  std::optional<double> po;
  std::vector<double> snr_points;
  std::vector<double> po_points;
  std::vector<std::int64_t> sizes;
  bool pilot_only_reference = false;
  bool fixed_data = false;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--scenario", o.scenario, "builtin name (table1, fig4, fig5, desk) or YAML file");
  sub->add_option("--preset", o.presets, "proposed, classic, ofdm, ocdm (repeatable)")->delimiter(',');
  sub->add_option("--algorithm", o.algorithms, "tfmf, dechirp, ddmf (repeatable)")->delimiter(',');
  sub->add_option("--seed", o.seed, "RNG seed, overrides the scenario");
  sub->add_option("--trials", o.trials, "Monte-Carlo trials or symbols")->check(CLI::PositiveNumber);
  sub->add_option("--out", o.out, "output directory (default $AFDM_OUT_DIR or .)");
  sub->add_option("--snr", o.snr, "SNR in dB, overrides the scenario");
  sub->add_option("--po", o.po, "pilot overhead in [0, 1], overrides the scenario");
  sub->add_option("--snr-points", o.snr_points, "SNR grid for sweeps")->delimiter(',');
  sub->add_option("--po-points", o.po_points, "PO grid for po_sweep")->delimiter(',');
  sub->add_option("--sizes", o.sizes, "n_c values for runtime_scaling")->delimiter(',');
  sub->add_flag("--pilot-only-reference", o.pilot_only_reference, "TFMF correlates against the pilot only");
  sub->add_flag("--fixed-data", o.fixed_data, "keep the data symbols fixed across trials");
}

int execute(afdm::ExperimentKind kind, const Options& o) {
  afdm::ExperimentSpec spec;
  spec.kind = kind;
  try {
    spec.scenario = afdm::load_scenario(o.scenario);
    for (const std::string& p : o.presets) spec.presets.push_back(afdm::parse_preset(p));
    for (const std::string& a : o.algorithms) spec.algorithms.push_back(afdm::parse_algorithm(a));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  spec.seed = o.seed;
  spec.trials = o.trials;
  spec.snr_db = o.snr;
  spec.pilot_overhead = o.po;
  if (!o.snr_points.empty()) spec.snr_points = o.snr_points;
  if (!o.po_points.empty()) spec.po_points = o.po_points;
  if (!o.sizes.empty()) spec.scaling_sizes = o.sizes;
  spec.pilot_only_reference = o.pilot_only_reference;
  spec.redraw_data = !o.fixed_data;
  if (!o.out.empty()) {
    spec.out_dir = o.out;
  } else if (const char* env = std::getenv("AFDM_OUT_DIR")) {
    spec.out_dir = env;
  }

  const afdm::RunResult result = afdm::run(spec);
  if (result.exit_code != 0) {
    std::cerr << "error: " << result.diagnostic << '\n';
    return result.exit_code;
  }
  for (const auto& f : result.files) std::cout << f.string() << '\n';
  if (kind == afdm::ExperimentKind::io_check) std::cout << "max abs error " << result.check_error << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AFDM integrated sensing and communication experiments"};
  app.require_subcommand(1);

  Options opts;
  afdm::ExperimentKind chosen = afdm::ExperimentKind::ddm;
  const std::pair<afdm::ExperimentKind, const char*> kinds[] = {
      {afdm::ExperimentKind::ddm, "one delay-Doppler map per preset and algorithm"},
      {afdm::ExperimentKind::af_surface, "ambiguity surface of the base subcarrier"},
      {afdm::ExperimentKind::snr_sweep, "PSLR, image SNR and Pd against SNR"},
      {afdm::ExperimentKind::po_sweep, "PSLR, image SNR and Pd against pilot overhead"},
      {afdm::ExperimentKind::pd_curve, "per-target detection probability against SNR"},
      {afdm::ExperimentKind::ber_curve, "LMMSE bit error rate against SNR"},
      {afdm::ExperimentKind::io_check, "DD-DAFT input-output relation against the time-domain channel"},
      {afdm::ExperimentKind::runtime_scaling, "pipeline runtime against n_c"},
  };
  for (const auto& [kind, help] : kinds) {
    CLI::App* sub = app.add_subcommand(std::string(afdm::to_string(kind)), help);
    add_common(sub, opts);
    sub->callback([&chosen, kind] { chosen = kind; });
  }

  bool list = false;
  CLI::App* scenarios = app.add_subcommand("scenarios", "print the builtin scenarios as YAML");
  scenarios->callback([&list] { list = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (list) {
    for (const afdm::Scenario& s : afdm::builtin_scenarios()) std::cout << "---\n" << afdm::dump_scenario(s) << '\n';
    return 0;
  }
  return execute(chosen, opts);
}
