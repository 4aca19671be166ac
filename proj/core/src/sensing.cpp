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

#include "afdm/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "afdm/csv.hpp"
#include "afdm/fft.hpp"

namespace afdm {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::tfmf: return "tfmf";
    case Algorithm::dechirp: return "dechirp";
    case Algorithm::ddmf: return "ddmf";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "tfmf") return Algorithm::tfmf;
  if (name == "dechirp") return Algorithm::dechirp;
  if (name == "ddmf") return Algorithm::ddmf;
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

double DelayDopplerMap::magnitude_db(int l, int k) const {
  const double a = std::abs((*this)(l, k));
  return a < 1e-15 ? -300.0 : 20.0 * std::log10(a);
}

namespace {

void require_length(const AfdmConfig& config, const TimeSignal& s, const char* what) {
  if (s.has_cpp) throw ConfigError(std::string(what) + ": remove the CPP first");
  if (static_cast<std::int64_t>(s.samples.size()) != config.n_c())
    throw ConfigError(std::string(what) + ": expected " + std::to_string(config.n_c()) + " samples, got " +
                      std::to_string(s.samples.size()));
}

// Sample (n, q) of the fast/slow-time matrix is buf[q * n_p + n], so the
// flat signal already has the right layout.
void fast_time_forward(CVec& buf, int n_p, int k) { fft::forward_many(buf, n_p, k, 1, n_p); }
void fast_time_backward(CVec& buf, int n_p, int k) { fft::backward_many(buf, n_p, k, 1, n_p); }
void slow_time_backward(CVec& buf, int n_p, int k) { fft::backward_many(buf, k, n_p, n_p, 1); }

}  // namespace

DelayDopplerMap tfmf(const AfdmConfig& config, const TimeSignal& r, const TimeSignal& s_ref) {
  require_length(config, r, "tfmf");
  require_length(config, s_ref, "tfmf");
  const int n_p = config.n_p();
  const int big_k = config.k_chirps();

  CVec rf = r.samples;
  CVec sf = s_ref.samples;
  fast_time_forward(rf, n_p, big_k);
  fast_time_forward(sf, n_p, big_k);
  for (std::size_t i = 0; i < rf.size(); ++i) rf[i] *= std::conj(sf[i]);
  fast_time_backward(rf, n_p, big_k);
  slow_time_backward(rf, n_p, big_k);

  // Unitary transforms: 1/sqrt(n_p) for each fast-time pass, 1/sqrt(K) on slow time.
  const double scale = 1.0 / (n_p * std::sqrt(static_cast<double>(n_p) * big_k));
  DelayDopplerMap map(n_p, big_k, Algorithm::tfmf);
  for (int q = 0; q < big_k; ++q)
    for (int l = 0; l < n_p; ++l) map(l, q) = rf[static_cast<std::size_t>(q) * n_p + l] * scale;
  return map;
}

DelayDopplerMap dechirp(const AfdmConfig& config, const TimeSignal& r, const TimeSignal& pilot) {
  require_length(config, r, "dechirp");
  require_length(config, pilot, "dechirp");
  const int n_p = config.n_p();
  const int big_k = config.k_chirps();

  CVec d(r.samples.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = r.samples[i] * std::conj(pilot.samples[i]);
  fast_time_forward(d, n_p, big_k);
  slow_time_backward(d, n_p, big_k);

  const double scale = 1.0 / std::sqrt(static_cast<double>(n_p) * big_k);
  DelayDopplerMap map(n_p, big_k, Algorithm::dechirp);
  for (int q = 0; q < big_k; ++q)
    for (int l = 0; l < n_p; ++l)
      map(l, q) = d[static_cast<std::size_t>(q) * n_p + static_cast<std::size_t>(mod(-l, n_p))] * scale;
  return map;
}

DelayDopplerMap ddmf(const AfdmConfig& config, const DdGrid& y, const DdGrid& x) {
  if (!config.is_proposed()) throw ConfigError("ddmf requires the proposed preset");
  const int n_p = config.n_p();
  const int big_k = config.k_chirps();
  if (y.n_p() != n_p || y.k_chirps() != big_k || x.n_p() != n_p || x.k_chirps() != big_k)
    throw ConfigError("ddmf: grid shape does not match the configuration");

  // Phase numerators live on the 1/(2 n_c) lattice:
  //   2 l (m - k) + 2 K n l - K l^2  (mod 2 n_c).
  const std::int64_t period = 2 * config.n_c();
  CVec table(static_cast<std::size_t>(period));
  for (std::int64_t t = 0; t < period; ++t) table[t] = unit_phasor(t, period);

  DelayDopplerMap map(n_p, big_k, Algorithm::ddmf);
  for (int col = 0; col < big_k; ++col) {
    const int k = signed_doppler(col, big_k);
    for (int l = 0; l < n_p; ++l) {
      const std::int64_t step = mod(2LL * big_k * l, period);
      cplx acc{};
      for (int m = 0; m < big_k; ++m) {
        const int dk = m - k;
        const int src_k = static_cast<int>(mod(dk, big_k));
        const std::int64_t dl = floor_div(dk, big_k);
        std::int64_t ph = mod(2LL * l * dk - static_cast<std::int64_t>(big_k) * l * l, period);
        int src_l = static_cast<int>(mod(-l + dl, n_p));
        for (int n = 0; n < n_p; ++n) {
          acc += std::conj(y(n, m)) * x(src_l, src_k) * table[static_cast<std::size_t>(ph)];
          ph += step;
          if (ph >= period) ph -= period;
          if (++src_l == n_p) src_l = 0;
        }
      }
      map(l, col) = acc;
    }
  }
  return map;
}

double cfar_alpha(int n_train, double pfa) {
  return n_train * (std::pow(pfa, -1.0 / n_train) - 1.0);
}

namespace {

// Cyclic box sum of half-width w along both axes of an n_p x K power map.
std::vector<double> box_sum(const std::vector<double>& p, int n_p, int big_k, int w) {
  std::vector<double> rows(p.size());
  for (int l = 0; l < n_p; ++l)
    for (int k = 0; k < big_k; ++k) {
      double s = 0.0;
      for (int b = -w; b <= w; ++b) s += p[static_cast<std::size_t>(l) * big_k + mod(k + b, big_k)];
      rows[static_cast<std::size_t>(l) * big_k + k] = s;
    }
  std::vector<double> out(p.size());
  for (int l = 0; l < n_p; ++l)
    for (int k = 0; k < big_k; ++k) {
      double s = 0.0;
      for (int a = -w; a <= w; ++a) s += rows[mod(l + a, n_p) * big_k + k];
      out[static_cast<std::size_t>(l) * big_k + k] = s;
    }
  return out;
}

}  // namespace

std::vector<Detection> ca_cfar_2d(const DelayDopplerMap& map, const CfarParams& params) {
  if (params.train < 1) throw ConfigError("CFAR needs at least one training cell");
  if (params.guard < 0) throw ConfigError("CFAR guard must be non-negative");
  if (!(params.pfa > 0.0 && params.pfa < 1.0)) throw ConfigError("CFAR pfa must lie in (0, 1)");
  const int n_p = map.n_p();
  const int big_k = map.k_chirps();
  const int outer = params.train + params.guard;
  const int window = 2 * outer + 1;
  if (window > n_p || window > big_k)
    throw ConfigError("map " + std::to_string(n_p) + "x" + std::to_string(big_k) + " is smaller than the " +
                      std::to_string(window) + "x" + std::to_string(window) + " CFAR window");

  std::vector<double> power(map.cells().size());
  for (std::size_t i = 0; i < power.size(); ++i) power[i] = std::norm(map.cells()[i]);

  const std::vector<double> all = box_sum(power, n_p, big_k, outer);
  const std::vector<double> inner = box_sum(power, n_p, big_k, params.guard);
  const int n_train = window * window - (2 * params.guard + 1) * (2 * params.guard + 1);
  const double alpha = cfar_alpha(n_train, params.pfa);

  std::vector<Detection> out;
  for (int l = 0; l < n_p; ++l)
    for (int k = 0; k < big_k; ++k) {
      const std::size_t i = static_cast<std::size_t>(l) * big_k + k;
      double noise = std::max(all[i] - inner[i], 0.0) / n_train;
      if (noise <= 0.0) noise = std::numeric_limits<double>::denorm_min();
      const double threshold = alpha * noise;
      if (power[i] > threshold) out.push_back({l, k, std::sqrt(power[i]), std::sqrt(threshold)});
    }
  return out;
}

namespace {

bool adjacent(int a, int b, int n) {
  const int d = static_cast<int>(mod(a - b, n));
  return d <= 1 || d == n - 1;
}

}  // namespace

std::vector<Detection> cluster_detections(std::vector<Detection> detections, int n_p, int k_chirps) {
  std::stable_sort(detections.begin(), detections.end(),
                   [](const Detection& a, const Detection& b) { return a.magnitude > b.magnitude; });
  std::vector<Detection> kept;
  for (const Detection& d : detections) {
    const bool merged = std::any_of(kept.begin(), kept.end(), [&](const Detection& c) {
      return adjacent(d.l, c.l, n_p) && adjacent(d.k, c.k, k_chirps);
    });
    if (!merged) kept.push_back(d);
  }
  return kept;
}

bool detected_near(const std::vector<Detection>& detections, DdIndex target, int n_p, int k_chirps) {
  return std::any_of(detections.begin(), detections.end(), [&](const Detection& d) {
    return adjacent(d.l, target.l, n_p) && adjacent(d.k, target.k, k_chirps);
  });
}

Peak peak(const DelayDopplerMap& map) {
  Peak best{0, 0, -1.0};
  for (int l = 0; l < map.n_p(); ++l)
    for (int k = 0; k < map.k_chirps(); ++k) {
      const double a = std::abs(map(l, k));
      if (a > best.magnitude) best = {l, k, a};
    }
  return best;
}

void write_ddm_csv(std::ostream& os, const DelayDopplerMap& map) {
  os << "l,k,magnitude_db\n";
  for (int l = 0; l < map.n_p(); ++l)
    for (int k = 0; k < map.k_chirps(); ++k) os << l << ',' << k << ',' << format_number(map.magnitude_db(l, k)) << '\n';
}

}  // namespace afdm
