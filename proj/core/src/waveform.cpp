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

#include "afdm/waveform.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "afdm/csv.hpp"
#include "afdm/fft.hpp"

namespace afdm {

namespace {

void require_length(const CVec& v, std::int64_t n, const char* what) {
  if (static_cast<std::int64_t>(v.size()) != n)
    throw ConfigError(std::string(what) + ": expected length " + std::to_string(n) + ", got " +
                      std::to_string(v.size()));
}

void require_proposed(const AfdmConfig& config, const char* what) {
  if (!config.is_proposed()) throw ConfigError(std::string(what) + " requires the proposed preset (c2 = 0)");
}

}  // namespace

TimeSignal subcarrier(const AfdmConfig& config, std::int64_t m) {
  if (m < 0 || m >= config.n_c()) throw ConfigError("subcarrier index out of range");
  TimeSignal out;
  out.samples.resize(static_cast<std::size_t>(config.n_c()));
  for (std::int64_t n = 0; n < config.n_c(); ++n) out.samples[n] = config.subcarrier_sample(m, n);
  return out;
}

TimeSignal modulate(const AfdmConfig& config, const DaftSymbols& x) {
  const std::int64_t n_c = config.n_c();
  require_length(x.values, n_c, "modulate");
  TimeSignal s;
  s.samples.resize(n_c);
  for (std::int64_t m = 0; m < n_c; ++m) s.samples[m] = x.values[m] * config.freq_chirp(m);
  fft::backward(s.samples);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_c));
  for (std::int64_t n = 0; n < n_c; ++n) s.samples[n] *= scale * config.time_chirp(n);
  return s;
}

DaftSymbols demodulate(const AfdmConfig& config, const TimeSignal& r) {
  if (r.has_cpp) throw ConfigError("demodulate: remove the CPP first");
  const std::int64_t n_c = config.n_c();
  require_length(r.samples, n_c, "demodulate");
  DaftSymbols y;
  y.values.resize(n_c);
  for (std::int64_t n = 0; n < n_c; ++n) y.values[n] = r.samples[n] * std::conj(config.time_chirp(n));
  fft::forward(y.values);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_c));
  for (std::int64_t m = 0; m < n_c; ++m) y.values[m] *= scale * std::conj(config.freq_chirp(m));
  return y;
}

TimeSignal add_cpp(const AfdmConfig& config, const TimeSignal& s) {
  if (s.has_cpp) throw ConfigError("add_cpp: signal already carries a CPP");
  const std::int64_t n_c = config.n_c();
  require_length(s.samples, n_c, "add_cpp");
  const int len = config.l_cpp();
  const Rational& c1 = config.c1();
  TimeSignal out;
  out.has_cpp = true;
  out.samples.reserve(n_c + len);
  for (std::int64_t n = -len; n < 0; ++n) {
    // e^{-j 2 pi c1 (n_c^2 + 2 n_c n)}, reduced exactly.
    const wide_int arg = static_cast<wide_int>(c1.num()) * (static_cast<wide_int>(n_c) * n_c + 2 * n_c * n);
    const std::int64_t residue = static_cast<std::int64_t>(((-arg) % c1.den() + c1.den()) % c1.den());
    out.samples.push_back(unit_phasor(residue, c1.den()) * s.samples[n + n_c]);
  }
  out.samples.insert(out.samples.end(), s.samples.begin(), s.samples.end());
  return out;
}

TimeSignal remove_cpp(const AfdmConfig& config, const TimeSignal& r) {
  if (!r.has_cpp) throw ConfigError("remove_cpp: signal has no CPP");
  require_length(r.samples, config.n_c() + config.l_cpp(), "remove_cpp");
  TimeSignal out;
  out.samples.assign(r.samples.begin() + config.l_cpp(), r.samples.end());
  return out;
}

TimeSignal fmcw_signal(int n_p, int k_chirps) {
  if (n_p < 2 || n_p % 2 != 0) throw ConfigError("N_p must be even");
  if (k_chirps < 1) throw ConfigError("k_chirps must be positive");
  TimeSignal out;
  out.samples.reserve(static_cast<std::size_t>(n_p) * k_chirps);
  for (int q = 0; q < k_chirps; ++q) {
    for (std::int64_t n = 0; n < n_p; ++n) out.samples.push_back(unit_phasor(n * n, 2LL * n_p));
  }
  return out;
}

std::int64_t dd_to_daft_index(const AfdmConfig& config, DdIndex index) {
  if (index.l < 0 || index.l >= config.n_p() || index.k < 0 || index.k >= config.k_chirps())
    throw ConfigError("delay-Doppler index out of range");
  return mod(config.n_c() - static_cast<std::int64_t>(config.k_chirps()) * index.l - index.k, config.n_c());
}

DdIndex daft_index_to_dd(const AfdmConfig& config, std::int64_t m) {
  if (m < 0 || m >= config.n_c()) throw ConfigError("subcarrier index out of range");
  const std::int64_t r = mod(config.n_c() - m, config.n_c());  // = K l + k
  return {static_cast<int>(r / config.k_chirps()), static_cast<int>(r % config.k_chirps())};
}

TimeSignal echo_form_subcarrier(const AfdmConfig& config, DdIndex index) {
  require_proposed(config, "echo_form_subcarrier");
  if (index.l < 0 || index.l >= config.n_p() || index.k < 0 || index.k >= config.k_chirps())
    throw ConfigError("delay-Doppler index out of range");
  const std::int64_t n_c = config.n_c();
  const std::int64_t two_n_p = 2LL * config.n_p();
  const cplx delay_phase = unit_phasor(-static_cast<std::int64_t>(index.l) * index.l, two_n_p);
  TimeSignal out;
  out.samples.resize(n_c);
  for (std::int64_t n = 0; n < n_c; ++n) {
    out.samples[n] = config.time_chirp(mod(n - index.l, n_c)) * unit_phasor(-index.k * n, n_c) * delay_phase;
  }
  return out;
}

void write_csv(std::ostream& os, const CVec& values) {
  os << "index,re,im\n";
  for (std::size_t i = 0; i < values.size(); ++i)
    os << i << ',' << format_number(values[i].real()) << ',' << format_number(values[i].imag()) << '\n';
}

CVec read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("index,re,im", 0) != 0) throw ConfigError("csv: missing header");
  CVec out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string idx, re, im;
    if (!std::getline(row, idx, ',') || !std::getline(row, re, ',') || !std::getline(row, im, ','))
      throw ConfigError("csv: malformed row '" + line + "'");
    if (std::stoull(idx) != out.size()) throw ConfigError("csv: non-contiguous index");
    out.emplace_back(std::stod(re), std::stod(im));
  }
  return out;
}

}  // namespace afdm
