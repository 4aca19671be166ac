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

#include "afdm/ambiguity.hpp"

#include <cmath>
#include <ostream>

#include "afdm/csv.hpp"
#include "afdm/fft.hpp"

namespace afdm {

namespace {

void require_proposed(const AfdmConfig& config) {
  if (!config.is_proposed()) throw ConfigError("closed-form ambiguity requires the proposed preset");
}

}  // namespace

cplx dpaf_brute(std::span<const cplx> a, std::span<const cplx> b, std::int64_t l, std::int64_t k) {
  if (a.size() != b.size()) throw ConfigError("dpaf: length mismatch");
  const auto n_c = static_cast<std::int64_t>(a.size());
  cplx acc{};
  for (std::int64_t n = 0; n < n_c; ++n) acc += a[n] * std::conj(b[mod(n - l, n_c)]) * unit_phasor(mod(k, n_c) * n, n_c);
  return acc;
}

bool caf_support(const AfdmConfig& config, DdIndex p, DdIndex q, std::int64_t l, std::int64_t k) {
  require_proposed(config);
  const std::int64_t kk = k + q.k - p.k;
  const std::int64_t ll = l + q.l - p.l;
  const int big_k = config.k_chirps();
  return mod(kk, big_k) == 0 && mod(ll + floor_div(kk, big_k), config.n_p()) == 0;
}

cplx aaf_psi0_closed(const AfdmConfig& config, std::int64_t l, std::int64_t k) {
  return caf_closed(config, {0, 0}, {0, 0}, l, k);
}

cplx aaf_shifted_closed(const AfdmConfig& config, DdIndex p, std::int64_t l, std::int64_t k) {
  require_proposed(config);
  const cplx base = aaf_psi0_closed(config, l, k);
  if (base == cplx{}) return base;
  return unit_phasor(k * p.l - l * p.k, config.n_c()) * base;
}

cplx caf_closed(const AfdmConfig& config, DdIndex p, DdIndex q, std::int64_t l, std::int64_t k) {
  if (!caf_support(config, p, q, l, k)) return {};
  const std::int64_t n_c = config.n_c();
  const std::int64_t big_k = config.k_chirps();
  const std::int64_t ll = mod(l + q.l - p.l, 2LL * config.n_p());
  // phi1 + phi2 over the common denominator 2 n_c (n_c = K n_p).
  const wide_int num = 2 * (static_cast<wide_int>(k) * p.l - static_cast<wide_int>(l) * q.k) +
                       2 * static_cast<wide_int>(q.k - p.k) * p.l +
                       big_k * (static_cast<wide_int>(q.l) * q.l - static_cast<wide_int>(p.l) * p.l) -
                       big_k * static_cast<wide_int>(ll) * ll;
  const std::int64_t den = 2 * n_c;
  const auto residue = static_cast<std::int64_t>(((num % den) + den) % den);
  return static_cast<double>(n_c) * unit_phasor(residue, den);
}

std::vector<DpafSample> dpaf_surface_brute(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw ConfigError("dpaf: length mismatch");
  const auto n_c = static_cast<std::int64_t>(a.size());
  std::vector<DpafSample> out;
  out.reserve(static_cast<std::size_t>(n_c * n_c));
  CVec row(n_c);
  for (std::int64_t l = 0; l < n_c; ++l) {
    for (std::int64_t n = 0; n < n_c; ++n) row[n] = a[n] * std::conj(b[mod(n - l, n_c)]);
    fft::backward(row);
    for (std::int64_t k = 0; k < n_c; ++k) out.push_back({l, k, row[k]});
  }
  return out;
}

std::vector<DpafSample> dpaf_surface(const AfdmConfig& config, std::int64_t m_a, std::int64_t m_b) {
  if (!config.is_proposed()) {
    const TimeSignal a = subcarrier(config, m_a);
    const TimeSignal b = subcarrier(config, m_b);
    return dpaf_surface_brute(a.samples, b.samples);
  }
  const DdIndex p = daft_index_to_dd(config, m_a);
  const DdIndex q = daft_index_to_dd(config, m_b);
  const std::int64_t n_c = config.n_c();
  std::vector<DpafSample> out;
  out.reserve(static_cast<std::size_t>(n_c * n_c));
  for (std::int64_t l = 0; l < n_c; ++l)
    for (std::int64_t k = 0; k < n_c; ++k) out.push_back({l, k, caf_closed(config, p, q, l, k)});
  return out;
}

void write_af_csv(std::ostream& os, const std::vector<DpafSample>& surface) {
  os << "l,k,re,im,magnitude_db\n";
  for (const DpafSample& s : surface) {
    const double mag = std::abs(s.value);
    const double db = mag < 1e-15 ? -300.0 : 20.0 * std::log10(mag);
    os << s.l << ',' << s.k << ',' << format_number(s.value.real()) << ',' << format_number(s.value.imag()) << ','
       << format_number(db) << '\n';
  }
}

}  // namespace afdm
