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

#include "afdm/dd_daft.hpp"

#include <ostream>

#include "afdm/ambiguity.hpp"
#include "afdm/csv.hpp"

namespace afdm {

namespace {

void require_proposed(const AfdmConfig& config, const char* what) {
  if (!config.is_proposed()) throw ConfigError(std::string(what) + " requires the proposed preset");
}

void require_shape(const AfdmConfig& config, const DdGrid& grid) {
  if (grid.n_p() != config.n_p() || grid.k_chirps() != config.k_chirps())
    throw ConfigError("grid shape does not match the configuration");
}

// e^{j 2 pi num / (2 n_c)}
cplx phase_2nc(const AfdmConfig& config, std::int64_t num) { return unit_phasor(num, 2 * config.n_c()); }

}  // namespace

DdGrid vector_to_grid(const AfdmConfig& config, const DaftSymbols& v) {
  require_proposed(config, "vector_to_grid");
  if (static_cast<std::int64_t>(v.values.size()) != config.n_c()) throw ConfigError("vector_to_grid: length mismatch");
  DdGrid grid(config.n_p(), config.k_chirps());
  for (int l = 0; l < config.n_p(); ++l)
    for (int k = 0; k < config.k_chirps(); ++k) grid(l, k) = v.values[dd_to_daft_index(config, {l, k})];
  return grid;
}

DaftSymbols grid_to_vector(const AfdmConfig& config, const DdGrid& grid) {
  require_proposed(config, "grid_to_vector");
  require_shape(config, grid);
  DaftSymbols v;
  v.values.resize(config.n_c());
  for (int l = 0; l < config.n_p(); ++l)
    for (int k = 0; k < config.k_chirps(); ++k) v.values[dd_to_daft_index(config, {l, k})] = grid(l, k);
  return v;
}

DdGrid io_predict(const AfdmConfig& config, const DdGrid& x, std::span<const PathTap> paths) {
  require_proposed(config, "io_predict");
  require_shape(config, x);
  const int n_p = config.n_p();
  const int big_k = config.k_chirps();
  DdGrid y(n_p, big_k);
  for (const PathTap& p : paths) {
    const std::int64_t li = p.delay_tap;
    for (int l = 0; l < n_p; ++l) {
      for (int k = 0; k < big_k; ++k) {
        const std::int64_t dk = k - p.doppler_tap;
        const std::int64_t src_l = mod(l - li + floor_div(dk, big_k), n_p);
        const std::int64_t src_k = mod(dk, big_k);
        const cplx phase = phase_2nc(config, 2 * dk * li + big_k * (2 * l - li) * li);
        y(l, k) += p.gain * x(static_cast<int>(src_l), static_cast<int>(src_k)) * phase;
      }
    }
  }
  return y;
}

cplx kernel_hw(const AfdmConfig& config, std::span<const PathTap> paths, DdIndex out, DdIndex in) {
  require_proposed(config, "kernel_hw");
  const int n_p = config.n_p();
  const int big_k = config.k_chirps();
  cplx acc{};
  for (const PathTap& p : paths) {
    const std::int64_t li = p.delay_tap;
    if (mod(in.k - (out.k - p.doppler_tap), big_k) != 0) continue;
    const std::int64_t coupling = floor_div(out.k - (in.k + p.doppler_tap), big_k);
    if (mod(in.l - (out.l - li + coupling), n_p) != 0) continue;
    acc += p.gain * phase_2nc(config, 2 * li * in.k + 2LL * big_k * in.l * li + big_k * li * li);
  }
  return acc;
}

cplx interaction_coeff(const AfdmConfig& config, DdIndex in, DdIndex out, int l_i, int k_i) {
  return std::conj(caf_closed(config, out, in, l_i, k_i)) / static_cast<double>(config.n_c());
}

DdGrid io_convolve(const AfdmConfig& config, const DdGrid& x, std::span<const PathTap> paths) {
  require_proposed(config, "io_convolve");
  require_shape(config, x);
  DdGrid y(config.n_p(), config.k_chirps());
  for (int l = 0; l < config.n_p(); ++l)
    for (int k = 0; k < config.k_chirps(); ++k)
      for (int lq = 0; lq < config.n_p(); ++lq)
        for (int kq = 0; kq < config.k_chirps(); ++kq) {
          const cplx h = kernel_hw(config, paths, {l, k}, {lq, kq});
          if (h != cplx{}) y(l, k) += x(lq, kq) * h;
        }
  return y;
}

DdGrid io_general(const AfdmConfig& config, const DdGrid& x, std::span<const PathTap> paths) {
  require_proposed(config, "io_general");
  require_shape(config, x);
  DdGrid y(config.n_p(), config.k_chirps());
  for (const PathTap& p : paths)
    for (int l = 0; l < config.n_p(); ++l)
      for (int k = 0; k < config.k_chirps(); ++k)
        for (int lq = 0; lq < config.n_p(); ++lq)
          for (int kq = 0; kq < config.k_chirps(); ++kq) {
            const cplx a = interaction_coeff(config, {lq, kq}, {l, k}, p.delay_tap, p.doppler_tap);
            if (a != cplx{}) y(l, k) += p.gain * x(lq, kq) * a;
          }
  return y;
}

void write_grid_csv(std::ostream& os, const DdGrid& grid) {
  os << "l,k,re,im\n";
  for (int l = 0; l < grid.n_p(); ++l)
    for (int k = 0; k < grid.k_chirps(); ++k)
      os << l << ',' << k << ',' << format_number(grid(l, k).real()) << ',' << format_number(grid(l, k).imag())
         << '\n';
}

}  // namespace afdm
