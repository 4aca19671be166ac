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

// The DD-DAFT domain: DAFT symbols re-indexed on an n_p x K delay-Doppler
// grid through m = (-K l - k) mod n_c, and three equivalent forms of the
// channel input-output relation on that grid (general interaction-coefficient
// sum, compact shifted form, 2D convolution kernel).
//
// Path Doppler taps are signed. The coupling term floor((k - k_i)/K) is taken
// on the signed difference; only the resulting Doppler index is reduced mod K.

#pragma once

#include <iosfwd>
#include <span>

#include "afdm/channel.hpp"
#include "afdm/params.hpp"
#include "afdm/waveform.hpp"

namespace afdm {

// n_p x K complex grid, axis 0 = delay l, axis 1 = Doppler k, row-major.
class DdGrid {
 public:
  DdGrid() = default;
  DdGrid(int n_p, int k_chirps) : n_p_(n_p), k_(k_chirps), cells_(static_cast<std::size_t>(n_p) * k_chirps) {}

  int n_p() const { return n_p_; }
  int k_chirps() const { return k_; }

  cplx& operator()(int l, int k) { return cells_[static_cast<std::size_t>(l) * k_ + k]; }
  const cplx& operator()(int l, int k) const { return cells_[static_cast<std::size_t>(l) * k_ + k]; }

  CVec& cells() { return cells_; }
  const CVec& cells() const { return cells_; }

 private:
  int n_p_ = 0;
  int k_ = 0;
  CVec cells_;
};

DdGrid vector_to_grid(const AfdmConfig& config, const DaftSymbols& v);
DaftSymbols grid_to_vector(const AfdmConfig& config, const DdGrid& grid);

// Y[l,k] = sum_i h_i X[(l - l_i + dl)_{n_p}, (k - k_i)_K] e^{j phi_ch},
//   dl = floor((k - k_i)/K),
//   phi_ch = 2 pi (k - k_i) l_i / n_c + pi (2l - l_i) l_i / n_p.
DdGrid io_predict(const AfdmConfig& config, const DdGrid& x, std::span<const PathTap> paths);

// h_w[l,k; l',k'] of the 2D-convolution form.
cplx kernel_hw(const AfdmConfig& config, std::span<const PathTap> paths, DdIndex out, DdIndex in);

// A_{(l',k'),(l,k)}[l_i,k_i] = conj(CAF^{psi_(l,k), psi_(l',k')}[l_i,k_i]) / n_c.
cplx interaction_coeff(const AfdmConfig& config, DdIndex in, DdIndex out, int l_i, int k_i);

// Y via the full sum over (l', k') with kernel_hw.
DdGrid io_convolve(const AfdmConfig& config, const DdGrid& x, std::span<const PathTap> paths);

// Y via the general sum over paths and (l', k') with interaction_coeff.
DdGrid io_general(const AfdmConfig& config, const DdGrid& x, std::span<const PathTap> paths);

// CSV "l,k,re,im".
void write_grid_csv(std::ostream& os, const DdGrid& grid);

}  // namespace afdm
