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

// Delay-Doppler sensing: time-frequency matched filter, dechirp, DD-DAFT
// matched filter, 2D CA-CFAR and peak picking.
//
// Maps are n_p x K complex surfaces indexed (delay l, Doppler bin k).

#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "afdm/dd_daft.hpp"
#include "afdm/params.hpp"
#include "afdm/waveform.hpp"

namespace afdm {

enum class Algorithm { tfmf, dechirp, ddmf };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);

class DelayDopplerMap {
 public:
  DelayDopplerMap(int n_p, int k_chirps, Algorithm source)
      : n_p_(n_p), k_(k_chirps), source_(source), cells_(static_cast<std::size_t>(n_p) * k_chirps) {}

  int n_p() const { return n_p_; }
  int k_chirps() const { return k_; }
  Algorithm source() const { return source_; }

  cplx& operator()(int l, int k) { return cells_[static_cast<std::size_t>(l) * k_ + k]; }
  const cplx& operator()(int l, int k) const { return cells_[static_cast<std::size_t>(l) * k_ + k]; }

  double magnitude_db(int l, int k) const;

  const CVec& cells() const { return cells_; }

 private:
  int n_p_;
  int k_;
  Algorithm source_;
  CVec cells_;
};

// Reshape to n_p x K, n_p-point FFT of both along fast time (scaled
// 1/sqrt(n_p)), MF = R conj(S), inverse n_p-point FFT (1/sqrt(n_p)), then a
// K-point inverse FFT along slow time (1/sqrt(K)).
DelayDopplerMap tfmf(const AfdmConfig& config, const TimeSignal& r, const TimeSignal& s_ref);

// d = r conj(pilot), forward n_p-point FFT per chirp, inverse K-point FFT
// across chirps. A delay of l samples beats at bin (-l) mod n_p; rows are
// re-indexed so that row l holds that bin.
DelayDopplerMap dechirp(const AfdmConfig& config, const TimeSignal& r, const TimeSignal& pilot);

// Z[l,k] = sum_{n,m} conj(Y[n,m]) X[(n - l + floor((m - k)/K))_{n_p}, (m - k)_K]
//          * exp(j 2 pi (l (m - k)/n_c + n l / n_p - l^2 / (2 n_p))).
// Hypothesis k runs over the signed range [-K/2, K/2) and lands in column
// k mod K. Proposed preset only.
DelayDopplerMap ddmf(const AfdmConfig& config, const DdGrid& y, const DdGrid& x);

struct Detection {
  int l = 0;
  int k = 0;
  double magnitude = 0.0;  // |z|
  double threshold = 0.0;  // sqrt(alpha * noise power)
};

struct CfarParams {
  int train = 2;
  int guard = 1;
  double pfa = 1e-4;
};

// alpha = N_t (pfa^{-1/N_t} - 1)
double cfar_alpha(int n_train, double pfa);

// Square training ring, cyclic at the map edges. A zero noise estimate is
// replaced by the smallest positive double. Throws when the window
// 2 (train + guard) + 1 exceeds either map dimension.
std::vector<Detection> ca_cfar_2d(const DelayDopplerMap& map, const CfarParams& params = {});

// Strongest-first merge of detections within +-1 cell (cyclic).
std::vector<Detection> cluster_detections(std::vector<Detection> detections, int n_p, int k_chirps);

// True when any detection lies within +-1 cell (cyclic) of target.
bool detected_near(const std::vector<Detection>& detections, DdIndex target, int n_p, int k_chirps);

struct Peak {
  int l = 0;
  int k = 0;
  double magnitude = 0.0;
};

// Largest |z|; ties go to the smallest l, then the smallest k.
Peak peak(const DelayDopplerMap& map);

// CSV "l,k,magnitude_db".
void write_ddm_csv(std::ostream& os, const DelayDopplerMap& map);

}  // namespace afdm
