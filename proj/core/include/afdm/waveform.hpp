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

// AFDM modulation / demodulation, CPP handling, discrete FMCW synthesis and
// the delay-Doppler <-> DAFT subcarrier index map.

#pragma once

#include <cstdint>
#include <iosfwd>

#include "afdm/params.hpp"
#include "afdm/types.hpp"

namespace afdm {

// DAFT-domain symbols x[m] (transmit) or Y[m] (receive), length n_c.
struct DaftSymbols {
  CVec values;
};

// Complex baseband samples, with or without the chirp-periodic prefix.
struct TimeSignal {
  CVec samples;
  bool has_cpp = false;
};

// Delay-Doppler coordinate. Doppler is stored in [0, K) unless a caller says
// otherwise; see signed_doppler().
struct DdIndex {
  int l = 0;
  int k = 0;
  friend bool operator==(const DdIndex&, const DdIndex&) = default;
};

// Maps a Doppler bin in [0, K) to [-K/2, K/2 - 1].
constexpr int signed_doppler(int k, int k_chirps) { return k >= (k_chirps + 1) / 2 ? k - k_chirps : k; }

TimeSignal subcarrier(const AfdmConfig& config, std::int64_t m);

// Pre-chirp by c2, inverse DFT, post-chirp by c1. Unitary (1/sqrt(n_c)).
TimeSignal modulate(const AfdmConfig& config, const DaftSymbols& x);

// Y[m] = (1/sqrt(n_c)) sum_n r[n] conj(psi_m[n]); inverse of modulate().
DaftSymbols demodulate(const AfdmConfig& config, const TimeSignal& r);

TimeSignal add_cpp(const AfdmConfig& config, const TimeSignal& s);
TimeSignal remove_cpp(const AfdmConfig& config, const TimeSignal& r);

// K back-to-back copies of the base chirp e^{j pi n^2 / n_p}. n_p must be even.
TimeSignal fmcw_signal(int n_p, int k_chirps);

// m = (n_c - K l - k) mod n_c, and its inverse.
std::int64_t dd_to_daft_index(const AfdmConfig& config, DdIndex index);
DdIndex daft_index_to_dd(const AfdmConfig& config, std::int64_t m);

// psi_0[(n - l) mod n_c] e^{-j 2 pi k n / n_c} e^{-j pi l^2 / n_p}.
// Proposed preset only; equals subcarrier(dd_to_daft_index(l, k)).
TimeSignal echo_form_subcarrier(const AfdmConfig& config, DdIndex index);

// CSV with header "index,re,im".
void write_csv(std::ostream& os, const CVec& values);
CVec read_csv(std::istream& is);

}  // namespace afdm
