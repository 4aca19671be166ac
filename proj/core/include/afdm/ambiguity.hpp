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

// Discrete periodic ambiguity function (DPAF).
//
//   Lambda^{a,b}[l, k] = sum_n a[n] conj(b[(n - l) mod N]) e^{j 2 pi k n / N}
//
// The brute-force evaluator works for any pair of equal-length signals. For
// the proposed preset the auto- and cross-ambiguity of the subcarriers have a
// sparse closed form: psi_0's AAF is N_c e^{-j pi l^2 / N_p} on the support
// {k = 0 mod K, l = -floor(k/K) mod N_p} and zero elsewhere, and every other
// subcarrier pair reduces to it with a phase rotation.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "afdm/params.hpp"
#include "afdm/waveform.hpp"

namespace afdm {

struct DpafSample {
  std::int64_t l = 0;
  std::int64_t k = 0;
  cplx value;
};

cplx dpaf_brute(std::span<const cplx> a, std::span<const cplx> b, std::int64_t l, std::int64_t k);

// The closed forms below require the proposed preset and accept any integer
// (l, k); subcarriers are named by their delay-Doppler index.
cplx aaf_psi0_closed(const AfdmConfig& config, std::int64_t l, std::int64_t k);
cplx aaf_shifted_closed(const AfdmConfig& config, DdIndex p, std::int64_t l, std::int64_t k);
cplx caf_closed(const AfdmConfig& config, DdIndex p, DdIndex q, std::int64_t l, std::int64_t k);

// True when (l, k) lies on the non-zero support of caf_closed(p, q, ., .).
bool caf_support(const AfdmConfig& config, DdIndex p, DdIndex q, std::int64_t l, std::int64_t k);

// Full (l, k) in [0, N)^2 plane, l-major. One inverse FFT per delay row.
std::vector<DpafSample> dpaf_surface_brute(std::span<const cplx> a, std::span<const cplx> b);

// Cross-ambiguity surface of subcarriers m_a and m_b: closed form for the
// proposed preset, brute force for every other preset.
std::vector<DpafSample> dpaf_surface(const AfdmConfig& config, std::int64_t m_a, std::int64_t m_b);

// CSV "l,k,re,im,magnitude_db"; magnitudes below 1e-15 are floored at -300 dB.
void write_af_csv(std::ostream& os, const std::vector<DpafSample>& surface);

}  // namespace afdm
