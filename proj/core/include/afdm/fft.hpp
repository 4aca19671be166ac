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

// Thin FFTW wrapper. All transforms are unnormalized, matching FFTW:
//   forward:  X[m] = sum_n x[n] e^{-j 2 pi m n / N}
//   backward: x[n] = sum_m X[m] e^{+j 2 pi m n / N}

#pragma once

#include <span>

#include "afdm/types.hpp"

namespace afdm::fft {

void forward(std::span<cplx> data);
void backward(std::span<cplx> data);

// Strided in-place transforms over `count` interleaved sequences of length n:
// element i of sequence s lives at data[s * dist + i * stride].
void forward_many(std::span<cplx> data, int n, int count, int stride, int dist);
void backward_many(std::span<cplx> data, int n, int count, int stride, int dist);

}  // namespace afdm::fft
