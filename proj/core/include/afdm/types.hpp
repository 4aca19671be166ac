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

#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace afdm {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

// Wide intermediate for exact phase-numerator arithmetic.
__extension__ typedef __int128 wide_int;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Raised for every inconsistent configuration or out-of-contract argument.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Euclidean modulo: result in [0, m) for m > 0.
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Floor division for signed operands, b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

// e^{j 2 pi cycles}. The argument is reduced to [-1/2, 1/2) first so large
// integer parts never reach the trig functions.
cplx unit_phasor(double cycles);

// e^{j 2 pi num / den}, reduced exactly in integers before conversion.
cplx unit_phasor(std::int64_t num, std::int64_t den);

}  // namespace afdm
