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

#include <cmath>
#include <numeric>
#include <sstream>

#include "afdm/rational.hpp"
#include "afdm/types.hpp"

namespace afdm {

cplx unit_phasor(double cycles) {
  double frac = cycles - std::floor(cycles);
  if (frac >= 0.5) frac -= 1.0;
  if (frac == 0.0) return {1.0, 0.0};
  if (frac == -0.5) return {-1.0, 0.0};
  if (frac == 0.25) return {0.0, 1.0};
  if (frac == -0.25) return {0.0, -1.0};
  const double angle = kTwoPi * frac;
  return {std::cos(angle), std::sin(angle)};
}

cplx unit_phasor(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw ConfigError("unit_phasor: non-positive denominator");
  const std::int64_t r = mod(num, den);
  return unit_phasor(static_cast<double>(r) / static_cast<double>(den));
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ConfigError("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::quadratic_residue(std::int64_t n) const {
  using wide = wide_int;
  const wide r = static_cast<wide>(mod(n, den_));
  const wide sq = (r * r) % den_;
  const wide prod = (static_cast<wide>(mod(num_, den_)) * sq) % den_;
  return static_cast<std::int64_t>(prod);
}

double Rational::quadratic_cycles(std::int64_t n) const {
  return static_cast<double>(quadratic_residue(n)) / static_cast<double>(den_);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num_ << '/' << den_;
  return os.str();
}

}  // namespace afdm
