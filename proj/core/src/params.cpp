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

#include "afdm/params.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace afdm {

namespace {

using wide = wide_int;

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  const wide l = static_cast<wide>(a / std::gcd(a, b)) * b;
  if (l > static_cast<wide>(INT64_MAX)) throw ConfigError("phase denominator overflow");
  return static_cast<std::int64_t>(l);
}

}  // namespace

std::string_view to_string(Preset preset) {
  switch (preset) {
    case Preset::proposed: return "proposed";
    case Preset::classic: return "classic";
    case Preset::ofdm: return "ofdm";
    case Preset::ocdm: return "ocdm";
    case Preset::periodic: return "periodic";
  }
  return "unknown";
}

Preset parse_preset(std::string_view name) {
  if (name == "proposed") return Preset::proposed;
  if (name == "classic") return Preset::classic;
  if (name == "ofdm") return Preset::ofdm;
  if (name == "ocdm") return Preset::ocdm;
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

ChirpCoefficient ChirpCoefficient::exact(Rational value) {
  ChirpCoefficient c;
  c.exact_ = true;
  c.rational_ = value;
  return c;
}

ChirpCoefficient ChirpCoefficient::real(long double value) {
  ChirpCoefficient c;
  c.exact_ = false;
  c.real_ = value;
  return c;
}

const Rational& ChirpCoefficient::rational() const {
  if (!exact_) throw ConfigError("chirp coefficient has no exact representation");
  return rational_;
}

long double ChirpCoefficient::value() const {
  return exact_ ? static_cast<long double>(rational_.num()) / rational_.den() : real_;
}

double ChirpCoefficient::quadratic_cycles(std::int64_t m) const {
  if (exact_) return rational_.quadratic_cycles(m);
  const long double mm = static_cast<long double>(m);
  const long double x = real_ * mm * mm;
  return static_cast<double>(x - std::floor(x));
}

AfdmConfig make_config(Preset preset, std::int64_t n_c, int k_chirps, Rational c1,
                       ChirpCoefficient c2, int l_cpp, std::optional<int> z_a) {
  AfdmConfig cfg;
  cfg.preset_ = preset;
  cfg.n_c_ = n_c;
  cfg.k_chirps_ = k_chirps;
  cfg.n_p_ = k_chirps > 0 ? static_cast<int>(n_c / k_chirps) : 0;
  cfg.c1_ = c1;
  cfg.c2_ = c2;
  cfg.l_cpp_ = l_cpp;
  cfg.z_a_ = z_a;
  cfg.validate();
  return cfg;
}

void AfdmConfig::validate() const {
  if (n_c_ < 1) throw ConfigError("n_c must be positive");
  if (k_chirps_ < 1) throw ConfigError("k_chirps must be positive");
  if (n_c_ % k_chirps_ != 0) throw ConfigError("n_c must be a multiple of k_chirps");
  if (static_cast<std::int64_t>(n_p_) * k_chirps_ != n_c_) throw ConfigError("n_c != k_chirps * n_p");
  if (l_cpp_ < 0 || l_cpp_ > n_c_) throw ConfigError("l_cpp must lie in [0, n_c]");
  if (z_a_) {
    if (*z_a_ < 1) throw ConfigError("z_a must be positive");
    if ((static_cast<std::int64_t>(*z_a_) * n_p_) % 2 != 0)
      throw ConfigError("z_a * N_p must be even");
    if (!(c1_ == Rational(*z_a_, 2LL * n_p_))) throw ConfigError("c1 must equal z_a / (2 N_p)");
    if (!c2_.is_zero()) throw ConfigError("periodic-chirp family requires c2 = 0");
  }
  if (preset_ == Preset::proposed) {
    if (n_p_ % 2 != 0) throw ConfigError("N_p must be even");
    if (!z_a_ || *z_a_ != 1) throw ConfigError("proposed preset requires z_a = 1");
  }
}

AfdmConfig AfdmConfig::with_cpp(int l_cpp) const {
  AfdmConfig copy = *this;
  copy.l_cpp_ = l_cpp;
  copy.validate();
  return copy;
}

cplx AfdmConfig::time_chirp(std::int64_t n) const { return unit_phasor(c1_.quadratic_residue(n), c1_.den()); }

cplx AfdmConfig::freq_chirp(std::int64_t m) const {
  if (c2_.is_exact()) return unit_phasor(c2_.rational().quadratic_residue(m), c2_.rational().den());
  return unit_phasor(c2_.quadratic_cycles(m));
}

cplx AfdmConfig::subcarrier_sample(std::int64_t m, std::int64_t n) const {
  // Sum the exact parts over a common denominator, then add the real c2 part.
  std::int64_t den = lcm_checked(c1_.den(), n_c_);
  wide num = static_cast<wide>(c1_.quadratic_residue(n)) * (den / c1_.den()) +
             static_cast<wide>(mod(mod(m, n_c_) * mod(n, n_c_), n_c_)) * (den / n_c_);
  if (c2_.is_exact()) {
    const Rational& c2 = c2_.rational();
    const std::int64_t den2 = lcm_checked(den, c2.den());
    num = num * (den2 / den) + static_cast<wide>(c2.quadratic_residue(m)) * (den2 / c2.den());
    den = den2;
    return unit_phasor(static_cast<std::int64_t>(num % den), den);
  }
  const double exact_part = static_cast<double>(static_cast<std::int64_t>(num % den)) / static_cast<double>(den);
  return unit_phasor(exact_part + c2_.quadratic_cycles(m));
}

std::string AfdmConfig::describe() const {
  std::ostringstream os;
  os << "preset=" << to_string(preset_) << " n_c=" << n_c_ << " k_chirps=" << k_chirps_ << " n_p=" << n_p_
     << " c1=" << c1_.str() << " c2=";
  if (c2_.is_exact()) {
    os << c2_.rational().str();
  } else {
    os.precision(19);
    os << c2_.value();
  }
  os << " l_cpp=" << l_cpp_;
  if (z_a_) os << " z_a=" << *z_a_;
  return os.str();
}

AfdmConfig proposed_params(int n_p, int k_chirps) {
  if (n_p < 2 || n_p % 2 != 0) throw ConfigError("N_p must be even");
  if (k_chirps < 1) throw ConfigError("k_chirps must be positive");
  return make_config(Preset::proposed, static_cast<std::int64_t>(n_p) * k_chirps, k_chirps,
                     Rational(1, 2LL * n_p), ChirpCoefficient::exact(Rational(0, 1)), 0, 1);
}

AfdmConfig periodic_chirp_params(int n_p, int k_chirps, int z_a) {
  if (n_p < 1 || k_chirps < 1 || z_a < 1) throw ConfigError("n_p, k_chirps and z_a must be positive");
  if ((static_cast<std::int64_t>(z_a) * n_p) % 2 != 0) throw ConfigError("z_a * N_p must be even");
  if (z_a == 1) return proposed_params(n_p, k_chirps);
  return make_config(Preset::periodic, static_cast<std::int64_t>(n_p) * k_chirps, k_chirps, Rational(z_a, 2LL * n_p),
                     ChirpCoefficient::exact(Rational(0, 1)), 0, z_a);
}

AfdmConfig classic_params(std::int64_t n_c, int k_max, int k_chirps) {
  if (n_c < 1) throw ConfigError("n_c must be positive");
  if (k_max < 0) throw ConfigError("k_max must be non-negative");
  return make_config(Preset::classic, n_c, k_chirps, Rational(2LL * k_max + 1, 2 * n_c),
                     ChirpCoefficient::real(std::sqrt(2.0L)));
}

AfdmConfig ofdm_params(std::int64_t n_c, int k_chirps) {
  return make_config(Preset::ofdm, n_c, k_chirps, Rational(0, 1), ChirpCoefficient::exact(Rational(0, 1)));
}

AfdmConfig ocdm_params(std::int64_t n_c, int k_chirps) {
  if (n_c < 1) throw ConfigError("n_c must be positive");
  const Rational c(1, 2 * n_c);
  return make_config(Preset::ocdm, n_c, k_chirps, c, ChirpCoefficient::exact(c));
}

AfdmConfig make_preset(Preset preset, std::int64_t n_c, int k_chirps, int k_max) {
  if (k_chirps < 1 || n_c < 1 || n_c % k_chirps != 0)
    throw ConfigError("n_c must be a positive multiple of k_chirps");
  switch (preset) {
    case Preset::proposed: return proposed_params(static_cast<int>(n_c / k_chirps), k_chirps);
    case Preset::classic: return classic_params(n_c, k_max, k_chirps);
    case Preset::ofdm: return ofdm_params(n_c, k_chirps);
    case Preset::ocdm: return ocdm_params(n_c, k_chirps);
    case Preset::periodic: break;
  }
  throw ConfigError("periodic-chirp configs need an explicit z_a (periodic_chirp_params)");
}

void validate_scenario(const AfdmConfig& config, const ScenarioConfig& scenario) {
  if (scenario.l_max < 0 || scenario.k_max < 0) throw ConfigError("l_max and k_max must be non-negative");
  if (!(scenario.bandwidth_hz > 0.0)) throw ConfigError("bandwidth_hz must be positive");
  if (!(scenario.pilot_overhead >= 0.0 && scenario.pilot_overhead <= 1.0))
    throw ConfigError("pilot_overhead must lie in [0, 1]");
  if (config.is_proposed()) {
    if (config.k_chirps() <= 2 * scenario.k_max)
      throw ConfigError("path separability requires k_chirps > 2 k_max");
    if (config.n_p() <= scenario.l_max) throw ConfigError("path separability requires n_p > l_max");
  }
  if (config.l_cpp() > 0 && config.l_cpp() <= scenario.l_max)
    throw ConfigError("l_cpp must exceed l_max");
}

}  // namespace afdm
