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

#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "afdm/waveform.hpp"
#include "oracles.hpp"

using afdm::cplx;
using afdm::CVec;

namespace {

CVec random_symbols(std::int64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CVec v(static_cast<std::size_t>(n));
  for (cplx& x : v) x = {g(rng), g(rng)};
  return v;
}

std::vector<afdm::AfdmConfig> small_presets() {
  return {afdm::proposed_params(8, 4), afdm::classic_params(32, 1, 4), afdm::ofdm_params(32, 4),
          afdm::ocdm_params(32, 4), afdm::periodic_chirp_params(8, 4, 3)};
}

}  // namespace

TEST_CASE("subcarrier samples", "[waveform]") {
  const auto cfg = afdm::proposed_params(64, 8);
  const auto psi0 = afdm::subcarrier(cfg, 0);
  CHECK(std::abs(psi0.samples[0] - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(psi0.samples[64] - cplx(1, 0)) < 1e-15);
  for (const cplx& v : afdm::subcarrier(cfg, 77).samples) CHECK(std::abs(std::abs(v) - 1.0) < 1e-14);

  const auto ofdm = afdm::ofdm_params(16);
  const auto s1 = afdm::subcarrier(ofdm, 1);
  for (int n = 0; n < 16; ++n) CHECK(std::abs(s1.samples[n] - std::polar(1.0, afdm::kTwoPi * n / 16)) < 1e-14);
  CHECK_THROWS_AS(afdm::subcarrier(cfg, 512), afdm::ConfigError);
}

TEST_CASE("fast modulation matches the direct double sum", "[waveform]") {
  for (const auto& cfg : small_presets()) {
    const CVec x = random_symbols(cfg.n_c(), 11);
    const auto s = afdm::modulate(cfg, {x});
    CHECK(oracle::max_abs_diff(s.samples, oracle::modulate(oracle::chirps_of(cfg), x)) < 1e-10);
    const auto y = afdm::demodulate(cfg, s);
    CHECK(oracle::max_abs_diff(y.values, x) < 1e-10);
    CHECK(oracle::max_abs_diff(y.values, oracle::demodulate(oracle::chirps_of(cfg), s.samples)) < 1e-10);
  }
}

TEST_CASE("modulation edge cases", "[waveform]") {
  const auto cfg = afdm::proposed_params(8, 4);
  CVec e0(32);
  e0[0] = 1.0;
  const auto s = afdm::modulate(cfg, {e0});
  const auto psi0 = afdm::subcarrier(cfg, 0);
  for (int n = 0; n < 32; ++n) CHECK(std::abs(s.samples[n] - psi0.samples[n] / std::sqrt(32.0)) < 1e-14);
  const auto back = afdm::demodulate(cfg, s);
  CHECK(oracle::max_abs_diff(back.values, e0) < 1e-14);

  const auto zero = afdm::modulate(cfg, {CVec(32)});
  for (const cplx& v : zero.samples) CHECK(v == cplx{});
  CHECK_THROWS_AS(afdm::modulate(cfg, {CVec(31)}), afdm::ConfigError);
  CHECK_THROWS_AS(afdm::demodulate(cfg, {CVec(33), false}), afdm::ConfigError);
}

TEST_CASE("quasi-periodicity of the modulated signal", "[waveform]") {
  // s[n + N] = e^{j 2 pi c1 (N^2 + 2 N n)} s[n], with s evaluated by the
  // direct sum on an extended index range.
  for (const auto& cfg : {afdm::classic_params(16, 1, 4), afdm::ocdm_params(16, 4), afdm::proposed_params(4, 4)}) {
    const auto ch = oracle::chirps_of(cfg);
    const CVec x = random_symbols(16, 5);
    for (std::int64_t n = 0; n < 16; ++n) {
      std::complex<long double> a{}, b{};
      for (std::int64_t m = 0; m < 16; ++m) {
        const cplx pa = oracle::psi(ch, m, n + 16);
        const cplx pb = oracle::psi(ch, m, n);
        a += std::complex<long double>((x[m] * pa).real(), (x[m] * pa).imag());
        b += std::complex<long double>((x[m] * pb).real(), (x[m] * pb).imag());
      }
      const cplx factor = oracle::phasor(ch.c1 * (16.0L * 16 + 2.0L * 16 * n));
      const cplx lhs(static_cast<double>(a.real()), static_cast<double>(a.imag()));
      const cplx rhs = factor * cplx(static_cast<double>(b.real()), static_cast<double>(b.imag()));
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("CPP insertion and removal", "[waveform]") {
  const auto prop = afdm::proposed_params(8, 4).with_cpp(5);
  const auto s = afdm::modulate(prop, {random_symbols(32, 3)});
  const auto with = afdm::add_cpp(prop, s);
  REQUIRE(with.samples.size() == 37);
  CHECK(with.has_cpp);
  for (int i = 0; i < 5; ++i) CHECK(with.samples[i] == s.samples[27 + i]);
  const auto stripped = afdm::remove_cpp(prop, with);
  CHECK(stripped.samples == s.samples);
  CHECK_THROWS_AS(afdm::remove_cpp(prop, s), afdm::ConfigError);
  CHECK_THROWS_AS(afdm::add_cpp(prop, with), afdm::ConfigError);

  const auto no_cpp = afdm::proposed_params(8, 4);
  CHECK(afdm::add_cpp(no_cpp, s).samples == s.samples);

  const auto classic = afdm::classic_params(8, 0).with_cpp(2);
  const auto ch = oracle::chirps_of(classic);
  const auto sc = afdm::modulate(classic, {random_symbols(8, 4)});
  const auto wc = afdm::add_cpp(classic, sc);
  for (int n = -2; n < 0; ++n) {
    const cplx expect = oracle::phasor(-ch.c1 * (64.0L + 16.0L * n)) * sc.samples[n + 8];
    CHECK(std::abs(wc.samples[n + 2] - expect) < 1e-14);
  }
}

TEST_CASE("FMCW chirp train", "[waveform]") {
  const auto f4 = afdm::fmcw_signal(4, 1);
  const cplx expect[] = {1.0, std::polar(1.0, std::numbers::pi / 4), std::polar(1.0, std::numbers::pi),
                         std::polar(1.0, std::numbers::pi * 9 / 4)};
  for (int n = 0; n < 4; ++n) CHECK(std::abs(f4.samples[n] - expect[n]) < 1e-15);
  CHECK_THROWS_AS(afdm::fmcw_signal(5, 2), afdm::ConfigError);
  const auto f = afdm::fmcw_signal(64, 8);
  CHECK(f.samples[0] == cplx(1.0, 0.0));
  CHECK(oracle::max_abs_diff(f.samples, afdm::subcarrier(afdm::proposed_params(64, 8), 0).samples) < 1e-12);
}

TEST_CASE("delay-Doppler index map", "[waveform]") {
  const auto cfg = afdm::proposed_params(64, 8);
  CHECK(afdm::dd_to_daft_index(cfg, {0, 0}) == 0);
  CHECK(afdm::dd_to_daft_index(cfg, {3, 0}) == 488);
  CHECK(afdm::dd_to_daft_index(cfg, {10, 3}) == 429);
  std::vector<bool> seen(512, false);
  for (int l = 0; l < 64; ++l)
    for (int k = 0; k < 8; ++k) {
      const auto m = afdm::dd_to_daft_index(cfg, {l, k});
      CHECK_FALSE(seen[m]);
      seen[m] = true;
      CHECK(afdm::daft_index_to_dd(cfg, m) == afdm::DdIndex{l, k});
    }
  CHECK_THROWS_AS(afdm::dd_to_daft_index(cfg, {64, 0}), afdm::ConfigError);
  CHECK_THROWS_AS(afdm::dd_to_daft_index(cfg, {0, -1}), afdm::ConfigError);
  CHECK_THROWS_AS(afdm::daft_index_to_dd(cfg, 512), afdm::ConfigError);
  CHECK(afdm::signed_doppler(7, 8) == -1);
  CHECK(afdm::signed_doppler(3, 8) == 3);
  CHECK(afdm::signed_doppler(4, 8) == -4);
}

TEST_CASE("subcarriers are delayed and Doppler-shifted copies of the base chirp", "[waveform]") {
  const auto cfg = afdm::proposed_params(4, 2);
  const auto e10 = afdm::echo_form_subcarrier(cfg, {1, 0});
  CHECK(oracle::max_abs_diff(e10.samples, afdm::subcarrier(cfg, 6).samples) < 1e-12);
  const auto e01 = afdm::echo_form_subcarrier(cfg, {0, 1});
  CHECK(oracle::max_abs_diff(e01.samples, afdm::subcarrier(cfg, 7).samples) < 1e-12);
  CHECK(oracle::max_abs_diff(afdm::echo_form_subcarrier(cfg, {0, 0}).samples, afdm::subcarrier(cfg, 0).samples) ==
        0.0);
  CHECK_THROWS_AS(afdm::echo_form_subcarrier(afdm::classic_params(8, 0, 2), {0, 0}), afdm::ConfigError);
}

TEST_CASE("signal CSV round trip", "[waveform]") {
  const CVec v = random_symbols(9, 2);
  std::stringstream ss;
  afdm::write_csv(ss, v);
  CHECK(ss.str().rfind("index,re,im\n", 0) == 0);
  CHECK(afdm::read_csv(ss) == v);
  std::stringstream bad("index,re,im\n0,1\n");
  CHECK_THROWS_AS(afdm::read_csv(bad), afdm::ConfigError);
}
