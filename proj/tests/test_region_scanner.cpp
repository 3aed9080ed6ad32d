// Copyright 2026 The skewes-cert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "skewes/error.hpp"
#include "skewes/region_scanner.hpp"
#include "skewes/zero_catalog.hpp"
#include "support/test_data.hpp"

using skewes::ScanSeries;
using skewes::ZeroCatalog;

namespace {

ZeroCatalog first_zeros(std::size_t n) {
  const auto* z = testdata::zeros_100k();
  std::vector<double> v;
  if (z) {
    for (std::size_t i = 0; i < n && i < z->size(); ++i) v.push_back((*z)[i]);
  } else {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> gap(0.1, 1.5);
    double g = 14.134725141734694;
    for (std::size_t i = 0; i < n; ++i, g += gap(rng)) v.push_back(g);
  }
  return ZeroCatalog(std::move(v), 1e-9, "first");
}

ScanSeries series_of(std::vector<double> values) {
  ScanSeries s;
  for (std::size_t i = 0; i < values.size(); ++i) s.omegas.push_back(static_cast<double>(i));
  s.values = std::move(values);
  s.spacing = 1.0;
  return s;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::size_t count_of(const std::string& text, const std::string& what) {
  std::size_t n = 0;
  for (auto p = text.find(what); p != std::string::npos; p = text.find(what, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("f_T basics") {
  const ZeroCatalog c = first_zeros(5000);
  CHECK(skewes::f_T(c, {727.0, 0.0}, 14.0) == -1.0);
  const double at0 = skewes::f_T(c, {0.0, 0.0}, c.last());
  CHECK(at0 < -1.0);
  CHECK(at0 > -1.0232);
  CHECK_THROWS_AS(skewes::f_T(c, {1.0, 0.0}, c.last() + 1.0), skewes::Error);
  // repeated evaluation is bit-identical
  const double a = skewes::F_T(c, {316.1456, 0.0}, c.last());
  CHECK(same_bits(a, skewes::F_T(c, {316.1456, 0.0}, c.last())));
  // F_T is f_T at omega ln 10
  CHECK(std::fabs(a - skewes::f_T(c, skewes::DoubleDouble(316.1456) * skewes::dd::kLn10, c.last())) == 0.0);
}

TEST_CASE("conjugate pairs leave no imaginary part") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> g(14.0, 1e5), w(1.0, 800.0);
  for (int rep = 0; rep < 50; ++rep) {
    std::complex<long double> sum = 0;
    const double omega = w(rng);
    for (int k = 0; k < 200; ++k) {
      const double gamma = g(rng);
      const std::complex<long double> rho(0.5L, gamma), conj_rho(0.5L, -gamma);
      const long double ph = static_cast<long double>(omega) * gamma;
      sum += std::polar(1.0L, ph) / rho + std::polar(1.0L, -ph) / conj_rho;
    }
    CHECK(std::fabs(static_cast<double>(sum.imag())) < 1e-15);
  }
}

TEST_CASE("scan grid and determinism") {
  const ZeroCatalog c = first_zeros(20000);
  const auto two = skewes::scan(c, 300.0, 320.0, 2, c.last());
  REQUIRE(two.omegas.size() == 2);
  CHECK(two.omegas.front() == 300.0);
  CHECK(two.omegas.back() == 320.0);
  CHECK(two.spacing == 20.0);
  CHECK(two.zeros_used == c.size());
  CHECK(two.values[1] == skewes::F_T(c, {320.0, 0.0}, c.last()));

  const auto seq = skewes::scan(c, 300.0, 320.0, 101, c.last(), {4096, 1});
  const auto par = skewes::scan(c, 300.0, 320.0, 101, c.last(), {4096, 4});
  for (std::size_t i = 0; i < seq.values.size(); ++i) {
    CHECK(same_bits(seq.values[i], par.values[i]));
    CHECK(same_bits(seq.values[i], skewes::F_T(c, {seq.omegas[i], 0.0}, c.last(), {4096, 1})));
  }
  for (std::size_t i = 1; i < seq.omegas.size(); ++i) CHECK(seq.omegas[i] > seq.omegas[i - 1]);

  CHECK_THROWS_AS(skewes::scan(c, 320.0, 300.0, 10, c.last()), skewes::Error);
  CHECK_THROWS_AS(skewes::scan(c, 300.0, 320.0, 1, c.last()), skewes::Error);
}

TEST_CASE("raising T moves f_T by at most twice the added reciprocal sum") {
  const ZeroCatalog c = first_zeros(20000);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> w(1.0, 500.0);
  const double heights[] = {100.0, 1000.0, 5000.0, c.last()};
  for (int rep = 0; rep < 20; ++rep) {
    const skewes::DoubleDouble omega(w(rng));
    for (std::size_t i = 0; i + 1 < std::size(heights); ++i) {
      const double lo = heights[i], hi = heights[i + 1];
      double recip = 0;
      for (std::size_t k = c.count_below(lo); k < c.count_below(hi); ++k) recip += 1 / c[k];
      const double bracket = skewes::reciprocal_sum_bracket(hi).hi - skewes::reciprocal_sum_bracket(lo).lo;
      const double diff = std::fabs(skewes::f_T(c, omega, hi) - skewes::f_T(c, omega, lo));
      CHECK(diff <= 2 * recip * (1 + 1e-12));
      CHECK(2 * recip <= 2 * bracket);
    }
  }
}

TEST_CASE("candidates") {
  CHECK(skewes::find_candidates(series_of({-0.5, -0.5, -0.5, -0.5}), -1.0).empty());
  const auto s = series_of({-0.3, -0.1, -0.4, -0.2, -0.35, 0.0});
  // endpoints are never candidates
  const auto all = skewes::find_candidates(s, -1.0);
  REQUIRE(all.size() == 2);
  CHECK(all[0].omega == 1.0);
  CHECK(all[1].omega == 3.0);
  CHECK(skewes::find_candidates(s, -0.15).size() == 1);
  CHECK(skewes::find_candidates(s, 0.5).empty());
  // plateaus are not strict maxima
  CHECK(skewes::find_candidates(series_of({-1, 0, 0, -1}), -2.0).empty());
}

TEST_CASE("peak values with 1e5 zeros") {
  const auto* z = testdata::zeros_100k();
  if (!z) return;
  const double T = z->last();
  // peaks are narrower than 1e-4 in the exponent; scan a fine window around each
  struct Peak {
    double omega;
    double value;  // F_T at the listed exponent, from an independent float64 sum over the same zeros
  };
  const Peak peaks[] = {{154.9746, -0.188383880698},
                        {157.8305, -0.190071558989},
                        {175.9619, -0.098921234817},
                        {41.6522, -0.071851360816}};
  for (const auto& p : peaks) {
    CHECK(std::fabs(skewes::F_T(*z, {p.omega, 0.0}, T) - p.value) < 1e-7);
    const auto s = skewes::scan(*z, p.omega - 0.01, p.omega + 0.01, 201, T);
    const auto c = skewes::find_candidates(s, -0.25);
    const skewes::Candidate* best = nullptr;
    for (const auto& k : c)
      if (!best || k.value > best->value) best = &k;
    REQUIRE(best != nullptr);
    CHECK(std::fabs(best->omega - p.omega) <= 0.05);
    CHECK(best->value < 0);
  }
  // near the zero line but still below it with 1e5 zeros
  CHECK(std::fabs(skewes::F_T(*z, {316.1456, 0.0}, T) - -0.005858317052) < 1e-7);
  const auto s = skewes::scan(*z, 175.95, 175.97, 201, T);
  for (const auto& k : skewes::find_candidates(s, -0.1))
    if (std::fabs(k.omega - 175.9619) <= 0.05) CHECK(k.comment == "detected by Bays-Hudson");
}

TEST_CASE("peak values at T = gamma_1000000" * doctest::skip(testdata::zeros_2m() == nullptr)) {
  const auto* z = testdata::zeros_2m();
  const double T = (*z)[999999];
  // peaks are ~5e-6 wide here, so the printed 4-decimal exponents are off-peak;
  // compare the maximum over the rounding interval of each exponent
  const double listed[][2] = {{316.1456, 0.0195}, {41.6522, -0.0659}};
  for (const auto& row : listed) {
    const auto s = skewes::scan(*z, row[0] - 5e-5, row[0] + 5e-5, 101, T);
    std::size_t k = 0;
    for (std::size_t i = 1; i < s.values.size(); ++i)
      if (s.values[i] > s.values[k]) k = i;
    MESSAGE("max F_T near " << row[0] << " = " << s.values[k] << " at " << s.omegas[k]);
    CHECK(std::fabs(s.values[k] - row[1]) < 2e-3);
  }
}

TEST_CASE("csv and svg") {
  ScanSeries s = series_of({-0.123456789012345678, 0.5});
  s.omegas = {300.0, 320.0};
  const std::string csv = skewes::render_csv(s);
  CHECK(count_of(csv, "\n") == 3);
  CHECK(csv.rfind("omega,f_value\n", 0) == 0);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  for (std::size_t i = 0; i < 2; ++i) {
    std::getline(in, line);
    const auto comma = line.find(',');
    const double w = std::stod(line.substr(0, comma)), v = std::stod(line.substr(comma + 1));
    CHECK(w == s.omegas[i]);
    CHECK(std::fabs(v - s.values[i]) <= 5e-15 * std::fabs(s.values[i]));
  }
  const std::string svg = skewes::render_svg(s);
  CHECK(count_of(svg, "<polyline") == 1);
  CHECK(svg.find("</svg>") != std::string::npos);

  const auto dir = std::filesystem::temp_directory_path();
  const auto csv_path = dir / "skewes_scan_test.csv";
  skewes::emit_csv(s, csv_path);
  std::ifstream f(csv_path);
  std::stringstream back;
  back << f.rdbuf();
  CHECK(back.str() == csv);
  std::filesystem::remove(csv_path);
  try {
    skewes::emit_svg(s, "/nonexistent-dir/x.svg");
    FAIL("expected an I/O error");
  } catch (const skewes::Error& e) {
    CHECK(e.code() == skewes::ErrorCode::kIo);
  }
}
