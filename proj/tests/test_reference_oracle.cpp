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
#include <numbers>
#include <random>
#include <vector>

#include "skewes/error.hpp"
#include "skewes/reference_oracle.hpp"
#include "support/gauss_legendre.hpp"
#include "support/mp.hpp"
#include "support/test_data.hpp"

using skewes::PrimeTable;
using cplx = std::complex<double>;

namespace {

// trial division, independent of the sieve
bool slow_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

double li_mp(double x) { return mp::eint(mp::log(mp::Real(x))).d(); }

// li(e^z) from the multiprecision series; bits scaled to the cancellation
cplx li_exp_mp(cplx z) {
  const mpfr_prec_t saved = mp::kBits;
  mp::kBits = 128 + static_cast<mpfr_prec_t>(2 * std::abs(z));
  const auto v = mp::li_exp_series({mp::Real(z.real()), mp::Real(z.imag())});
  const cplx out(v.re.d(), v.im.d());
  mp::kBits = saved;
  return out;
}

// sum over prime powers p^k <= x of 1/k, half weight at x itself
double Pi0_brute(double x) {
  double s = 0;
  for (std::uint64_t p = 2; static_cast<double>(p) <= x; ++p) {
    if (!slow_prime(p)) continue;
    double q = static_cast<double>(p);
    for (int k = 1; q <= x; ++k, q *= static_cast<double>(p)) s += (q == x ? 0.5 : 1.0) / k;
  }
  return s;
}

}  // namespace

TEST_CASE("sieve counts") {
  CHECK(skewes::sieve_pi(2) == 1);
  CHECK(skewes::sieve_pi(100) == 25);
  CHECK(skewes::sieve_pi(1'000'000) == 78498);
  const PrimeTable t(200'000);
  std::uint64_t count = 0;
  for (std::uint64_t n = 0; n <= 20'000; ++n) {
    count += slow_prime(n);
    CHECK(t.is_prime(n) == slow_prime(n));
    if (n >= 2) CHECK(t.pi(n) == count);
  }
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = rng() % 200'000;
    CHECK(t.is_prime(n) == slow_prime(n));
  }
  CHECK(t.pi(200'000) == 17984);
  CHECK_THROWS_AS(t.pi(200'001), skewes::Error);
  CHECK_THROWS_AS(PrimeTable(1), skewes::Error);
  CHECK_THROWS_AS(PrimeTable(skewes::kSieveLimit + 1), skewes::Error);
}

TEST_CASE("integer roots") {
  CHECK(skewes::integer_root(27, 3) == 3);
  CHECK(skewes::integer_root(26, 3) == 2);
  CHECK(skewes::integer_root(1'000'000, 2) == 1000);
  CHECK(skewes::integer_root(999'999, 2) == 999);
  CHECK(skewes::integer_root(UINT64_MAX, 2) == 4294967295ULL);
  CHECK(skewes::integer_root(UINT64_MAX, 64) == 1);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = rng() >> (rng() % 60);
    const unsigned k = 2 + rng() % 6;
    const std::uint64_t m = skewes::integer_root(n, k);
    long double p = 1, q = 1;
    for (unsigned j = 0; j < k; ++j) {
      p *= m;
      q *= m + 1;
    }
    CHECK(p <= n);
    CHECK(q > n);
  }
}

TEST_CASE("li on the real line") {
  CHECK(std::fabs(skewes::li_real(2.0) - 1.045163780117492784) < 1e-14);
  CHECK(std::fabs(skewes::li_real(std::numbers::e) - 1.895117816355936755) < 1e-14);
  CHECK_THROWS_AS(skewes::li_real(1.0), skewes::Error);
  CHECK_THROWS_AS(skewes::li_real(0.5), skewes::Error);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lx(-20.0, std::log(1e300));
  double worst = 0;
  for (int i = 0; i < 3000; ++i) {
    const double x = 1 + std::exp(lx(rng));
    const double ref = li_mp(x);
    worst = std::max(worst, std::fabs(skewes::li_real(x) - ref) / std::max(1.0, std::fabs(ref)));
  }
  CHECK(worst < 1e-13);
  // e^40 switchover
  for (double l : {39.999, 40.0, 40.001}) {
    const double x = std::exp(l);
    CHECK(std::fabs(skewes::li_real(x) - li_mp(x)) <= 1e-13 * li_mp(x));
  }
}

TEST_CASE("pi below li up to 1e7") {
  const PrimeTable t(10'000'000);
  std::mt19937_64 rng(4);
  int below = 0;
  for (int i = 0; i < 10'000; ++i) {
    const std::uint64_t x = 2 + rng() % (10'000'000 - 1);
    below += static_cast<double>(t.pi(x)) < skewes::li_real(static_cast<double>(x));
  }
  CHECK(below == 10'000);
}

TEST_CASE("pi0 and Pi0") {
  const PrimeTable t(100'000);
  CHECK(t.pi0(7) == 3.5);
  CHECK(t.pi0(8) == 4.0);
  CHECK(t.pi0(7.5) == 4.0);
  CHECK(t.pi0(1.0) == 0.0);
  CHECK(t.pi0(2.0) == 0.5);
  CHECK(t.Pi0(4) == 2.25);
  CHECK(t.Pi0_direct(4) == 2.25);
  // jump points: every prime power up to 1e4, plus points in between
  for (std::uint64_t n = 2; n <= 10'000; ++n) {
    const double x = static_cast<double>(n);
    if (n % 97 == 0 || n < 300) {
      CHECK(t.Pi0(x) == doctest::Approx(Pi0_brute(x)).epsilon(1e-13));
      CHECK(t.Pi0(x + 0.5) == doctest::Approx(Pi0_brute(x + 0.5)).epsilon(1e-13));
    }
    CHECK(t.Pi0(x) == doctest::Approx(t.Pi0_direct(x)).epsilon(1e-13));
  }
}

TEST_CASE("Chebyshev-type bounds") {
  CHECK(skewes::classic_upper(100) == doctest::Approx(200 / std::log(100.0)));
  const PrimeTable t(1'000'000);
  for (std::uint64_t x = 2; x <= 1'000'000; x += (x < 1000 ? 1 : 997))
    CHECK(static_cast<double>(t.pi(x)) <= skewes::classic_upper(static_cast<double>(x)));
  const auto d = skewes::dusart_upper(4e9);
  CHECK(d.corrected < d.printed);
  CHECK(d.corrected > 189'961'812.0);
  CHECK_THROWS_AS(skewes::dusart_upper(1e9), skewes::Error);
  for (double x = 8; x <= 1e6; x *= 1.37) {
    const auto c = skewes::prime_power_tail(t, x);
    CHECK(c.holds());
  }
}

TEST_CASE("complex li against the multiprecision series") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-30.0, 30.0), im(0.1, 60.0);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const cplx z(re(rng), (i % 2 ? 1 : -1) * im(rng));
    const cplx ref = li_exp_mp(z);
    worst = std::max(worst, std::abs(skewes::li_exp(z) - ref) / std::abs(ref));
    // Schwarz reflection
    CHECK(std::abs(skewes::li_exp(std::conj(z)) - std::conj(skewes::li_exp(z))) <= 1e-15 * std::abs(ref));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("asymptotic li remainder is sound") {
  const auto* z100 = testdata::zeros_100k();
  std::vector<double> gammas = {14.134725141734694, 21.022039638771555, 25.010857580145689, 30.424876125859513};
  if (z100)
    for (std::size_t i = 4; i < 40; ++i) gammas.push_back((*z100)[i]);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> lx(std::log(10.0), std::log(1e4));
  int points = 0;
  for (int i = 0; i < 100; ++i) {
    const double gamma = gammas[rng() % gammas.size()];
    const double l = lx(rng);
    const cplx z(0.5 * l, gamma * l);
    const int n = std::min(20, static_cast<int>(std::floor(gamma * l)) - 2);
    const auto e = skewes::li_complex(z, n);
    const cplx ref = li_exp_mp(z);
    CHECK(std::abs(e.value - ref) <= e.remainder_bound);
    ++points;
  }
  CHECK(points == 100);
  // leading term along the imaginary axis
  const cplx far(0.0, 1e6);
  const auto lead = skewes::li_complex(far, 1);
  CHECK(std::abs(lead.value - std::exp(far) / far) < 1e-18);
  CHECK(std::abs(skewes::li_exp(far) - std::exp(far) / far) < 2e-12);
  // conjugation of the expansion
  const cplx w(3.0, 40.0);
  CHECK(std::abs(skewes::li_complex(std::conj(w), 10).value - std::conj(skewes::li_complex(w, 10).value)) == 0.0);
  CHECK_THROWS_AS(skewes::li_complex(cplx(1.0, 0.0), 3), skewes::Error);
  CHECK_THROWS_AS(skewes::li_complex(cplx(1.0, 5.0), 10), skewes::Error);
}

TEST_CASE("explicit formula right-hand side") {
  const double x = 1000;
  // tail integral as sum over j >= 1 of E1(2 j log x), E1(y) = -Ei(-y)
  mp::Real series(0.0);
  for (int j = 1; j <= 20; ++j) series = series - mp::eint(-(mp::Real(2.0 * j) * mp::log(mp::Real(x))));
  const double tail_ref = series.d();
  const auto tail = skewes::mangoldt_tail_integral(x);
  CHECK(std::fabs(tail.value - tail_ref) <= 1e-12 * tail_ref);

  const auto* z = testdata::zeros_100k();
  if (!z) return;
  const auto k0 = skewes::mangoldt_rhs(x, 0, *z);
  CHECK(std::fabs(k0.value - (li_mp(x) + tail_ref - std::numbers::ln2)) < 1e-11);
  CHECK(std::fabs(k0.value - (177.6096580 - std::numbers::ln2)) < 1e-6);

  // the truncated sums do not converge monotonically at x = 1000; values
  // checked against mpmath (ei, li, quad) over the same ordinates
  const PrimeTable t(100'000);
  const double target = t.Pi0(x);
  CHECK(target == doctest::Approx(176.69563492063492).epsilon(1e-15));
  const double err[][2] = {{10, 0.0750828932151}, {100, 0.392004777328}, {1000, 0.0505731815581}};
  for (const auto& row : err)
    CHECK(std::fabs(std::fabs(skewes::mangoldt_rhs(x, static_cast<std::size_t>(row[0]), *z).value - target) -
                    row[1]) < 1e-9);
  const double p10 = t.pi0(10) + 0.5 * t.pi0(std::sqrt(10.0)) + t.pi0(std::cbrt(10.0)) / 3;
  CHECK(p10 == doctest::Approx(t.Pi0(10)));
  CHECK(std::fabs(skewes::mangoldt_rhs(10, 500, *z).value - p10) < 0.05);
  CHECK_THROWS_AS(skewes::mangoldt_rhs(10, z->size() + 1, *z), skewes::Error);
}
