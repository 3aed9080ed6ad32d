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

#include "skewes/reference_oracle.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "skewes/error.hpp"
#include "skewes/quadrature.hpp"
#include "skewes/summation.hpp"

namespace skewes {

namespace {

using cplx = std::complex<double>;

constexpr double kEulerGamma = std::numbers::egamma;

// m^k <= n (and == n) without overflow.
bool power_leq(std::uint64_t m, unsigned k, std::uint64_t n) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (m != 0 && acc > n / m) return false;
    acc *= m;
  }
  return acc <= n;
}

bool power_eq(std::uint64_t m, unsigned k, std::uint64_t n) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (m != 0 && acc > n / m) return false;
    acc *= m;
  }
  return acc == n;
}

// pi0(x^{1/k}) for x = n (+ fraction unless exact).
double pi0_root(const PrimeTable& t, std::uint64_t n, bool integral, unsigned k) {
  const std::uint64_t m = integer_root(n, k);
  if (integral && power_eq(m, k, n)) return t.pi0(static_cast<double>(m));
  return static_cast<double>(t.pi(m));
}

double floor_checked(const PrimeTable& t, double x) {
  require(std::isfinite(x) && x >= 0.0, "prime counting: x must be finite and >= 0");
  const double n = std::floor(x);
  if (n > static_cast<double>(t.limit())) {
    std::ostringstream msg;
    msg << "x = " << x << " exceeds the sieve limit " << t.limit();
    fail(ErrorCode::kInvalidArgument, msg.str());
  }
  return n;
}

std::complex<double> li_series(cplx z) {
  cplx term = 1.0;
  cplx acc = 0.0;
  for (int k = 1; k < 5000; ++k) {
    term *= z / static_cast<double>(k);
    const cplx add = term / static_cast<double>(k);
    acc += add;
    if (k > std::abs(z) && std::abs(add) < 1e-17 * std::abs(acc)) break;
  }
  const double side = z.imag() > 0 ? 1.0 : -1.0;
  return kEulerGamma + std::log(z) + acc - cplx(0.0, std::numbers::pi * side);
}

// E1(w) by the even continued fraction (modified Lentz).
std::complex<double> e1_continued_fraction(cplx w) {
  constexpr double tiny = 1e-300;
  cplx b = w + 1.0;
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 1; i < 200000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) return h * std::exp(-w);
  }
  fail(ErrorCode::kNumeric, "E1 continued fraction did not converge");
}

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  require(limit >= 2 && limit <= kSieveLimit, "sieve limit must lie in [2, 1e8]");
  const std::uint64_t odd = limit / 2 + 1;  // indices 0..limit/2 stand for 1, 3, 5, ...
  bits_.assign((odd + 63) / 64, ~std::uint64_t{0});
  auto clear = [&](std::uint64_t i) { bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); };
  clear(0);
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    if (!((bits_[p >> 7] >> ((p >> 1) & 63)) & 1)) continue;
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) clear(m >> 1);
  }
  // Drop indices beyond the limit.
  const std::uint64_t last = (limit - 1) / 2;  // largest odd <= limit is 2*last + 1
  for (std::uint64_t i = last + 1; i < bits_.size() * 64; ++i) clear(i);
  before_.resize(bits_.size() + 1);
  before_[0] = 0;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    before_[w + 1] = before_[w] + static_cast<std::uint32_t>(std::popcount(bits_[w]));
  }
}

bool PrimeTable::is_prime(std::uint64_t n) const {
  if (n > limit_) fail(ErrorCode::kInvalidArgument, "is_prime: n exceeds the sieve limit");
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  const std::uint64_t i = n >> 1;
  return (bits_[i >> 6] >> (i & 63)) & 1;
}

std::uint64_t PrimeTable::pi(std::uint64_t x) const {
  if (x > limit_) {
    fail(ErrorCode::kInvalidArgument, "pi(x): x = " + std::to_string(x) + " exceeds the sieve limit");
  }
  if (x < 2) return 0;
  const std::uint64_t j = (x - 1) / 2;  // odd numbers 1, 3, ..., 2j+1
  const std::uint64_t w = j >> 6;
  const unsigned r = static_cast<unsigned>(j & 63);
  const std::uint64_t mask = r == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (r + 1)) - 1);
  return 1 + before_[w] + static_cast<std::uint64_t>(std::popcount(bits_[w] & mask));
}

double PrimeTable::pi0(double x) const {
  const double n = floor_checked(*this, x);
  const auto k = static_cast<std::uint64_t>(n);
  const double p = static_cast<double>(pi(k));
  return (x == n && is_prime(k)) ? p - 0.5 : p;
}

double PrimeTable::Pi0(double x) const {
  const double n = floor_checked(*this, x);
  if (x < 2) return 0.0;
  const auto ni = static_cast<std::uint64_t>(n);
  const bool integral = x == n;
  CompensatedSum acc;
  for (unsigned k = 1; std::ldexp(1.0, static_cast<int>(k)) <= x; ++k) {
    acc.add(pi0_root(*this, ni, integral, k) / k);
  }
  return acc.value();
}

double PrimeTable::Pi0_direct(double x) const {
  const double n = floor_checked(*this, x);
  const auto ni = static_cast<std::uint64_t>(n);
  CompensatedSum acc;
  for (std::uint64_t p = 2; p <= ni; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t q = p;
    for (unsigned k = 1;; ++k) {
      const double qd = static_cast<double>(q);
      if (qd < x) {
        acc.add(1.0 / k);
      } else if (qd == x) {
        acc.add(0.5 / k);
      } else {
        break;
      }
      if (q > ni / p) break;
      q *= p;
    }
  }
  return acc.value();
}

std::uint64_t sieve_pi(std::uint64_t x) {
  require(x >= 2 && x <= kSieveLimit, "sieve_pi: x must lie in [2, 1e8]");
  return PrimeTable(x).pi(x);
}

std::uint64_t integer_root(std::uint64_t n, unsigned k) {
  require(k >= 1, "integer_root: k must be >= 1");
  if (k == 1 || n < 2) return n;
  auto m = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
  while (m > 0 && !power_leq(m, k, n)) --m;
  while (power_leq(m + 1, k, n)) ++m;
  return m;
}

double li_real(double x) {
  if (!(x > 1.0 + 1e-12) || !std::isfinite(x)) {
    fail(ErrorCode::kInvalidArgument, "li_real: requires x > 1 + 1e-12 (logarithmic singularity at 1)");
  }
  const double t = std::log(x);
  if (t < 40) {
    CompensatedSum acc;
    acc.add(kEulerGamma);
    acc.add(std::log(t));
    double term = 1.0;
    for (int k = 1; k < 500; ++k) {
      term *= t / k;
      acc.add(term / k);
      if (term / k < 1e-17 * std::fabs(acc.value())) break;
    }
    return acc.value();
  }
  // e^t/t sum k!/t^k, stopped at the smallest term.
  CompensatedSum acc;
  double term = 1.0;
  for (int k = 0; k < 200; ++k) {
    acc.add(term);
    const double next = term * (k + 1) / t;
    if (next >= term || next < 1e-18) break;
    term = next;
  }
  return x / t * acc.value();
}

std::complex<double> li_exp(std::complex<double> z) {
  require(z.imag() != 0.0, "li_exp: Im z must be non-zero");
  const double r = std::abs(z);
  if (r <= 4 || (r - z.real() < 10 && r < 700)) return li_series(z);
  return -e1_continued_fraction(-z);
}

LiExpansion li_complex(std::complex<double> z, int n_terms) {
  require(z.imag() != 0.0, "li_complex: Im z must be non-zero");
  require(n_terms >= 1, "li_complex: n_terms must be >= 1");
  const double d = z.real() > 0 ? std::fabs(z.imag()) : std::abs(z);
  if (n_terms + 1 >= d) {
    std::ostringstream msg;
    msg << "li_complex: remainder bound does not decrease at n = " << n_terms << " (distance " << d << ")";
    fail(ErrorCode::kInvalidArgument, msg.str());
  }
  cplx term = 1.0 / z;  // (k-1)!/z^k at k = 1
  cplx acc = 0.0;
  double magnitude = 0.0;  // sum of |term|
  for (int k = 1; k <= n_terms; ++k) {
    acc += term;
    magnitude += std::abs(term);
    term *= static_cast<double>(k) / z;
  }
  const cplx ez = std::exp(z);
  const double log_bound = std::lgamma(n_terms + 1.0) + z.real() - (n_terms + 1) * std::log(d);
  // rounding: a few ulps per complex operation, k of them in the k-th term
  const double rounding = 8.0 * (n_terms + 2) * std::numeric_limits<double>::epsilon() * std::exp(z.real()) * magnitude;
  return {ez * acc, std::exp(log_bound) + rounding};
}

MangoldtValue mangoldt_tail_integral(double x) {
  require(x > 1.0, "mangoldt tail: x must exceed 1");
  // u = e^v: du / ((u^2 - 1) u log u) = dv / ((e^{2v} - 1) v).
  const auto r = integrate([](double v) { return 1.0 / (std::expm1(2 * v) * v); }, std::log(x),
                           std::numeric_limits<double>::infinity(), 1e-12);
  return {r.value, r.error_estimate};
}

MangoldtValue mangoldt_rhs(double x, std::size_t K, const ZeroCatalog& catalog) {
  require(x > 1.0, "mangoldt_rhs: x must exceed 1");
  if (K > catalog.size()) {
    fail(ErrorCode::kCatalogExhausted, "mangoldt_rhs: K = " + std::to_string(K) + " exceeds catalog size " +
                                           std::to_string(catalog.size()));
  }
  const double lx = std::log(x);
  const auto tail = mangoldt_tail_integral(x);
  CompensatedSum acc;
  acc.add(li_real(x));
  for (std::size_t k = 0; k < K; ++k) {
    const cplx z(0.5 * lx, catalog[k] * lx);
    acc.add(-2.0 * li_exp(z).real());
  }
  acc.add(tail.value);
  acc.add(-std::numbers::ln2);
  return {acc.value(), tail.error_estimate};
}

DusartBound dusart_upper(double x) {
  require(x >= 4e9, "dusart_upper: requires x >= 4e9");
  const double l = std::log(x);
  const double lead = x / l;
  return {lead * (1 + 1 / l + 2 / l + 7.32 / (l * l * l)), lead * (1 + 1 / l + 2 / (l * l) + 7.32 / (l * l * l))};
}

double classic_upper(double x) {
  require(x > 1.0, "classic_upper: requires x > 1");
  return 2 * x / std::log(x);
}

InequalityCheck prime_power_tail(const PrimeTable& table, double x) {
  const double n = floor_checked(table, x);
  require(x >= 8, "prime_power_tail: requires x >= 8");
  const auto ni = static_cast<std::uint64_t>(n);
  const bool integral = x == n;
  CompensatedSum lhs;
  for (unsigned k = 3; std::ldexp(1.0, static_cast<int>(k)) <= x; ++k) {
    lhs.add(pi0_root(table, ni, integral, k) / k);
  }
  const double rhs = pi0_root(table, ni, integral, 3) / 3 * std::log(x) / std::numbers::ln2;
  return {lhs.value(), rhs};
}

}  // namespace skewes
