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

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "skewes/zero_catalog.hpp"

namespace skewes {

inline constexpr std::uint64_t kSieveLimit = 100'000'000;

// Odd-only sieve of Eratosthenes with per-word cumulative counts; pi(x) is a
// table lookup plus one popcount.
class PrimeTable {
 public:
  // 2 <= limit <= kSieveLimit, else Error(kInvalidArgument).
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t n) const;
  // pi(x); Error(kInvalidArgument) above limit().
  std::uint64_t pi(std::uint64_t x) const;

  // pi(x) - 1/2 at primes, pi(x) otherwise; x >= 0 real.
  double pi0(double x) const;
  // sum over 1 <= k <= log x / log 2 of pi0(x^{1/k}) / k, with exact integer
  // k-th roots so that prime powers land on the midpoint.
  double Pi0(double x) const;
  // sum over prime powers p^k < x of 1/k, plus half of 1/k when x = p^k.
  double Pi0_direct(double x) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> bits_;    // bit i of the odd table: 2i+1 is prime
  std::vector<std::uint32_t> before_;  // odd primes in words [0, w)
};

std::uint64_t sieve_pi(std::uint64_t x);

// Largest m with m^k <= n.
std::uint64_t integer_root(std::uint64_t n, unsigned k);

// Principal-value li(x) for x > 1 (Error(kInvalidArgument) below 1 + 1e-12).
double li_real(double x);

// li(e^z) = integral of e^t/t along the horizontal line from -inf + i Im z to z,
// i.e. -E1(-z). Im z != 0. Series for small |z| or mild cancellation,
// continued fraction otherwise; about 1e-13 relative.
std::complex<double> li_exp(std::complex<double> z);

struct LiExpansion {
  std::complex<double> value;  // e^z sum_{k=1}^{n} (k-1)!/z^k
  double remainder_bound;      // n! |e^z| / d^{n+1} plus rounding in the partial sum
};

// Truncated asymptotic expansion of li(e^z). d = |Im z| for Re z > 0 and |z|
// otherwise (distance from the ray t <= Re z to the origin). Error when
// n_terms + 1 >= d, where the bound stops decreasing in n.
LiExpansion li_complex(std::complex<double> z, int n_terms);

struct MangoldtValue {
  double value;
  double error_estimate;  // quadrature error of the trailing integral
};

// li(x) - sum over the first K zero pairs of 2 Re li(x^rho) + the trailing
// integral - log 2.
MangoldtValue mangoldt_rhs(double x, std::size_t K, const ZeroCatalog& catalog);
// Integral over [x, inf) of du / ((u^2 - 1) u log u), x > 1.
MangoldtValue mangoldt_tail_integral(double x);

struct DusartBound {
  double printed;    // (x/log x)(1 + 1/log x + 2/log x + 7.32/log^3 x)
  double corrected;  // (x/log x)(1 + 1/log x + 2/log^2 x + 7.32/log^3 x)
};

// x >= 4e9.
DusartBound dusart_upper(double x);
// 2x / log x, x > 1.
double classic_upper(double x);

struct InequalityCheck {
  double lhs;
  double rhs;
  bool holds() const { return lhs <= rhs; }
};

// sum over k >= 3 of pi0(x^{1/k})/k against (1/3) pi0(x^{1/3}) log x / log 2.
InequalityCheck prime_power_tail(const PrimeTable& table, double x);

}  // namespace skewes
