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

#include "skewes/zero_sum.hpp"

#include <cmath>
#include <numbers>

#include "skewes/error.hpp"
#include "skewes/summation.hpp"

namespace skewes {

namespace {

constexpr double kCompatGammaMin = 14.0;
constexpr double kCompatKappa = 1.0001;

double damping(double alpha, double gamma) {
  if (std::isinf(alpha)) return 1.0;
  // exponent in double-word; it reaches the hundreds and its rounding would show
  const DoubleDouble x = two_prod(gamma, gamma) / DoubleDouble(2 * alpha);
  return std::exp(-x.hi) * (1.0 - x.lo);
}

CosSin phase(DoubleDouble omega, double gamma) { return cos_sin(reduce_two_pi(omega * gamma)); }

struct Pair {
  CompensatedSum s;
  CompensatedSum t;
};

template <bool WantS, bool WantT>
Pair chunked_sums(const ZeroCatalog& catalog, double alpha, DoubleDouble omega, double T,
                  const ParallelOptions& opt) {
  require(alpha > 0.0, "zero sum: alpha must be positive");
  if (T > catalog.last()) {
    fail(ErrorCode::kCatalogExhausted, "zero catalog exhausted: T = " + std::to_string(T) +
                                           " exceeds last ordinate " + std::to_string(catalog.last()));
  }
  const auto gammas = catalog.ordinates();
  const std::size_t n = catalog.count_below(T);
  const auto parts = map_chunks<Pair>(n, opt, [&](std::size_t begin, std::size_t end) {
    Pair acc;
    for (std::size_t i = begin; i < end; ++i) {
      if constexpr (WantS) acc.s.add(s_term(alpha, omega, gammas[i]));
      if constexpr (WantT) acc.t.add(t_term(alpha, omega, gammas[i]));
    }
    return acc;
  });
  Pair total;
  for (const auto& part : parts) {
    total.s.add(part.s);
    total.t.add(part.t);
  }
  return total;
}

void check_delta_args(double alpha, double omega, double T, double epsilon) {
  require(epsilon >= 0.0 && std::isfinite(epsilon), "zero accuracy epsilon must be finite and >= 0");
  require(alpha > 0.0 && omega > 0.0, "alpha and omega must be positive");
  require(T >= 2 * std::numbers::pi * std::numbers::e, "T must be >= 2*pi*e");
}

struct DeltaInputs {
  double gamma_min;
  double gamma_max;
  double omega;
  double kappa;
};

DeltaInputs delta_inputs(const ZeroCatalog* catalog, double omega, double T, double epsilon, bool compat) {
  if (compat || catalog == nullptr) {
    return {kCompatGammaMin, std::ceil(T), std::ceil(omega), kCompatKappa};
  }
  const double g1 = catalog->first();
  require(g1 > epsilon, "zero accuracy exceeds the first ordinate");
  return {std::max(g1 - epsilon, kCompatGammaMin), T + epsilon, omega, g1 / (g1 - epsilon)};
}

}  // namespace

double s_term(double alpha, DoubleDouble omega, double gamma) {
  const auto [c, s] = phase(omega, gamma);
  return (c + 2 * gamma * s) / (0.25 + gamma * gamma) * damping(alpha, gamma);
}

double t_term(double alpha, DoubleDouble omega, double gamma) {
  const auto [c, s] = phase(omega, gamma);
  const double q = 0.25 + gamma * gamma;
  return ((0.5 - 2 * gamma * gamma) * c + 2 * gamma * s) / (omega.value() * q * q) * damping(alpha, gamma);
}

double sum_s(const ZeroCatalog& catalog, double alpha, DoubleDouble omega, double T, const ParallelOptions& opt) {
  return chunked_sums<true, false>(catalog, alpha, omega, T, opt).s.value();
}

double sum_t(const ZeroCatalog& catalog, double alpha, DoubleDouble omega, double T, const ParallelOptions& opt) {
  return chunked_sums<false, true>(catalog, alpha, omega, T, opt).t.value();
}

double delta_s1_bound(const ZeroCatalog* catalog, double alpha, double omega, double T, double epsilon,
                      bool compat_deltas) {
  check_delta_args(alpha, omega, T, epsilon);
  if (epsilon == 0.0) return 0.0;
  const bool compat = compat_deltas || catalog == nullptr;
  const auto in = delta_inputs(catalog, omega, T, epsilon, compat);
  const double x = in.gamma_min;
  const double c = 2 * in.omega + in.omega / x + 2 * in.gamma_max / alpha + 2 / (x * x) + 4 / x;
  double reciprocal = 0.0;
  if (compat) {
    reciprocal = reciprocal_sum_bracket(T).hi;
  } else {
    reciprocal = catalog->inverse_power_sum(1, T);
  }
  return epsilon * c * in.kappa * reciprocal;
}

double delta_s2_bound(const ZeroCatalog* catalog, double alpha, double omega, double T, double epsilon,
                      bool compat_deltas) {
  check_delta_args(alpha, omega, T, epsilon);
  if (epsilon == 0.0) return 0.0;
  const bool compat = compat_deltas || catalog == nullptr;
  const auto in = delta_inputs(catalog, omega, T, epsilon, compat);
  const double x = in.gamma_min;
  const double w = in.omega;
  const double c = 2 / x + 2 * in.gamma_max / (alpha * w) + 1 / (2 * x * x) + 2 + 8 / (w * x) + 8 / (w * x * x);
  const double squares = compat ? kInverseSquareSumBound : catalog->inverse_power_sum(2, T);
  return epsilon * c * in.kappa * in.kappa * squares;
}

SumResult evaluate_sums(const ZeroCatalog& catalog, const CertParams& p, const SumOptions& opt) {
  const Pair sums = chunked_sums<true, true>(catalog, p.alpha, p.omega, p.T, opt.parallel);
  SumResult r;
  r.s1 = sums.s.value();
  r.s2 = sums.t.value();
  CompensatedSum both = sums.s;
  both.add(sums.t);
  r.s_star = both.value();
  r.zeros_used = catalog.count_below(p.T);
  r.T_effective = r.zeros_used == 0 ? 0.0 : catalog[r.zeros_used - 1];
  const double eps = opt.epsilon.value_or(opt.compat_deltas ? catalog.declared_accuracy() : catalog.accuracy());
  r.delta_s1 = delta_s1_bound(&catalog, p.alpha, p.omega_value(), p.T, eps, opt.compat_deltas);
  r.delta_s2 = delta_s2_bound(&catalog, p.alpha, p.omega_value(), p.T, eps, opt.compat_deltas);
  return r;
}

}  // namespace skewes
