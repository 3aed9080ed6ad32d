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

#include <cstddef>
#include <limits>
#include <optional>

#include "skewes/double_double.hpp"
#include "skewes/error_budget.hpp"
#include "skewes/parallel.hpp"
#include "skewes/zero_catalog.hpp"

namespace skewes {

// alpha = kNoDamping drops the factor exp(-gamma^2 / 2alpha).
inline constexpr double kNoDamping = std::numeric_limits<double>::infinity();

// s = (cos(omega gamma) + 2 gamma sin(omega gamma)) / (1/4 + gamma^2) * exp(-gamma^2/2alpha)
//   = 2 Re(e^{i omega gamma} / rho) exp(-gamma^2/2alpha),  rho = 1/2 + i gamma.
// The phase omega*gamma is formed and reduced mod 2pi in double-word arithmetic.
double s_term(double alpha, DoubleDouble omega, double gamma);

// t = ((1/2 - 2 gamma^2) cos + 2 gamma sin) / (omega (1/4 + gamma^2)^2) * exp(-gamma^2/2alpha)
//   = 2 Re(e^{i omega gamma} / rho^2) exp(-gamma^2/2alpha) / omega.
double t_term(double alpha, DoubleDouble omega, double gamma);

// Compensated sums of s and t over catalog ordinates gamma <= T, in chunks of
// opt.chunk_size combined in index order. Throws Error(kCatalogExhausted)
// when T exceeds the last ordinate.
double sum_s(const ZeroCatalog& catalog, double alpha, DoubleDouble omega, double T,
             const ParallelOptions& opt = {});
double sum_t(const ZeroCatalog& catalog, double alpha, DoubleDouble omega, double T,
             const ParallelOptions& opt = {});

struct SumResult {
  double s1 = 0.0;      // S1*
  double s2 = 0.0;      // S2*
  double s_star = 0.0;  // S1* + S2*
  double delta_s1 = 0.0;
  double delta_s2 = 0.0;
  std::size_t zeros_used = 0;
  double T_effective = 0.0;  // largest ordinate included, 0 if none
};

// Bounds on |S1 - S1*| and |S2 - S2*| when every ordinate is off by at most
// epsilon.
//
// Default: gamma_min = max(gamma_1 - epsilon, 14), gamma_max = T + epsilon,
// kappa = gamma_1 / (gamma_1 - epsilon), reciprocal sums taken directly from
// the catalog.
//
// compat_deltas: gamma_min = 14, kappa = 1.0001, omega and gamma_max rounded up
// to integers, sum of 1/gamma from the upper end of reciprocal_sum_bracket(T)
// and sum of 1/gamma^2 from kInverseSquareSumBound. A null catalog always
// uses this mode.
double delta_s1_bound(const ZeroCatalog* catalog, double alpha, double omega, double T, double epsilon,
                      bool compat_deltas);
double delta_s2_bound(const ZeroCatalog* catalog, double alpha, double omega, double T, double epsilon,
                      bool compat_deltas);

struct SumOptions {
  ParallelOptions parallel;
  bool compat_deltas = false;
  // Zero accuracy; defaults to catalog.accuracy().
  std::optional<double> epsilon;
};

// S1*, S2*, S* and both Delta bounds at (alpha, omega, T).
SumResult evaluate_sums(const ZeroCatalog& catalog, const CertParams& p, const SumOptions& opt = {});

}  // namespace skewes
