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

#include "skewes/kernel_math.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>

#include "skewes/error.hpp"
#include "skewes/quadrature.hpp"

namespace skewes {

KernelParam::KernelParam(double alpha) : alpha_(alpha) {
  require(alpha > 0.0 && std::isfinite(alpha), "kernel sharpness alpha must be positive and finite");
}

double conservative_exp(double x) {
  const double v = std::exp(x);
  return v < DBL_MIN ? DBL_MIN : v;
}

double gaussian_kernel(KernelParam k, double x) {
  return std::sqrt(k.alpha() / (2 * std::numbers::pi)) * std::exp(-k.alpha() * x * x / 2);
}

double kernel_fourier(KernelParam k, double c) { return std::exp(-c * c / (2 * k.alpha())); }

double kernel_first_moment(KernelParam k, double eta) {
  require(eta > 0.0, "kernel_first_moment: eta must be positive");
  return -std::expm1(-k.alpha() * eta * eta / 2) / std::sqrt(2 * std::numbers::pi * k.alpha());
}

double gaussian_tail_with_weight(KernelParam k, double c, double h_at_c) {
  require(c > 0.0 && h_at_c > 0.0, "gaussian_tail_with_weight: c and h(c) must be positive");
  return k.alpha() / c * h_at_c * std::exp(-c * c / (2 * k.alpha()));
}

double oscillatory_tail_bound(KernelParam k, double eta, double c) {
  require(eta > 0.0 && c > 0.0, "oscillatory_tail_bound: eta and c must be positive");
  return gaussian_kernel(k, eta) * std::min(2 / c, 1 / (k.alpha() * eta));
}

double truncated_fourier(KernelParam k, double eta, double c) {
  require(eta > 0.0, "truncated_fourier: eta must be positive");
  // K(x) < 1e-300 * K(0) beyond 40 standard deviations.
  const double upper = eta + 40 / std::sqrt(k.alpha());
  const auto tail = integrate([&](double x) { return gaussian_kernel(k, x) * std::cos(c * x); }, eta,
                              upper, 1e-12, 30);
  return kernel_fourier(k, c) - 2 * tail.value;
}

}  // namespace skewes
