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

// Closed forms for the Gaussian kernel K(x) = sqrt(alpha/2pi) exp(-alpha x^2/2)
// and the tail estimates built on it. Production code evaluates only these
// closed forms; quadrature appears solely in truncated_fourier.

namespace skewes {

// Gaussian sharpness alpha > 0.
class KernelParam {
 public:
  explicit KernelParam(double alpha);
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

// exp(x), except that an underflow to zero is replaced by the smallest
// positive normal double. Used for factors of added error terms.
double conservative_exp(double x);

double gaussian_kernel(KernelParam k, double x);

// Integral of K(x) e^{icx} over the real line: exp(-c^2 / 2alpha).
double kernel_fourier(KernelParam k, double c);

// Integral of x K(x) over [0, eta]: (1 - exp(-alpha eta^2/2)) / sqrt(2 pi alpha).
double kernel_first_moment(KernelParam k, double eta);

// Bound (alpha/c) h(c) exp(-c^2/2alpha) on the integral over [c, inf) of
// h(x) exp(-x^2/2alpha), h positive and decreasing.
double gaussian_tail_with_weight(KernelParam k, double c, double h_at_c);

// |integral over [eta, inf) of K(x) e^{icx}| <= K(eta) min(2/c, 1/(alpha eta)).
double oscillatory_tail_bound(KernelParam k, double eta, double c);

// Integral of K(x) e^{icx} over [-eta, eta], as kernel_fourier minus twice the
// numerically integrated tail.
double truncated_fourier(KernelParam k, double eta, double c);

}  // namespace skewes
