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

#include <functional>

namespace skewes {

struct QuadratureResult {
  double value;
  double error_estimate;
};

// Globally adaptive Gauss-Kronrod (61-point panels) on [a, b]; either end may
// be infinite. Stops when the error estimate is below rel_tol * |value| or at
// the roundoff floor 100 eps * integral of |f|. max_depth limits bisection
// levels per panel. Throws Error(kNumeric) when neither is reached.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-10, unsigned max_depth = 25);

}  // namespace skewes
