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

#include "skewes/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "skewes/error.hpp"

namespace skewes {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 61>;

constexpr std::size_t kMaxPanels = 1 << 14;
constexpr double kRoundoff = 100 * std::numeric_limits<double>::epsilon();

struct Panel {
  double a, b;
  double value, error, l1;
  unsigned depth;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate(const std::function<double(double)>& f, double a, double b, unsigned depth) {
  double error = 0.0;
  double l1 = 0.0;
  // max_depth 0: one G-K 61 panel, error from the embedded Gauss rule
  const double v = Rule::integrate(f, a, b, 0, 0.0, &error, &l1);
  // Boost leaves the single-panel error on the [-1, 1] scale
  return {a, b, v, error * 0.5 * (b - a), l1, depth};
}

// Globally adaptive bisection on a finite interval: always split the panel
// with the largest error estimate.
QuadratureResult adapt(const std::function<double(double)>& f, double a, double b, double rel_tol,
                       unsigned max_depth) {
  std::priority_queue<Panel> heap;
  heap.push(evaluate(f, a, b, 0));
  double value = heap.top().value;
  double error = heap.top().error;
  double l1 = heap.top().l1;
  for (;;) {
    const double roundoff = kRoundoff * l1;
    if (!std::isfinite(value)) break;
    if (error <= std::max(rel_tol * std::fabs(value), roundoff)) break;
    if (heap.size() >= kMaxPanels) break;
    const Panel worst = heap.top();
    if (worst.depth >= max_depth) break;
    // worst panel already at its own roundoff level
    if (worst.error <= kRoundoff * worst.l1) break;
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = evaluate(f, worst.a, mid, worst.depth + 1);
    const Panel right = evaluate(f, mid, worst.b, worst.depth + 1);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    heap.push(left);
    heap.push(right);
  }
  // re-add from scratch to drop the running-update drift
  double v = 0.0, e = 0.0, n = 0.0;
  while (!heap.empty()) {
    v += heap.top().value;
    e += heap.top().error;
    n += heap.top().l1;
    heap.pop();
  }
  const double roundoff = kRoundoff * n;
  if (!std::isfinite(v) || e > std::max(rel_tol * std::fabs(v), roundoff) * 1.000001) {
    std::ostringstream msg;
    msg << "quadrature did not converge on [" << a << ", " << b << "]: estimate " << v << ", error " << e;
    fail(ErrorCode::kNumeric, msg.str());
  }
  return {v, e};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                           unsigned max_depth) {
  require(!std::isnan(a) && !std::isnan(b), "integrate: NaN limit");
  require(rel_tol > 0.0, "integrate: tolerance must be positive");
  if (a == b) return {0.0, 0.0};
  if (a > b) {
    const auto r = integrate(f, b, a, rel_tol, max_depth);
    return {-r.value, r.error_estimate};
  }
  const bool lo_inf = std::isinf(a);
  const bool hi_inf = std::isinf(b);
  if (lo_inf && hi_inf) {
    const auto l = integrate(f, a, 0.0, rel_tol, max_depth);
    const auto r = integrate(f, 0.0, b, rel_tol, max_depth);
    return {l.value + r.value, l.error_estimate + r.error_estimate};
  }
  if (hi_inf) {
    // x = a + t/(1-t)
    return adapt(
        [&](double t) {
          const double s = 1.0 - t;
          return f(a + t / s) / (s * s);
        },
        0.0, 1.0, rel_tol, max_depth);
  }
  if (lo_inf) {
    return adapt(
        [&](double t) {
          const double s = 1.0 - t;
          return f(b - t / s) / (s * s);
        },
        0.0, 1.0, rel_tol, max_depth);
  }
  return adapt(f, a, b, rel_tol, max_depth);
}

}  // namespace skewes
