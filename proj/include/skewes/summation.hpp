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

#include <cmath>
#include <span>

#include "skewes/double_double.hpp"

namespace skewes {

// Error-free-transformation accumulator: every addition is split by TwoSum
// and the rounding errors are carried in a second word. The final value is
// correct to roughly twice working precision for well-conditioned sums.
class CompensatedSum {
 public:
  void add(double x) {
    const DoubleDouble s = two_sum(sum_, x);
    if (!std::isfinite(s.hi)) {
      // inf/NaN: the error term is meaningless, fall back to plain addition
      sum_ += x;
      return;
    }
    sum_ = s.hi;
    carry_ += s.lo;
  }

  void add(const CompensatedSum& other) {
    add(other.sum_);
    add(other.carry_);
  }

  double value() const { return std::isfinite(sum_) ? sum_ + carry_ : sum_; }
  double head() const { return sum_; }
  double carry() const { return carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

inline double compensated_sum(std::span<const double> values) {
  CompensatedSum acc;
  for (double v : values) acc.add(v);
  return acc.value();
}

}  // namespace skewes
