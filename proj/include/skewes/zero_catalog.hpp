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
#include <filesystem>
#include <functional>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace skewes {

// Closed interval [lo, hi].
struct Interval {
  double lo;
  double hi;

  bool contains(double x) const { return lo <= x && x <= hi; }
  double center() const { return 0.5 * (lo + hi); }
};

inline constexpr double kDefaultZeroAccuracy = 1e-9;
inline constexpr double kFirstOrdinateFloor = 14.1;

// Immutable, strictly increasing table of positive zero ordinates gamma_n
// with a uniform accuracy bound |gamma* - gamma| <= accuracy.
//
// Copies share the underlying storage; all members are const and reentrant.
class ZeroCatalog {
 public:
  // Validates the invariants (non-empty, strictly increasing, first
  // ordinate > 14.1, accuracy >= 0). Throws Error(kFormat).
  ZeroCatalog(std::vector<double> ordinates, double declared_accuracy, std::string source);

  static ZeroCatalog load_text(const std::filesystem::path& path);
  static ZeroCatalog parse_text(std::istream& in, const std::string& source);
  static ZeroCatalog load_binary(const std::filesystem::path& path);
  // Dispatches on the "ZZC1" magic.
  static ZeroCatalog load(const std::filesystem::path& path);

  void save_binary(const std::filesystem::path& path) const;
  void save_text(const std::filesystem::path& path) const;

  std::span<const double> ordinates() const { return *ordinates_; }
  std::size_t size() const { return ordinates_->size(); }
  double operator[](std::size_t i) const { return (*ordinates_)[i]; }
  double first() const { return ordinates_->front(); }
  double last() const { return ordinates_->back(); }

  // Accuracy as stated by the source.
  double declared_accuracy() const { return declared_accuracy_; }
  // Declared accuracy plus one ulp of the largest ordinate (binary64
  // representation error of the stored values).
  double accuracy() const;
  const std::string& source() const { return source_; }

  // #{n : gamma_n <= T}.
  std::size_t count_below(double T) const;

  // Compensated sum of 1/gamma^n over gamma <= T, ascending. Throws
  // Error(kCatalogExhausted) if T exceeds the last ordinate; pass
  // T = last() for the whole table.
  double inverse_power_sum(int n, double T) const;

 private:
  std::shared_ptr<const std::vector<double>> ordinates_;
  double declared_accuracy_;
  std::string source_;
};

// Sum over gamma > T of 1/gamma^n is below T^(1-n) log T (T >= 2*pi*e, n >= 2).
double tail_power_bound(int n, double T);

// Upper bound on the full sum of 1/gamma^2 and 1/gamma^3 over all zeros.
inline constexpr double kInverseSquareSumBound = 2.31050e-2;
inline constexpr double kInverseCubeSumBound = 7.29549e-4;

// Sum over 0 < gamma <= T of 1/gamma lies in log^2(T/2pi)/(4pi) +- 0.9321.
Interval reciprocal_sum_bracket(double T);

// Backlund-type bracket for the sum of a positive decreasing f over
// T1 <= gamma <= T2; the quadrature tolerance is folded into the slack.
Interval zero_density_bracket(const std::function<double(double)>& f, double T1, double T2);

}  // namespace skewes
