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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewes/error_budget.hpp"
#include "skewes/zero_catalog.hpp"
#include "skewes/zero_sum.hpp"

namespace skewes {

enum class Verdict { kPositive, kInconclusive };

struct Certificate {
  CertParams params;
  SumResult sum;
  ErrorBudget budget;
  double epsilon = 0.0;          // zero accuracy fed to the Delta bounds
  bool s_star_overridden = false;
  double lower_bound = 0.0;      // -1 - S* - dS1 - dS2 - R
  double run_length_log10 = 0.0; // 0 unless positive
  Verdict verdict = Verdict::kInconclusive;
};

struct CertifyOptions {
  SumOptions sums;
  // Replaces S* (and skips the zero sum). Without a catalog this is required
  // and the Delta bounds use the compatibility inputs.
  std::optional<double> s_star_override;
};

// Certified lower bound for I(omega, eta). Throws Error(kConditionViolated)
// or Error(kCatalogExhausted).
Certificate certify(const ZeroCatalog* catalog, const CertParams& p, const CertifyOptions& opt = {});

// lower = -1 - S* - dS1 - dS2 - R, summed in that order with compensation.
double assemble_lower_bound(const SumResult& sum, double budget_total);

// log10(delta) + (omega - eta) / (2 ln 10): the run of consecutive integers
// x .. x + delta e^{(omega - eta)/2} on which pi - li > 0.
double run_length(double delta, double omega, double eta);
// "4.6188x10^154" style, `decimals` digits after the point.
std::string render_power_of_ten(double log10_value, int decimals = 4);

struct ResizeRow {
  double eta;
  ErrorBudget budget;
  double lower_bound;
};

struct ResizeTable {
  CertParams base;
  SumResult sum;  // shared by every row
  double epsilon = 0.0;
  bool s_star_overridden = false;
  std::vector<ResizeRow> rows;
  std::optional<std::size_t> best;     // smallest eta with a positive lower bound
  std::optional<double> refined_eta;   // bisection between best and the next row
};

// One budget per eta; S*, dS1, dS2 are computed once. Rows keep grid order.
// refine bisects between the best row and the following non-positive row to
// 4 significant digits.
ResizeTable resize_eta(const ZeroCatalog* catalog, const CertParams& p, std::span<const double> eta_grid,
                       const CertifyOptions& opt = {}, bool refine = false);

// "key = value" lines, ending with a "VERDICT: ..." line.
std::string render_certificate(const Certificate& c);
std::string render_certificate_json(const Certificate& c);
std::string render_resize_table(const ResizeTable& t);

}  // namespace skewes
