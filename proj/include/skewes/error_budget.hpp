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
#include <string>
#include <string_view>
#include <vector>

#include "skewes/double_double.hpp"

namespace skewes {

// Which published error-term family bounds the remainder R.
enum class Variant {
  kLehman1966,          // S1..S6
  kSaouterDemichel2010, // S1', S2..S6
  kRevers,              // R1..R6, double summation over 1/rho and 1/(omega rho^2)
  kStd2015,             // weighted-kernel R1..R5
};

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

// The free parameters of the integrated explicit formula. omega is carried as
// a double-word value so that omega*gamma phases stay accurate at gamma ~ 1e7.
struct CertParams {
  double alpha = 0.0;  // Gaussian sharpness
  DoubleDouble omega;  // log-scale centre
  double eta = 0.0;    // half-width
  double A = 0.0;      // height up to which RH is verified
  double T = 0.0;      // summation truncation height
  Variant variant = Variant::kRevers;
  bool rh_mode = false;  // assume RH globally

  double omega_value() const { return omega.hi; }
};

// Reworked Bays-Hudson region (Chao-Plymen): alpha = 1.34e11,
// omega = 727.952018, eta = 1.6e-4, A = 1.022e7, T = 1131944.4718.
CertParams chao_plymen_params();
// Saouter-Demichel region: alpha = 6e12, omega = 727.95134, eta = 2A/alpha,
// A = 6.85e7, T = 10379599.7274.
CertParams saouter_demichel_params();

struct Violation {
  std::string condition;  // e.g. "eta < omega/100"
  double lhs;
  double rhs;
};

// Side conditions of the selected variant that fail. In rh_mode the alpha and
// eta conditions of the Lehman, Saouter-Demichel and Revers variants are
// skipped; the std2015 variant keeps them (its theorem only drops the
// e^{(omega+eta)/2} factor under RH).
std::vector<Violation> validate_conditions(const CertParams& p);
std::string describe(const std::vector<Violation>& violations);

struct BudgetTerm {
  std::string name;
  double value;
};

// Itemized remainder bound in fixed term order; total is the compensated sum.
// A term whose exponent overflows is +inf, which makes any certificate fail.
struct ErrorBudget {
  std::vector<BudgetTerm> terms;
  double total = 0.0;

  double term(std::string_view name) const;
};

// R1..R6. R6 is 0 in rh_mode. Throws Error(kConditionViolated) when
// validate_conditions reports anything.
ErrorBudget revers_terms(const CertParams& p);
// S1..S6.
ErrorBudget lehman_terms(const CertParams& p);
// S1' alone, and the full S1', S2..S6 budget.
double saouter_demichel_s1(const CertParams& p);
ErrorBudget saouter_demichel_terms(const CertParams& p);
// R1..R5 of the weighted-kernel variant. The theorem writes
// I = -1 + sum + R1 - R2 - R3 - R4 - R5; all five are reported here as
// non-negative magnitudes and subtracted in a one-sided lower bound.
ErrorBudget std_terms(const CertParams& p);

// Dispatch on p.variant.
ErrorBudget error_budget(const CertParams& p);

}  // namespace skewes
