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

#include "skewes/error_budget.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "skewes/error.hpp"
#include "skewes/kernel_math.hpp"
#include "skewes/summation.hpp"

namespace skewes {

namespace {

using std::numbers::ln2;
using std::numbers::pi;

constexpr double kTwoPiE = 2 * pi * std::numbers::e;

ErrorBudget make_budget(std::vector<BudgetTerm> terms) {
  CompensatedSum acc;
  for (const auto& t : terms) acc.add(t.value);
  ErrorBudget b{std::move(terms), 0.0};
  b.total = acc.value();
  return b;
}

// exp(log_coeff + exponent) without forming e^{(omega+eta)/2} on its own.
double log_space_term(double coeff, double exponent) {
  if (coeff == 0.0) return 0.0;
  return conservative_exp(std::log(coeff) + exponent);
}

void enforce(const CertParams& p) {
  const auto v = validate_conditions(p);
  if (!v.empty()) fail(ErrorCode::kConditionViolated, describe(v));
}

// Shared truncation term (S4 without, R4 with, the (1 + 1/(omega T)) factor).
double truncation_term(const CertParams& p) {
  const double a = p.alpha;
  const double T = p.T;
  return conservative_exp(-T * T / (2 * a)) *
         (a / (pi * T * T) * std::log(T / (2 * pi)) + 8 * std::log(T) / T + 4 * a / (T * T * T));
}

std::vector<BudgetTerm> lehman_s2_to_s6(const CertParams& p) {
  const double a = p.alpha;
  const double w = p.omega_value();
  const double eta = p.eta;
  const double A = p.A;
  const double damp = conservative_exp(-a * eta * eta / 2);
  const double s2 = 2 * damp / (eta * std::sqrt(2 * pi * a));
  const double s3 = 0.08 * std::sqrt(a) * damp;
  const double s4 = truncation_term(p);
  const double s5 = 0.05 / (w - eta);
  const double s6 =
      p.rh_mode ? 0.0
                : log_space_term(A * std::log(A) * (4 / std::sqrt(a) + 15 * eta),
                                 -A * A / (2 * a) + (w + eta) / 2);
  return {{"S2", s2}, {"S3", s3}, {"S4", s4}, {"S5", s5}, {"S6", s6}};
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kLehman1966: return "lehman1966";
    case Variant::kSaouterDemichel2010: return "saouter_demichel2010";
    case Variant::kRevers: return "revers";
    case Variant::kStd2015: return "std2015";
  }
  return "unknown";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (Variant v : {Variant::kLehman1966, Variant::kSaouterDemichel2010, Variant::kRevers, Variant::kStd2015}) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

CertParams chao_plymen_params() {
  CertParams p;
  p.alpha = 1.34e11;
  p.omega = parse_decimal("727.952018");
  p.eta = 1.6e-4;
  p.A = 1.022e7;
  p.T = 1131944.4718;
  return p;
}

CertParams saouter_demichel_params() {
  CertParams p;
  p.alpha = 6e12;
  p.omega = parse_decimal("727.95134");
  p.A = 6.85e7;
  p.eta = 2 * p.A / p.alpha;
  p.T = 10379599.7274;
  return p;
}

std::vector<Violation> validate_conditions(const CertParams& p) {
  std::vector<Violation> out;
  const double a = p.alpha;
  const double w = p.omega_value();
  const double eta = p.eta;
  const double A = p.A;
  const double T = p.T;
  auto check = [&](bool ok, std::string name, double lhs, double rhs) {
    if (!ok) out.push_back({std::move(name), lhs, rhs});
  };

  for (auto [name, v] : {std::pair{"alpha > 0", a}, {"omega > 0", w}, {"eta > 0", eta}, {"A > 0", A}, {"T > 0", T}}) {
    check(v > 0 && std::isfinite(v), name, v, 0.0);
  }
  if (!out.empty()) return out;
  check(T <= A, "T <= A", T, A);
  check(T > kTwoPiE, "T > 2*pi*e", T, kTwoPiE);

  const bool side = !p.rh_mode || p.variant == Variant::kStd2015;
  switch (p.variant) {
    case Variant::kLehman1966:
    case Variant::kSaouterDemichel2010:
      if (p.variant == Variant::kLehman1966) {
        check(w - eta > 1, "omega - eta > 1", w - eta, 1);
      } else {
        check(w - eta > 25.57, "omega - eta > 25.57", w - eta, 25.57);
      }
      if (side) {
        check(4 * A / w <= a, "4A/omega <= alpha", 4 * A / w, a);
        check(a <= A * A, "alpha <= A^2", a, A * A);
        check(2 * A / a <= eta, "2A/alpha <= eta", 2 * A / a, eta);
        check(eta < w / 2, "eta < omega/2", eta, w / 2);
      }
      break;
    case Variant::kRevers:
    case Variant::kStd2015:
      if (p.variant == Variant::kRevers) {
        check(w - eta >= 44.22, "omega - eta >= 44.22", w - eta, 44.22);
      } else {
        check(w > 73.69, "omega > 73.69", w, 73.69);
      }
      if (side) {
        check(5 * A / (4 * w) <= a, "5A/(4 omega) <= alpha", 5 * A / (4 * w), a);
        check(a <= A * A, "alpha <= A^2", a, A * A);
        check(eta < w / 100, "eta < omega/100", eta, w / 100);
      }
      break;
  }
  return out;
}

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream s;
  s.precision(9);
  s << "parameter conditions violated:";
  for (const auto& v : violations) s << " [" << v.condition << ": " << v.lhs << " vs " << v.rhs << "]";
  return s.str();
}

double ErrorBudget::term(std::string_view name) const {
  for (const auto& t : terms) {
    if (t.name == name) return t.value;
  }
  fail(ErrorCode::kInvalidArgument, "no budget term named " + std::string(name));
}

ErrorBudget revers_terms(const CertParams& p) {
  enforce(p);
  const double a = p.alpha;
  const double w = p.omega_value();
  const double eta = p.eta;
  const double A = p.A;
  const double T = p.T;
  const double d = w - eta;
  const double sum = w + eta;
  const double half = a * eta * eta / 2;

  const double r1 = 2 / d + 8 / (d * d) + 58.56 / (d * d * d) + ln2 * sum * conservative_exp(-d / 2) +
                    2 * sum * conservative_exp(-d / 6) / ln2;
  const double damp = conservative_exp(-half);
  const double r2 =
      0.037 / (w * std::sqrt(a)) * (std::min(0.082 * a, 1 / eta) * damp + -std::expm1(-half) / d);
  const double r3 = 0.074 * std::sqrt(a) * damp;
  const double r4 = truncation_term(p) * (1 + 1 / (w * T));
  const double r5 = 0.003 / (d * d);
  double r6 = 0.0;
  if (!p.rh_mode) {
    const double lead = (1 + 22 / (A * w)) * A * std::log(A);
    r6 = log_space_term(lead * 8.283 / A, -a * eta * eta / 4 + sum / 2) +
         log_space_term(lead * 7.152 * eta, -A * A / (2 * a) + sum / 2);
  }
  return make_budget({{"R1", r1}, {"R2", r2}, {"R3", r3}, {"R4", r4}, {"R5", r5}, {"R6", r6}});
}

ErrorBudget lehman_terms(const CertParams& p) {
  enforce(p);
  const double w = p.omega_value();
  const double d = w - p.eta;
  std::vector<BudgetTerm> terms{{"S1", 3 / d + 4 * (w + p.eta) * conservative_exp(-d / 6)}};
  for (auto& t : lehman_s2_to_s6(p)) terms.push_back(std::move(t));
  return make_budget(std::move(terms));
}

double saouter_demichel_s1(const CertParams& p) {
  const double w = p.omega_value();
  const double d = w - p.eta;
  require(d > 25.57, "saouter_demichel_s1 requires omega - eta > 25.57");
  const double sum = w + p.eta;
  return 2 / d + 10.04 / (d * d) + ln2 * sum * conservative_exp(-d / 2) +
         2 / ln2 * sum * conservative_exp(-d / 6);
}

ErrorBudget saouter_demichel_terms(const CertParams& p) {
  enforce(p);
  std::vector<BudgetTerm> terms{{"S1'", saouter_demichel_s1(p)}};
  for (auto& t : lehman_s2_to_s6(p)) terms.push_back(std::move(t));
  return make_budget(std::move(terms));
}

ErrorBudget std_terms(const CertParams& p) {
  enforce(p);
  const double a = p.alpha;
  const double w = p.omega_value();
  const double eta = p.eta;
  const double A = p.A;
  const double d = w - eta;
  const double sum = w + eta;
  const KernelParam k(a);
  const double k_eta = std::max(gaussian_kernel(k, eta), conservative_exp(-a * eta * eta / 2) * std::sqrt(a / (2 * pi)));

  const double r1 = 2 / std::sqrt(a) * k_eta;
  const double r2 = sum * (ln2 * conservative_exp(-d / 2) + 3 * conservative_exp(-d / 6));
  const double l = std::log(A / (2 * pi));
  const double r3 = 0.19 * k_eta + 0.35 / (w * w * std::sqrt(a)) * (l * l + 11.81) + 0.00292 / (d * d);
  const double r4 = truncation_term(p) * (1 + 1 / (w * p.T));
  const double lead = (1 + 22 / (A * w)) * A * std::log(A);
  const double shift = p.rh_mode ? 0.0 : sum / 2;
  const double r5 = log_space_term(lead * 13.840 / A, -a * eta * eta / 4 + shift) +
                    log_space_term(lead * 11.951 * eta, -A * A / (2 * a) + shift);
  return make_budget({{"R1", r1}, {"R2", r2}, {"R3", r3}, {"R4", r4}, {"R5", r5}});
}

ErrorBudget error_budget(const CertParams& p) {
  switch (p.variant) {
    case Variant::kLehman1966: return lehman_terms(p);
    case Variant::kSaouterDemichel2010: return saouter_demichel_terms(p);
    case Variant::kRevers: return revers_terms(p);
    case Variant::kStd2015: return std_terms(p);
  }
  fail(ErrorCode::kInvalidArgument, "unknown variant");
}

}  // namespace skewes
