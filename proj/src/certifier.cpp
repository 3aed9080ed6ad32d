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

#include "skewes/certifier.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "skewes/error.hpp"
#include "skewes/summation.hpp"

namespace skewes {

namespace {

std::string fmt(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string fmt_omega(const DoubleDouble& w) {
  // hi + lo to ~20 significant digits without losing the tail.
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g", w.hi);
  std::string s = buf;
  if (w.lo != 0.0) {
    std::snprintf(buf, sizeof buf, " (+%.3g)", w.lo);
    s += buf;
  }
  return s;
}

struct SharedSums {
  SumResult sum;
  double epsilon;
  bool overridden;
};

SharedSums shared_sums(const ZeroCatalog* catalog, const CertParams& p, const CertifyOptions& opt) {
  SharedSums out{};
  if (opt.s_star_override) {
    const bool compat = opt.sums.compat_deltas || catalog == nullptr;
    double eps = kDefaultZeroAccuracy;
    if (opt.sums.epsilon) {
      eps = *opt.sums.epsilon;
    } else if (catalog != nullptr) {
      eps = compat ? catalog->declared_accuracy() : catalog->accuracy();
    }
    out.sum.s1 = *opt.s_star_override;
    out.sum.s2 = 0.0;
    out.sum.s_star = *opt.s_star_override;
    out.sum.delta_s1 = delta_s1_bound(catalog, p.alpha, p.omega_value(), p.T, eps, compat);
    out.sum.delta_s2 = delta_s2_bound(catalog, p.alpha, p.omega_value(), p.T, eps, compat);
    out.epsilon = eps;
    out.overridden = true;
    return out;
  }
  if (catalog == nullptr) fail(ErrorCode::kInvalidArgument, "certify needs a zero catalog or an S* override");
  out.sum = evaluate_sums(*catalog, p, opt.sums);
  out.epsilon = opt.sums.epsilon.value_or(opt.sums.compat_deltas ? catalog->declared_accuracy()
                                                                : catalog->accuracy());
  return out;
}

Certificate build(const CertParams& p, const SharedSums& s, ErrorBudget budget) {
  Certificate c;
  c.params = p;
  c.sum = s.sum;
  c.epsilon = s.epsilon;
  c.s_star_overridden = s.overridden;
  c.budget = std::move(budget);
  c.lower_bound = assemble_lower_bound(c.sum, c.budget.total);
  c.verdict = c.lower_bound > 0 ? Verdict::kPositive : Verdict::kInconclusive;
  c.run_length_log10 = c.verdict == Verdict::kPositive ? run_length(c.lower_bound, p.omega_value(), p.eta) : 0.0;
  return c;
}

}  // namespace

double assemble_lower_bound(const SumResult& sum, double budget_total) {
  CompensatedSum acc;
  acc.add(-1.0);
  acc.add(-sum.s_star);
  acc.add(-sum.delta_s1);
  acc.add(-sum.delta_s2);
  acc.add(-budget_total);
  return acc.value();
}

double run_length(double delta, double omega, double eta) {
  require(delta > 0.0, "run_length: delta must be positive");
  require(omega >= eta, "run_length: omega must be >= eta");
  return std::log10(delta) + (omega - eta) / (2 * std::numbers::ln10);
}

std::string render_power_of_ten(double log10_value, int decimals) {
  if (!std::isfinite(log10_value)) return fmt(log10_value);
  double k = std::floor(log10_value);
  double mantissa = std::pow(10.0, log10_value - k);
  const double unit = std::pow(10.0, decimals);
  mantissa = std::round(mantissa * unit) / unit;
  if (mantissa >= 10.0) {
    mantissa /= 10.0;
    k += 1;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*fx10^%.0f", decimals, mantissa, k);
  return buf;
}

Certificate certify(const ZeroCatalog* catalog, const CertParams& p, const CertifyOptions& opt) {
  // Conditions first so a bad parameter set fails before the zero sum runs.
  const auto violations = validate_conditions(p);
  if (!violations.empty()) fail(ErrorCode::kConditionViolated, describe(violations));
  ErrorBudget budget = error_budget(p);
  return build(p, shared_sums(catalog, p, opt), std::move(budget));
}

ResizeTable resize_eta(const ZeroCatalog* catalog, const CertParams& p, std::span<const double> eta_grid,
                       const CertifyOptions& opt, bool refine) {
  require(!eta_grid.empty(), "resize_eta: empty eta grid");
  std::vector<ErrorBudget> budgets;
  for (double eta : eta_grid) {
    CertParams q = p;
    q.eta = eta;
    budgets.push_back(error_budget(q));
  }
  const SharedSums s = shared_sums(catalog, p, opt);

  ResizeTable t;
  t.base = p;
  t.sum = s.sum;
  t.epsilon = s.epsilon;
  t.s_star_overridden = s.overridden;
  for (std::size_t i = 0; i < eta_grid.size(); ++i) {
    const double lower = assemble_lower_bound(s.sum, budgets[i].total);
    t.rows.push_back({eta_grid[i], std::move(budgets[i]), lower});
    if (lower > 0 && (!t.best || eta_grid[i] < t.rows[*t.best].eta)) t.best = i;
  }

  if (refine && t.best && *t.best + 1 < t.rows.size() && !(t.rows[*t.best + 1].lower_bound > 0)) {
    double good = t.rows[*t.best].eta;
    double bad = t.rows[*t.best + 1].eta;
    auto positive = [&](double eta) {
      CertParams q = p;
      q.eta = eta;
      try {
        return assemble_lower_bound(s.sum, error_budget(q).total) > 0;
      } catch (const Error&) {
        return false;
      }
    };
    while (std::fabs(good - bad) > 5e-5 * std::fabs(good)) {
      const double mid = 0.5 * (good + bad);
      (positive(mid) ? good : bad) = mid;
    }
    // Round up to 4 significant digits; keep the raw value if that loses positivity.
    const double unit = std::pow(10.0, std::floor(std::log10(good)) - 3);
    const double rounded = std::ceil(good / unit) * unit;
    t.refined_eta = positive(rounded) ? rounded : good;
  }
  return t;
}

std::string render_certificate(const Certificate& c) {
  std::ostringstream o;
  const auto& p = c.params;
  o << "variant = " << variant_name(p.variant) << "\n";
  o << "rh_mode = " << (p.rh_mode ? "true" : "false") << "\n";
  o << "alpha = " << fmt(p.alpha) << "\n";
  o << "omega = " << fmt_omega(p.omega) << "\n";
  o << "eta = " << fmt(p.eta) << "\n";
  o << "A = " << fmt(p.A) << "\n";
  o << "T = " << fmt(p.T, 15) << "\n";
  o << "zero_accuracy = " << fmt(c.epsilon) << "\n";
  o << "s_star_source = " << (c.s_star_overridden ? "override" : "catalog") << "\n";
  if (!c.s_star_overridden) {
    o << "zeros_used = " << c.sum.zeros_used << "\n";
    o << "T_effective = " << fmt(c.sum.T_effective, 15) << "\n";
    o << "S1_star = " << fmt(c.sum.s1, 16) << "\n";
    o << "S2_star = " << fmt(c.sum.s2, 16) << "\n";
  }
  o << "S_star = " << fmt(c.sum.s_star, 16) << "\n";
  o << "delta_S1 = " << fmt(c.sum.delta_s1) << "\n";
  o << "delta_S2 = " << fmt(c.sum.delta_s2) << "\n";
  for (const auto& t : c.budget.terms) o << t.name << " = " << fmt(t.value) << "\n";
  o << "R_total = " << fmt(c.budget.total) << "\n";
  o << "lower_bound = " << fmt(c.lower_bound, 12) << "\n";
  if (c.verdict == Verdict::kPositive) {
    o << "run_length_log10 = " << fmt(c.run_length_log10, 12) << "\n";
    o << "run_length = " << render_power_of_ten(c.run_length_log10, 5) << "\n";
  }
  o << "VERDICT: " << (c.verdict == Verdict::kPositive ? "positive" : "inconclusive") << "\n";
  return o.str();
}

std::string render_certificate_json(const Certificate& c) {
  nlohmann::ordered_json j;
  const auto& p = c.params;
  j["variant"] = variant_name(p.variant);
  j["rh_mode"] = p.rh_mode;
  j["alpha"] = p.alpha;
  j["omega"] = {p.omega.hi, p.omega.lo};
  j["eta"] = p.eta;
  j["A"] = p.A;
  j["T"] = p.T;
  j["zero_accuracy"] = c.epsilon;
  j["s_star_source"] = c.s_star_overridden ? "override" : "catalog";
  j["zeros_used"] = c.sum.zeros_used;
  j["S1_star"] = c.sum.s1;
  j["S2_star"] = c.sum.s2;
  j["S_star"] = c.sum.s_star;
  j["delta_S1"] = c.sum.delta_s1;
  j["delta_S2"] = c.sum.delta_s2;
  auto& terms = j["budget"];
  terms = nlohmann::ordered_json::object();
  for (const auto& t : c.budget.terms) terms[t.name] = t.value;
  j["R_total"] = c.budget.total;
  j["lower_bound"] = c.lower_bound;
  j["run_length_log10"] = c.run_length_log10;
  j["verdict"] = c.verdict == Verdict::kPositive ? "positive" : "inconclusive";
  return j.dump(2) + "\n";
}

std::string render_resize_table(const ResizeTable& t) {
  std::ostringstream o;
  o << "variant = " << variant_name(t.base.variant) << "\n";
  o << "S_star = " << fmt(t.sum.s_star, 16) << " (" << (t.s_star_overridden ? "override" : "catalog") << ")\n";
  o << "delta_S1 = " << fmt(t.sum.delta_s1) << "\n";
  o << "delta_S2 = " << fmt(t.sum.delta_s2) << "\n";
  o << "eta,R_total,lower_bound,verdict\n";
  for (const auto& r : t.rows) {
    o << fmt(r.eta) << "," << fmt(r.budget.total) << "," << fmt(r.lower_bound) << ","
      << (r.lower_bound > 0 ? "positive" : "inconclusive") << "\n";
  }
  if (t.best) {
    o << "best_eta = " << fmt(t.rows[*t.best].eta) << "\n";
  } else {
    o << "best_eta = none\n";
  }
  if (t.refined_eta) o << "refined_eta = " << fmt(*t.refined_eta, 4) << "\n";
  return o.str();
}

}  // namespace skewes
