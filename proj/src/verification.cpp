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

#include "skewes/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "skewes/error.hpp"
#include "skewes/kernel_math.hpp"
#include "skewes/quadrature.hpp"
#include "skewes/reference_oracle.hpp"

namespace skewes {

namespace {

constexpr double kQuadTol = 1e-12;
constexpr double kIdentityTol = 1e-9;

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Triple {
  double alpha;
  double eta;
  double c;
};

std::vector<Triple> kernel_grid(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Triple> out;
  for (int i = 0; i < n; ++i) {
    const double alpha = std::pow(10.0, -2 + 10 * u(rng));
    const double s = std::sqrt(alpha);
    out.push_back({alpha, (0.1 + 3.9 * u(rng)) / s, s * (0.05 + 2.95 * u(rng))});
  }
  return out;
}

// Largest relative deviation of closed form vs quadrature over the grid.
CheckResult identity_check(const std::string& name, const std::vector<Triple>& grid,
                           double (*closed)(const Triple&), double (*numeric)(const Triple&)) {
  double worst = 0.0;
  for (const auto& t : grid) {
    const double a = closed(t);
    const double b = numeric(t);
    worst = std::max(worst, std::fabs(a - b) / std::max(std::fabs(b), 1e-300));
  }
  return {name, worst <= kIdentityTol, "max relative deviation " + sci(worst) + " over " +
                                           std::to_string(grid.size()) + " points (tolerance 1e-9)"};
}

double kernel_window(const Triple& t) { return 40 / std::sqrt(t.alpha); }

}  // namespace

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string render_checks(const std::vector<CheckResult>& checks) {
  std::ostringstream o;
  for (const auto& c : checks) o << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  return o.str();
}

std::vector<CheckResult> run_lemma_suite(const ZeroCatalog& catalog, int grid_points, std::uint64_t seed) {
  std::vector<CheckResult> out;
  const double T = catalog.last();

  const double s2 = catalog.inverse_power_sum(2, T);
  out.push_back({"sum 1/gamma^2 below 2.31050e-2", s2 < kInverseSquareSumBound,
                 "partial sum " + sci(s2) + " over " + std::to_string(catalog.size()) + " zeros"});
  const double s3 = catalog.inverse_power_sum(3, T);
  out.push_back({"sum 1/gamma^3 below 7.29549e-4", s3 < kInverseCubeSumBound, "partial sum " + sci(s3)});
  const double s1 = catalog.inverse_power_sum(1, T);
  const Interval br = reciprocal_sum_bracket(T);
  out.push_back({"sum 1/gamma inside reciprocal bracket", br.contains(s1),
                 "sum " + sci(s1) + " in [" + sci(br.lo) + ", " + sci(br.hi) + "] at T = " + sci(T)});

  const auto grid = kernel_grid(grid_points, seed);

  out.push_back(identity_check(
      "kernel Fourier transform", grid, [](const Triple& t) { return kernel_fourier(KernelParam(t.alpha), t.c); },
      [](const Triple& t) {
        const KernelParam k(t.alpha);
        return 2 * integrate([&](double x) { return gaussian_kernel(k, x) * std::cos(t.c * x); }, 0.0,
                             kernel_window(t), kQuadTol, 30)
                       .value;
      }));

  out.push_back(identity_check(
      "kernel first moment", grid,
      [](const Triple& t) { return kernel_first_moment(KernelParam(t.alpha), t.eta); },
      [](const Triple& t) {
        const KernelParam k(t.alpha);
        return integrate([&](double x) { return x * gaussian_kernel(k, x); }, 0.0, t.eta, kQuadTol, 30).value;
      }));

  {
    // h(x) = 1/x on [c, inf).
    double worst = 0.0;
    bool ok = true;
    for (const auto& t : grid) {
      const double c = std::sqrt(t.alpha) * (0.5 + t.eta * std::sqrt(t.alpha));
      const double bound = gaussian_tail_with_weight(KernelParam(t.alpha), c, 1 / c);
      const auto q = integrate([&](double x) { return std::exp(-x * x / (2 * t.alpha)) / x; }, c,
                               c + 40 * std::sqrt(t.alpha), kQuadTol, 30);
      ok = ok && q.value <= bound * (1 + 1e-12) + q.error_estimate;
      worst = std::max(worst, q.value / bound);
    }
    out.push_back({"Gaussian tail with decreasing weight", ok, "max integral/bound " + sci(worst)});
  }

  {
    double worst = 0.0;
    bool ok = true;
    for (const auto& t : grid) {
      const KernelParam k(t.alpha);
      const double c = t.c * 5;
      const double bound = oscillatory_tail_bound(k, t.eta, c);
      const double hi = t.eta + kernel_window(t);
      const auto re = integrate([&](double x) { return gaussian_kernel(k, x) * std::cos(c * x); }, t.eta, hi,
                                kQuadTol, 30);
      const auto im = integrate([&](double x) { return gaussian_kernel(k, x) * std::sin(c * x); }, t.eta, hi,
                                kQuadTol, 30);
      const double mod = std::hypot(re.value, im.value);
      ok = ok && mod <= bound * (1 + 1e-12) + re.error_estimate + im.error_estimate;
      worst = std::max(worst, mod / bound);
    }
    out.push_back({"oscillatory kernel tail", ok, "max |integral|/bound " + sci(worst)});
  }

  out.push_back(identity_check(
      "truncated Fourier transform", grid,
      [](const Triple& t) { return truncated_fourier(KernelParam(t.alpha), t.eta, t.c); },
      [](const Triple& t) {
        const KernelParam k(t.alpha);
        return 2 * integrate([&](double x) { return gaussian_kernel(k, x) * std::cos(t.c * x); }, 0.0, t.eta,
                             kQuadTol, 30)
                       .value;
      }));
  return out;
}

std::vector<CheckResult> run_oracle_suite(const ZeroCatalog& catalog, const OracleSuiteOptions& opt) {
  require(opt.max_x >= 1'000'000 && opt.max_x <= kSieveLimit, "oracle suite: max_x must lie in [1e6, 1e8]");
  std::vector<CheckResult> out;
  const PrimeTable table(opt.max_x);
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  {
    const bool ok = table.pi(2) == 1 && table.pi(10) == 4 && table.pi(100) == 25 && table.pi(1'000'000) == 78498;
    out.push_back({"sieve prime counts", ok,
                   "pi(100) = " + std::to_string(table.pi(100)) + ", pi(1e6) = " + std::to_string(table.pi(1'000'000))});
  }

  {
    int bad = 0;
    double min_gap = INFINITY;
    const double top = std::log(static_cast<double>(opt.max_x));
    for (int i = 0; i < opt.samples; ++i) {
      const double x = std::floor(std::exp(std::numbers::ln2 + (top - std::numbers::ln2) * u(rng)));
      const double gap = li_real(x) - static_cast<double>(table.pi(static_cast<std::uint64_t>(x)));
      if (!(gap > 0)) ++bad;
      min_gap = std::min(min_gap, gap);
    }
    out.push_back({"pi(x) < li(x)", bad == 0,
                   std::to_string(opt.samples) + " samples up to " + sci(static_cast<double>(opt.max_x)) +
                       ", smallest li - pi " + sci(min_gap)});
  }

  {
    const double x = 1000.0;  // not a prime power
    const double target = table.Pi0(x);
    std::ostringstream detail;
    detail << "Pi0(" << x << ") = " << target << ";";
    double prev = INFINITY;
    bool decreasing = true;
    double last = INFINITY;
    if (catalog.size() < 1000) {
      out.push_back({"explicit formula convergence", false, "needs at least 1000 zero ordinates"});
    } else {
      for (std::size_t K : {10u, 100u, 1000u}) {
        const double err = std::fabs(mangoldt_rhs(x, K, catalog).value - target);
        detail << " K=" << K << ": " << sci(err);
        decreasing = decreasing && err < prev;
        prev = err;
        last = err;
      }
      out.push_back({"explicit formula convergence", decreasing && last < 0.05, detail.str()});
    }
  }

  {
    int bad = 0;
    double worst = 0.0;
    const std::size_t pool = std::min<std::size_t>(catalog.size(), 1000);
    for (int i = 0; i < opt.li_complex_points; ++i) {
      const double gamma = catalog[static_cast<std::size_t>(u(rng) * static_cast<double>(pool)) % pool];
      const double lx = std::log(10.0) + (std::log(1e8) - std::log(10.0)) * u(rng);
      const std::complex<double> z(0.5 * lx, (u(rng) < 0.5 ? -1 : 1) * gamma * lx);
      const double d = std::fabs(z.imag());
      const int n = 1 + static_cast<int>(u(rng) * std::min(20.0, d - 3));
      const auto e = li_complex(z, n);
      const auto ref = li_exp(z);
      const double diff = std::abs(e.value - ref);
      if (!(diff <= e.remainder_bound + 1e-12 * std::abs(ref))) ++bad;
      worst = std::max(worst, diff / (e.remainder_bound + 1e-12 * std::abs(ref)));
    }
    out.push_back({"li_complex remainder soundness", bad == 0,
                   std::to_string(opt.li_complex_points) + " points, max |error|/bound " + sci(worst)});
  }

  {
    bool ok = true;
    for (std::uint64_t x = 2; x <= 1'000'000 && ok; ++x) {
      ok = classic_upper(static_cast<double>(x)) >= static_cast<double>(table.pi(x));
    }
    out.push_back({"pi(x) <= 2x/log x", ok, "every integer 2 <= x <= 1e6"});
  }

  {
    bool ok = true;
    int count = 0;
    for (std::uint64_t p = 2; p <= 10'000; ++p) {
      if (!table.is_prime(p)) continue;
      for (std::uint64_t q = p; q <= 10'000; q *= p) {
        const double x = static_cast<double>(q);
        ok = ok && std::fabs(table.Pi0(x) - table.Pi0_direct(x)) < 1e-9;
        ++count;
      }
    }
    out.push_back({"Pi0 from pi0 sum equals prime-power count", ok,
                   std::to_string(count) + " prime powers up to 1e4"});
  }

  {
    bool ok = true;
    for (int i = 0; i < 2000; ++i) {
      const double x = std::floor(8 + (1e6 - 8) * u(rng));
      ok = ok && prime_power_tail(table, x).holds();
    }
    out.push_back({"prime-power tail bound", ok, "2000 samples 8 <= x <= 1e6, floorless form"});
  }

  if (opt.pi_at_4e9) {
    const auto b = dusart_upper(4e9);
    const double p = static_cast<double>(*opt.pi_at_4e9);
    out.push_back({"Dusart bound at 4e9", b.corrected >= p && b.printed >= p,
                   "printed " + sci(b.printed) + ", corrected " + sci(b.corrected) + ", pi = " + sci(p)});
  }
  return out;
}

}  // namespace skewes
