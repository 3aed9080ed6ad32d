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

// Test-data generator: ordinates of the first N nontrivial zeta zeros.
//
// Z(t) is evaluated by the Riemann-Siegel formula in extended precision with
// the correction terms C0..C4. Zeros are isolated between Gram points and the
// count below every good Gram point is checked against Rosser's rule, so a
// missed pair of close zeros aborts the run instead of shifting the indices.
//
// Output: one ordinate per line. Zeros whose estimated error exceeds the
// --refine-above threshold are also listed (index, ordinate) in the file given
// by --refine-list so that a multiprecision pass can polish them.
//
//   zeta_zeros --count 100000 --out zeros.txt --refine-list low.txt

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace {

#include "rs_coefficients.inc"

using Real = long double;

constexpr Real kPi = 3.141592653589793238462643383279502884L;
constexpr Real kTwoPi = 2 * kPi;

Real theta(Real t) {
  const Real t2 = t * t;
  return t / 2 * std::log(t / kTwoPi) - t / 2 - kPi / 8 + 1 / (48 * t) +
         7 / (5760 * t * t2) + 31 / (80640 * t * t2 * t2) +
         127 / (430080 * t * t2 * t2 * t2);
}

Real correction(int k, Real x) {
  Real acc = 0;
  for (int i = kRsDegree; i >= 0; --i) acc = acc * x + kRsCoeff[k][i];
  return acc;
}

Real siegel_z(Real t) {
  const Real a = std::sqrt(t / kTwoPi);
  const long n_terms = static_cast<long>(std::floor(a));
  const Real p = a - n_terms;
  const Real th = theta(t);
  Real sum = 0;
  for (long n = 1; n <= n_terms; ++n) {
    const Real ln = std::log(static_cast<Real>(n));
    Real phase = std::fmod(th - t * ln, kTwoPi);
    sum += std::cos(phase) / std::sqrt(static_cast<Real>(n));
  }
  sum *= 2;
  const Real x = p - 0.5L;
  Real corr = 0;
  Real inv = 1;
  for (int k = 0; k < 5; ++k) {
    corr += correction(k, x) * inv;
    inv /= a;
  }
  const Real sign = (n_terms % 2 == 1) ? 1 : -1;
  return sum + sign * std::pow(kTwoPi / t, 0.25L) * corr;
}

// Remainder after C4 (Gabcke); only meaningful for t >= 200.
Real rs_remainder(Real t) { return 0.017L * std::pow(t / kTwoPi, -2.75L); }

Real gram_point(long n, Real guess) {
  Real t = guess;
  for (int it = 0; it < 60; ++it) {
    const Real f = theta(t) - n * kPi;
    const Real d = 0.5L * std::log(t / kTwoPi);
    const Real step = f / d;
    t -= step;
    if (std::fabs(step) < 1e-15L * t) break;
  }
  return t;
}

struct Root {
  Real t;
  Real slope;
};

// Illinois false position on a bracketing interval.
Root refine(Real lo, Real hi, Real zlo, Real zhi) {
  int side = 0;
  for (int it = 0; it < 200; ++it) {
    const Real mid = (lo * zhi - hi * zlo) / (zhi - zlo);
    const Real zm = siegel_z(mid);
    if (zm == 0) return {mid, (zhi - zlo) / (hi - lo)};
    if ((zm > 0) == (zhi > 0)) {
      hi = mid;
      zhi = zm;
      if (side == 1) zlo /= 2;
      side = 1;
    } else {
      lo = mid;
      zlo = zm;
      if (side == -1) zhi /= 2;
      side = -1;
    }
    if (hi - lo < 1e-17L * hi) break;
  }
  const Real t = (lo * zhi - hi * zlo) / (zhi - zlo);
  const Real h = 1e-6L;
  return {t, (siegel_z(t + h) - siegel_z(t - h)) / (2 * h)};
}

// Sign changes of Z on [a, b] sampled at `samples` equal subintervals.
std::vector<Root> roots_in(Real a, Real b, Real za, Real zb, int samples) {
  std::vector<Root> out;
  Real prev_t = a;
  Real prev_z = za;
  for (int i = 1; i <= samples; ++i) {
    const Real t = (i == samples) ? b : a + (b - a) * i / samples;
    const Real z = (i == samples) ? zb : siegel_z(t);
    if ((prev_z > 0) != (z > 0)) out.push_back(refine(prev_t, t, prev_z, z));
    prev_t = t;
    prev_z = z;
  }
  return out;
}

struct Options {
  long count = 100000;
  std::string out = "zeros.txt";
  std::string refine_list;
  Real refine_above = 2e-11L;
};

Options parse(int argc, char** argv) {
  Options o;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string key = argv[i];
    if (key == "--count") o.count = std::atol(argv[i + 1]);
    else if (key == "--out") o.out = argv[i + 1];
    else if (key == "--refine-list") o.refine_list = argv[i + 1];
    else if (key == "--refine-above") o.refine_above = std::strtold(argv[i + 1], nullptr);
    else {
      std::fprintf(stderr, "unknown option %s\n", key.c_str());
      std::exit(2);
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const Options opt = parse(argc, argv);
  std::vector<Root> zeros;
  zeros.reserve(opt.count + 64);

  // Gram block [g_first, g_last] is accumulated until its right end is good.
  long n = -1;
  Real g = gram_point(n, 9.67L);
  Real zg = siegel_z(g);
  long block_start = n;
  std::vector<Real> block_pts{g};
  std::vector<Real> block_vals{zg};

  auto good = [](long idx, Real z) { return (idx % 2 == 0) ? z > 0 : z < 0; };

  while (static_cast<long>(zeros.size()) < opt.count) {
    const long next = n + 1;
    const Real gn = gram_point(next, g + kTwoPi / std::log(g / kTwoPi));
    const Real zn = siegel_z(gn);
    block_pts.push_back(gn);
    block_vals.push_back(zn);
    n = next;
    g = gn;
    if (!good(n, zn)) continue;

    // Block from block_start to n: expect n - block_start zeros.
    const long expected = n - block_start;
    std::vector<Root> found;
    for (int samples : {4, 32, 256, 2048}) {
      found.clear();
      for (std::size_t i = 0; i + 1 < block_pts.size(); ++i) {
        auto r = roots_in(block_pts[i], block_pts[i + 1], block_vals[i],
                          block_vals[i + 1], samples);
        found.insert(found.end(), r.begin(), r.end());
      }
      if (static_cast<long>(found.size()) == expected) break;
    }
    if (static_cast<long>(found.size()) != expected) {
      std::fprintf(stderr, "Rosser check failed in Gram block [%ld, %ld]: %zu zeros, expected %ld\n",
                   block_start, n, found.size(), expected);
      return 1;
    }
    zeros.insert(zeros.end(), found.begin(), found.end());
    if (static_cast<long>(zeros.size()) != n + 1) {
      std::fprintf(stderr, "count mismatch at Gram point %ld: %zu\n", n, zeros.size());
      return 1;
    }
    block_start = n;
    block_pts.assign(1, gn);
    block_vals.assign(1, zn);
  }

  std::FILE* out = std::fopen(opt.out.c_str(), "w");
  std::FILE* low = opt.refine_list.empty() ? nullptr : std::fopen(opt.refine_list.c_str(), "w");
  if (!out || (!opt.refine_list.empty() && !low)) {
    std::fprintf(stderr, "cannot open output\n");
    return 3;
  }
  Real worst = 0;
  long flagged = 0;
  for (long i = 0; i < opt.count; ++i) {
    const Root& r = zeros[i];
    const Real slope = std::fabs(r.slope);
    const Real err = (r.t < 200 ? 1 : rs_remainder(r.t) + 1e-16L * std::sqrt(r.t)) / slope;
    std::fprintf(out, "%.12Lf\n", r.t);
    if (err > opt.refine_above) {
      ++flagged;
      if (low) std::fprintf(low, "%ld %.15Lf\n", i + 1, r.t);
    } else if (err > worst) {
      worst = err;
    }
  }
  std::fclose(out);
  if (low) std::fclose(low);
  std::fprintf(stderr, "%ld zeros, last %.12Lf, %ld flagged for refinement, worst unflagged error %.3Le\n",
               opt.count, zeros[opt.count - 1].t, flagged, worst);
  return 0;
}
