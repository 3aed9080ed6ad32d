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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewes/zero_catalog.hpp"

namespace skewes {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

bool all_passed(const std::vector<CheckResult>& checks);
std::string render_checks(const std::vector<CheckResult>& checks);

// Zero-sum lemmas on the catalog (1/gamma^2, 1/gamma^3 totals and the
// reciprocal-sum bracket at the last ordinate) plus the five kernel lemmas
// against adaptive quadrature on `grid_points` random parameter triples.
std::vector<CheckResult> run_lemma_suite(const ZeroCatalog& catalog, int grid_points = 100,
                                         std::uint64_t seed = 20260101);

struct OracleSuiteOptions {
  std::uint64_t max_x = 10'000'000;  // sieve extent for the pi < li sweep
  int samples = 10'000;
  int li_complex_points = 100;
  std::uint64_t seed = 20260102;
  // pi(4e9) from an external table; the Dusart check runs only when set.
  std::optional<std::uint64_t> pi_at_4e9;
};

// Sieve counts, pi < li, Riemann-von Mangoldt convergence at x = 1000,
// li_complex remainder soundness, classic bound sweep, prime-power identity
// and tail inequality. Needs at least 1000 ordinates for the convergence check.
std::vector<CheckResult> run_oracle_suite(const ZeroCatalog& catalog, const OracleSuiteOptions& opt = {});

}  // namespace skewes
