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
#include <string>
#include <vector>

#include "skewes/double_double.hpp"
#include "skewes/parallel.hpp"
#include "skewes/zero_catalog.hpp"

namespace skewes {

struct ScanSeries {
  std::vector<double> omegas;  // base-10 exponents, strictly ascending
  std::vector<double> values;  // F_T(omega)
  double T = 0.0;
  std::size_t zeros_used = 0;
  double spacing = 0.0;        // grid step in base-10 exponent
};

struct Candidate {
  double omega;
  double value;
  std::string comment;
};

// f_T(omega) = -1 - sum over 0 < gamma <= T of 2 Re(e^{i omega gamma} / rho).
double f_T(const ZeroCatalog& catalog, DoubleDouble omega_natural, double T, const ParallelOptions& opt = {});
// F_T(omega) = f_T(omega ln 10).
double F_T(const ZeroCatalog& catalog, DoubleDouble omega_log10, double T, const ParallelOptions& opt = {});

// `points` equally spaced exponents in [omega_lo, omega_hi], endpoints
// included. Grid points run in parallel; each F_T is summed sequentially
// with the same chunking as f_T, so values match single evaluations bit for bit.
ScanSeries scan(const ZeroCatalog& catalog, double omega_lo, double omega_hi, std::size_t points, double T,
                const ParallelOptions& opt = {});

// Strict interior local maxima with value >= threshold, ascending in omega.
// Points within 0.05 of a known region get its name as comment.
std::vector<Candidate> find_candidates(const ScanSeries& series, double threshold);

void emit_csv(const ScanSeries& series, const std::filesystem::path& path);
void emit_svg(const ScanSeries& series, const std::filesystem::path& path);
std::string render_csv(const ScanSeries& series);
std::string render_svg(const ScanSeries& series);

}  // namespace skewes
