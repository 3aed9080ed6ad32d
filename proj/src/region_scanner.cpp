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

#include "skewes/region_scanner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "skewes/error.hpp"
#include "skewes/zero_sum.hpp"

namespace skewes {

namespace {

struct KnownRegion {
  double omega;
  const char* name;
};

constexpr KnownRegion kKnownRegions[] = {
    {175.9619, "detected by Bays-Hudson"}, {179.0999, "detected by Bays-Hudson"},
    {190.1264, "detected by Bays-Hudson"}, {259.9694, "detected by Bays-Hudson"},
    {298.0048, "detected by Bays-Hudson"}, {316.1456, "Bays-Hudson region"},
    {370.8233, "te Riele region"},         {1165.2019, "Lehman region"},
};

std::string g15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  if (!out) fail(ErrorCode::kIo, "write failed: " + path.string());
}

}  // namespace

double f_T(const ZeroCatalog& catalog, DoubleDouble omega_natural, double T, const ParallelOptions& opt) {
  return -1.0 - sum_s(catalog, kNoDamping, omega_natural, T, opt);
}

double F_T(const ZeroCatalog& catalog, DoubleDouble omega_log10, double T, const ParallelOptions& opt) {
  return f_T(catalog, omega_log10 * dd::kLn10, T, opt);
}

ScanSeries scan(const ZeroCatalog& catalog, double omega_lo, double omega_hi, std::size_t points, double T,
                const ParallelOptions& opt) {
  require(omega_lo < omega_hi, "scan: requires omega_lo < omega_hi");
  require(points >= 2, "scan: at least 2 points");
  if (T > catalog.last()) fail(ErrorCode::kCatalogExhausted, "scan: T exceeds the last catalog ordinate");

  ScanSeries s;
  s.T = T;
  s.zeros_used = catalog.count_below(T);
  s.spacing = (omega_hi - omega_lo) / static_cast<double>(points - 1);
  s.omegas.resize(points);
  for (std::size_t i = 0; i < points; ++i) {
    s.omegas[i] = i + 1 == points ? omega_hi : omega_lo + s.spacing * static_cast<double>(i);
  }

  ParallelOptions inner;
  inner.chunk_size = opt.chunk_size;
  inner.threads = 1;
  ParallelOptions outer;
  outer.chunk_size = 1;
  outer.threads = opt.threads;
  const auto values = map_chunks<double>(points, outer, [&](std::size_t i, std::size_t) {
    return F_T(catalog, DoubleDouble(s.omegas[i]), T, inner);
  });
  s.values = values;
  return s;
}

std::vector<Candidate> find_candidates(const ScanSeries& series, double threshold) {
  require(!series.values.empty(), "find_candidates: empty series");
  require(series.values.size() == series.omegas.size(), "find_candidates: length mismatch");
  std::vector<Candidate> out;
  const auto& v = series.values;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i] > v[i - 1] && v[i] > v[i + 1] && v[i] >= threshold) {
      Candidate c{series.omegas[i], v[i], {}};
      for (const auto& k : kKnownRegions) {
        if (std::fabs(k.omega - c.omega) <= 0.05) c.comment = k.name;
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::string render_csv(const ScanSeries& series) {
  std::string out = "omega,f_value\n";
  for (std::size_t i = 0; i < series.omegas.size(); ++i) {
    out += g15(series.omegas[i]) + "," + g15(series.values[i]) + "\n";
  }
  return out;
}

std::string render_svg(const ScanSeries& series) {
  require(!series.values.empty(), "render_svg: empty series");
  constexpr double W = 800, H = 300, L = 70, R = 20, Tm = 20, B = 50;
  const double x0 = series.omegas.front();
  const double x1 = series.omegas.back();
  double y0 = *std::min_element(series.values.begin(), series.values.end());
  double y1 = *std::max_element(series.values.begin(), series.values.end());
  y0 = std::min(y0, 0.0);
  y1 = std::max(y1, 0.0);
  if (y1 - y0 < 1e-12) y1 = y0 + 1;
  const double xr = x1 > x0 ? x1 - x0 : 1;
  auto px = [&](double x) { return L + (x - x0) / xr * (W - L - R); };
  auto py = [&](double y) { return Tm + (y1 - y) / (y1 - y0) * (H - Tm - B); };

  std::ostringstream o;
  o.precision(6);
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
    << " " << H << "\">\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  o << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
    << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << L << "\" y1=\"" << Tm << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << L << "\" y1=\"" << py(0) << "\" x2=\"" << W - R << "\" y2=\"" << py(0)
    << "\" stroke=\"red\" stroke-dasharray=\"4 3\"/>\n";
  o << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < series.values.size(); ++i) {
    if (i) o << ' ';
    o << px(series.omegas[i]) << ',' << py(series.values[i]);
  }
  o << "\"/>\n";
  o << "<text x=\"" << L << "\" y=\"" << H - B + 18 << "\" font-size=\"12\">" << g15(x0) << "</text>\n";
  o << "<text x=\"" << W - R << "\" y=\"" << H - B + 18 << "\" font-size=\"12\" text-anchor=\"end\">" << g15(x1)
    << "</text>\n";
  o << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 10
    << "\" font-size=\"13\" text-anchor=\"middle\">omega (x = 10^omega)</text>\n";
  o << "<text x=\"" << L - 6 << "\" y=\"" << Tm + 10 << "\" font-size=\"12\" text-anchor=\"end\">" << g15(y1)
    << "</text>\n";
  o << "<text x=\"" << L - 6 << "\" y=\"" << H - B << "\" font-size=\"12\" text-anchor=\"end\">" << g15(y0)
    << "</text>\n";
  o << "<text x=\"16\" y=\"" << (Tm + H - B) / 2 << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
    << (Tm + H - B) / 2 << ")\">F_T(omega)</text>\n";
  o << "</svg>\n";
  return o.str();
}

void emit_csv(const ScanSeries& series, const std::filesystem::path& path) { write_file(path, render_csv(series)); }

void emit_svg(const ScanSeries& series, const std::filesystem::path& path) { write_file(path, render_svg(series)); }

}  // namespace skewes
