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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "skewes/skewes.h"

namespace {

const char kSmallTable[] =
    "# accuracy: 1e-9\n"
    "14.134725141734693790\n"
    "21.022039638771554993\n"
    "25.010857580145688763\n"
    "30.424876125859513210\n"
    "32.935061587739189691\n";

std::string data(const char* name) { return std::string(SKEWES_DATA_DIR) + "/" + name; }

skw_catalog* small_catalog() {
  skw_catalog* c = nullptr;
  REQUIRE(skw_catalog_parse_text(kSmallTable, std::strlen(kSmallTable), "small", &c) == SKW_OK);
  return c;
}

template <typename Fn>
std::string fetch(Fn fn) {
  size_t needed = 0;
  REQUIRE(fn(nullptr, 0, &needed) == SKW_OK);
  std::string s(needed, '\0');
  REQUIRE(fn(s.data(), s.size(), &needed) == SKW_OK);
  s.resize(needed - 1);
  return s;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(skw_version()) == "1.0.0");
  CHECK(std::string(skw_status_name(SKW_OK)) == "ok");
  CHECK(std::string(skw_status_name(SKW_ERR_BUFFER_TOO_SMALL)).size() > 0);
  CHECK(std::string(skw_status_name(static_cast<skw_status>(1234))).size() > 0);
}

TEST_CASE("catalog lifecycle") {
  skw_catalog* c = small_catalog();
  CHECK(skw_catalog_size(c) == 5);
  CHECK(skw_catalog_ordinate(c, 0) == 14.134725141734694);
  CHECK(std::isnan(skw_catalog_ordinate(c, 5)));
  CHECK(skw_catalog_declared_accuracy(c) == 1e-9);
  CHECK(skw_catalog_accuracy(c) > 1e-9);

  const auto path = (std::filesystem::temp_directory_path() / "skw_capi_test.zzc").string();
  REQUIRE(skw_catalog_save_binary(c, path.c_str()) == SKW_OK);
  skw_catalog* back = nullptr;
  REQUIRE(skw_catalog_load(path.c_str(), &back) == SKW_OK);
  CHECK(skw_catalog_size(back) == 5);
  for (size_t i = 0; i < 5; ++i) CHECK(skw_catalog_ordinate(back, i) == skw_catalog_ordinate(c, i));
  std::filesystem::remove(path);
  skw_catalog_free(back);
  skw_catalog_free(c);
  skw_catalog_free(nullptr);

  skw_catalog* none = reinterpret_cast<skw_catalog*>(0x1);
  CHECK(skw_catalog_load("/nonexistent/zeros.txt", &none) == SKW_ERR_IO);
  CHECK(none == nullptr);
  CHECK(std::string(skw_last_error()).find("/nonexistent/zeros.txt") != std::string::npos);
  const char bad[] = "14.2\nabc\n";
  CHECK(skw_catalog_parse_text(bad, sizeof bad - 1, "bad", &none) == SKW_ERR_PARSE);
  const char unordered[] = "21.0\n14.2\n";
  CHECK(skw_catalog_parse_text(unordered, sizeof unordered - 1, "u", &none) == SKW_ERR_FORMAT);
}

TEST_CASE("null handling") {
  CHECK(skw_catalog_load(nullptr, nullptr) == SKW_ERR_INVALID_ARGUMENT);
  skw_catalog* c = nullptr;
  CHECK(skw_catalog_load(nullptr, &c) == SKW_ERR_INVALID_ARGUMENT);
  CHECK(skw_certify(nullptr, nullptr, nullptr, nullptr) == SKW_ERR_INVALID_ARGUMENT);
  CHECK(skw_catalog_size(nullptr) == 0);
  CHECK(std::isnan(skw_certificate_lower_bound(nullptr)));
  double hi, lo;
  CHECK(skw_parse_decimal(nullptr, &hi, &lo) == SKW_ERR_INVALID_ARGUMENT);
  CHECK(skw_run_length(1.0, 2.0, 1.0, nullptr) == SKW_ERR_INVALID_ARGUMENT);
  skw_budget_free(nullptr);
  skw_certificate_free(nullptr);
  skw_resize_free(nullptr);
  skw_series_free(nullptr);
  skw_report_free(nullptr);
}

TEST_CASE("parameters and budgets") {
  skw_params p;
  skw_params_chao_plymen(&p);
  CHECK(p.alpha == 1.34e11);
  CHECK(p.variant == SKW_VARIANT_REVERS);
  double hi = 0, lo = 0;
  REQUIRE(skw_parse_decimal("727.952018", &hi, &lo) == SKW_OK);
  CHECK(p.omega_hi == hi);
  CHECK(p.omega_lo == lo);
  CHECK(skw_parse_decimal("7x", &hi, &lo) == SKW_ERR_PARSE);

  skw_variant v;
  CHECK(skw_variant_parse("lehman1966", &v) == SKW_OK);
  CHECK(v == SKW_VARIANT_LEHMAN1966);
  CHECK(skw_variant_parse("nope", &v) == SKW_ERR_PARSE);
  CHECK(std::string(skw_variant_name(SKW_VARIANT_STD2015)).size() > 0);

  size_t violations = 99;
  const std::string none = fetch([&](char* b, size_t cap, size_t* n) { return skw_validate(&p, &violations, b, cap, n); });
  CHECK(violations == 0);
  p.eta = 10.0;
  const std::string some = fetch([&](char* b, size_t cap, size_t* n) { return skw_validate(&p, &violations, b, cap, n); });
  CHECK(violations > 0);
  CHECK(some.find("eta") != std::string::npos);

  skw_params_chao_plymen(&p);
  skw_budget* b = nullptr;
  REQUIRE(skw_budget_compute(&p, &b) == SKW_OK);
  CHECK(skw_budget_count(b) == 6);
  CHECK(std::string(skw_budget_name(b, 0)) == "R1");
  CHECK(skw_budget_name(b, 6) == nullptr);
  CHECK(std::fabs(skw_budget_total(b) - 6.14384e-3) < 5e-6 * 6.14384e-3);
  double sum = 0;
  for (size_t i = 0; i < skw_budget_count(b); ++i) sum += skw_budget_value(b, i);
  CHECK(std::fabs(sum - skw_budget_total(b)) < 1e-15);
  skw_budget_free(b);

  p.variant = static_cast<skw_variant>(17);
  CHECK(skw_budget_compute(&p, &b) == SKW_ERR_INVALID_ARGUMENT);
  skw_params_chao_plymen(&p);
  p.eta = 10.0;
  CHECK(skw_budget_compute(&p, &b) == SKW_ERR_CONDITION_VIOLATED);
}

TEST_CASE("certify through the C API") {
  skw_params p;
  skw_params_chao_plymen(&p);
  skw_options o;
  skw_options_default(&o);
  CHECK(o.chunk_size == 65536);
  skw_certificate* cert = nullptr;
  CHECK(skw_certify(nullptr, &p, &o, &cert) == SKW_ERR_INVALID_ARGUMENT);
  o.has_s_star_override = 1;
  o.s_star_override = -1.006553478788955;
  REQUIRE(skw_certify(nullptr, &p, &o, &cert) == SKW_OK);
  CHECK(std::fabs(skw_certificate_lower_bound(cert) - 0.000390651) < 1e-9);
  CHECK(skw_certificate_positive(cert) == 1);
  CHECK(skw_certificate_s_star(cert) == -1.006553478788955);
  CHECK(skw_certificate_delta_s1(cert) > 0);
  CHECK(skw_certificate_delta_s2(cert) > 0);
  CHECK(std::fabs(skw_certificate_budget_total(cert) - 6.14384e-3) < 1e-8);
  double l10 = 0;
  REQUIRE(skw_run_length(skw_certificate_lower_bound(cert), hypot(p.omega_hi, 0), p.eta, &l10) == SKW_OK);
  CHECK(l10 == doctest::Approx(skw_certificate_run_length_log10(cert)).epsilon(1e-12));

  size_t needed = 0;
  REQUIRE(skw_certificate_render(cert, SKW_FORMAT_TEXT, nullptr, 0, &needed) == SKW_OK);
  CHECK(needed > 10);
  std::vector<char> small(needed - 1);
  CHECK(skw_certificate_render(cert, SKW_FORMAT_TEXT, small.data(), small.size(), &needed) ==
        SKW_ERR_BUFFER_TOO_SMALL);
  std::vector<char> buf(needed);
  REQUIRE(skw_certificate_render(cert, SKW_FORMAT_TEXT, buf.data(), buf.size(), &needed) == SKW_OK);
  CHECK(std::string(buf.data()).find("VERDICT: positive") != std::string::npos);
  const std::string json =
      fetch([&](char* b, size_t cap, size_t* n) { return skw_certificate_render(cert, SKW_FORMAT_JSON, b, cap, n); });
  CHECK(json.front() == '{');
  skw_certificate_free(cert);

  skw_catalog* c = small_catalog();
  o.has_s_star_override = 0;
  CHECK(skw_certify(c, &p, &o, &cert) == SKW_ERR_CATALOG_EXHAUSTED);
  p.T = 30.0;
  REQUIRE(skw_certify(c, &p, &o, &cert) == SKW_OK);
  CHECK(skw_certificate_positive(cert) == 0);
  skw_certificate_free(cert);
  skw_catalog_free(c);
}

TEST_CASE("resize table") {
  skw_params p;
  skw_params_chao_plymen(&p);
  skw_options o;
  skw_options_default(&o);
  o.has_s_star_override = 1;
  o.s_star_override = -1.006553478788955;
  const double etas[] = {1.6e-4, 1.4e-4, 1.2e-4, 1.063e-4, 1.061e-4, 1.060e-4, 1.050e-4};
  skw_resize_table* t = nullptr;
  REQUIRE(skw_resize_eta(nullptr, &p, etas, 7, &o, 0, &t) == SKW_OK);
  CHECK(skw_resize_rows(t) == 7);
  CHECK(skw_resize_best(t) == 4);
  CHECK(skw_resize_eta_at(t, 4) == 1.061e-4);
  CHECK(std::fabs(skw_resize_total_at(t, 0) - 6.14384e-3) < 5e-6 * 6.14384e-3);
  CHECK(skw_resize_lower_at(t, 5) < 0);
  CHECK(std::isnan(skw_resize_eta_at(t, 7)));
  const std::string text = fetch([&](char* b, size_t cap, size_t* n) { return skw_resize_render(t, b, cap, n); });
  CHECK(text.find("best_eta") != std::string::npos);
  skw_resize_free(t);
  CHECK(skw_resize_eta(nullptr, &p, etas, 0, &o, 0, &t) == SKW_ERR_INVALID_ARGUMENT);
  CHECK(skw_resize_eta(nullptr, &p, nullptr, 3, &o, 0, &t) == SKW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("scan through the C API") {
  skw_catalog* c = nullptr;
  REQUIRE(skw_catalog_load(data("zeros_100k.txt").c_str(), &c) == SKW_OK);
  double v = 0;
  REQUIRE(skw_F_T(c, 316.1456, 0.0, 2000.0, 1, &v) == SKW_OK);
  double single = 0;
  skw_series* s = nullptr;
  REQUIRE(skw_scan(c, 300.0, 320.0, 11, 2000.0, 0, &s) == SKW_OK);
  CHECK(skw_series_size(s) == 11);
  CHECK(skw_series_spacing(s) == 2.0);
  CHECK(skw_series_zeros_used(s) > 0);
  REQUIRE(skw_F_T(c, skw_series_omega(s, 3), 0.0, 2000.0, 1, &single) == SKW_OK);
  CHECK(single == skw_series_value(s, 3));
  size_t count = 0;
  const std::string cand = fetch([&](char* b, size_t cap, size_t* n) {
    return skw_series_candidates(s, -10.0, &count, b, cap, n);
  });
  size_t lines = 0;
  for (char ch : cand) lines += ch == '\n';
  CHECK(lines == count);
  const auto csv = (std::filesystem::temp_directory_path() / "skw_capi_scan.csv").string();
  CHECK(skw_series_write_csv(s, csv.c_str()) == SKW_OK);
  CHECK(std::filesystem::exists(csv));
  std::filesystem::remove(csv);
  CHECK(skw_series_write_svg(s, "/nonexistent/x.svg") == SKW_ERR_IO);
  skw_series_free(s);
  CHECK(skw_scan(c, 320.0, 300.0, 11, 2000.0, 0, &s) == SKW_ERR_INVALID_ARGUMENT);
  CHECK(skw_scan(c, 300.0, 320.0, 11, 1e9, 0, &s) == SKW_ERR_CATALOG_EXHAUSTED);
  skw_catalog_free(c);
}

TEST_CASE("reports") {
  skw_catalog* c = nullptr;
  REQUIRE(skw_catalog_load(data("zeros_100k.txt").c_str(), &c) == SKW_OK);
  skw_report* r = nullptr;
  REQUIRE(skw_verify_lemmas(c, &r) == SKW_OK);
  CHECK(skw_report_count(r) > 0);
  CHECK(skw_report_all_passed(r) == 1);
  for (size_t i = 0; i < skw_report_count(r); ++i) {
    CHECK(skw_report_name(r, i) != nullptr);
    CHECK(skw_report_passed(r, i) == 1);
    CHECK(skw_report_detail(r, i) != nullptr);
  }
  CHECK(skw_report_name(r, skw_report_count(r)) == nullptr);
  const std::string text = fetch([&](char* b, size_t cap, size_t* n) { return skw_report_render(r, b, cap, n); });
  CHECK(text.find("PASS") != std::string::npos);
  skw_report_free(r);

  skw_oracle_options o;
  skw_oracle_options_default(&o);
  o.max_x = 1'000'000;
  o.samples = 200;
  o.li_complex_points = 20;
  REQUIRE(skw_oracle_check(c, &o, &r) == SKW_OK);
  CHECK(skw_report_count(r) > 0);
  skw_report_free(r);
  o.max_x = 1;
  CHECK(skw_oracle_check(c, &o, &r) == SKW_ERR_INVALID_ARGUMENT);
  skw_catalog_free(c);
}
