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

#include "skewes/skewes.h"

#include <cstring>
#include <limits>
#include <new>
#include <sstream>
#include <string>
#include <utility>

#include "skewes/certifier.hpp"
#include "skewes/error.hpp"
#include "skewes/region_scanner.hpp"
#include "skewes/verification.hpp"
#include "skewes/zero_catalog.hpp"

struct skw_catalog {
  skewes::ZeroCatalog value;
};
struct skw_budget {
  skewes::ErrorBudget value;
};
struct skw_certificate {
  skewes::Certificate value;
};
struct skw_resize_table {
  skewes::ResizeTable value;
};
struct skw_series {
  skewes::ScanSeries value;
};
struct skw_report {
  std::vector<skewes::CheckResult> value;
};

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

thread_local std::string g_last_error;

skw_status to_status(skewes::ErrorCode code) {
  switch (code) {
    case skewes::ErrorCode::kInvalidArgument: return SKW_ERR_INVALID_ARGUMENT;
    case skewes::ErrorCode::kConditionViolated: return SKW_ERR_CONDITION_VIOLATED;
    case skewes::ErrorCode::kCatalogExhausted: return SKW_ERR_CATALOG_EXHAUSTED;
    case skewes::ErrorCode::kParse: return SKW_ERR_PARSE;
    case skewes::ErrorCode::kIo: return SKW_ERR_IO;
    case skewes::ErrorCode::kFormat: return SKW_ERR_FORMAT;
    case skewes::ErrorCode::kNumeric: return SKW_ERR_NUMERIC;
  }
  return SKW_ERR_INTERNAL;
}

template <typename Fn>
skw_status guard(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return SKW_OK;
  } catch (const skewes::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SKW_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SKW_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SKW_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) skewes::fail(skewes::ErrorCode::kInvalidArgument, std::string(what) + " must not be NULL");
}

skw_status copy_out(const std::string& text, char* buf, size_t cap, size_t* needed) {
  if (needed) *needed = text.size() + 1;
  if (cap == 0 && buf == nullptr) return SKW_OK;
  if (buf == nullptr || cap < text.size() + 1) {
    g_last_error = "buffer too small: need " + std::to_string(text.size() + 1) + " bytes";
    return SKW_ERR_BUFFER_TOO_SMALL;
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return SKW_OK;
}

skewes::CertParams from_c(const skw_params* p) {
  need(p, "params");
  if (p->variant < SKW_VARIANT_LEHMAN1966 || p->variant > SKW_VARIANT_STD2015) {
    skewes::fail(skewes::ErrorCode::kInvalidArgument, "unknown variant");
  }
  skewes::CertParams q;
  q.alpha = p->alpha;
  q.omega = skewes::DoubleDouble(p->omega_hi, p->omega_lo);
  q.eta = p->eta;
  q.A = p->A;
  q.T = p->T;
  q.variant = static_cast<skewes::Variant>(p->variant);
  q.rh_mode = p->rh_mode != 0;
  return q;
}

void to_c(const skewes::CertParams& q, skw_params* p) {
  p->alpha = q.alpha;
  p->omega_hi = q.omega.hi;
  p->omega_lo = q.omega.lo;
  p->eta = q.eta;
  p->A = q.A;
  p->T = q.T;
  p->variant = static_cast<skw_variant>(q.variant);
  p->rh_mode = q.rh_mode ? 1 : 0;
}

skewes::CertifyOptions from_c(const skw_options* o) {
  skewes::CertifyOptions c;
  if (o == nullptr) return c;
  c.sums.parallel.threads = o->threads;
  if (o->chunk_size) c.sums.parallel.chunk_size = o->chunk_size;
  c.sums.compat_deltas = o->compat_deltas != 0;
  if (o->has_epsilon) c.sums.epsilon = o->epsilon;
  if (o->has_s_star_override) c.s_star_override = o->s_star_override;
  return c;
}

const skewes::ZeroCatalog* maybe(const skw_catalog* c) { return c ? &c->value : nullptr; }

}  // namespace

extern "C" {

const char* skw_last_error(void) { return g_last_error.c_str(); }

const char* skw_status_name(skw_status status) {
  switch (status) {
    case SKW_OK: return "ok";
    case SKW_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SKW_ERR_CONDITION_VIOLATED: return "condition violated";
    case SKW_ERR_CATALOG_EXHAUSTED: return "catalog exhausted";
    case SKW_ERR_PARSE: return "parse error";
    case SKW_ERR_IO: return "I/O error";
    case SKW_ERR_FORMAT: return "format error";
    case SKW_ERR_NUMERIC: return "numeric failure";
    case SKW_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case SKW_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* skw_version(void) { return "1.0.0"; }

skw_status skw_catalog_load(const char* path, skw_catalog** out) {
  if (out) *out = nullptr;
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new skw_catalog{skewes::ZeroCatalog::load(path)};
  });
}

skw_status skw_catalog_parse_text(const char* text, size_t len, const char* source, skw_catalog** out) {
  if (out) *out = nullptr;
  return guard([&] {
    need(text, "text");
    need(out, "out");
    std::istringstream in(std::string(text, len));
    *out = new skw_catalog{skewes::ZeroCatalog::parse_text(in, source ? source : "<memory>")};
  });
}

skw_status skw_catalog_save_binary(const skw_catalog* c, const char* path) {
  return guard([&] {
    need(c, "catalog");
    need(path, "path");
    c->value.save_binary(path);
  });
}

skw_status skw_catalog_save_text(const skw_catalog* c, const char* path) {
  return guard([&] {
    need(c, "catalog");
    need(path, "path");
    c->value.save_text(path);
  });
}

size_t skw_catalog_size(const skw_catalog* c) { return c ? c->value.size() : 0; }
double skw_catalog_ordinate(const skw_catalog* c, size_t i) {
  return c && i < c->value.size() ? c->value[i] : kNaN;
}
double skw_catalog_declared_accuracy(const skw_catalog* c) { return c ? c->value.declared_accuracy() : kNaN; }
double skw_catalog_accuracy(const skw_catalog* c) { return c ? c->value.accuracy() : kNaN; }
void skw_catalog_free(skw_catalog* c) { delete c; }

void skw_params_chao_plymen(skw_params* p) {
  if (p) to_c(skewes::chao_plymen_params(), p);
}

void skw_params_saouter_demichel(skw_params* p) {
  if (p) to_c(skewes::saouter_demichel_params(), p);
}

skw_status skw_variant_parse(const char* name, skw_variant* out) {
  return guard([&] {
    need(name, "name");
    need(out, "out");
    const auto v = skewes::parse_variant(name);
    if (!v) skewes::fail(skewes::ErrorCode::kParse, std::string("unknown variant '") + name + "'");
    *out = static_cast<skw_variant>(*v);
  });
}

const char* skw_variant_name(skw_variant v) {
  if (v < SKW_VARIANT_LEHMAN1966 || v > SKW_VARIANT_STD2015) return "unknown";
  return skewes::variant_name(static_cast<skewes::Variant>(v)).data();
}

skw_status skw_parse_decimal(const char* text, double* hi, double* lo) {
  return guard([&] {
    need(text, "text");
    need(hi, "hi");
    need(lo, "lo");
    const auto v = skewes::parse_decimal(text);
    *hi = v.hi;
    *lo = v.lo;
  });
}

skw_status skw_validate(const skw_params* p, size_t* violations, char* buf, size_t cap, size_t* needed) {
  std::string text;
  const skw_status st = guard([&] {
    const auto v = skewes::validate_conditions(from_c(p));
    if (violations) *violations = v.size();
    text = v.empty() ? std::string() : skewes::describe(v);
  });
  if (st != SKW_OK) return st;
  return copy_out(text, buf, cap, needed);
}

skw_status skw_budget_compute(const skw_params* p, skw_budget** out) {
  if (out) *out = nullptr;
  return guard([&] {
    need(out, "out");
    *out = new skw_budget{skewes::error_budget(from_c(p))};
  });
}

size_t skw_budget_count(const skw_budget* b) { return b ? b->value.terms.size() : 0; }
const char* skw_budget_name(const skw_budget* b, size_t i) {
  return b && i < b->value.terms.size() ? b->value.terms[i].name.c_str() : nullptr;
}
double skw_budget_value(const skw_budget* b, size_t i) {
  return b && i < b->value.terms.size() ? b->value.terms[i].value : kNaN;
}
double skw_budget_total(const skw_budget* b) { return b ? b->value.total : kNaN; }
void skw_budget_free(skw_budget* b) { delete b; }

void skw_options_default(skw_options* o) {
  if (!o) return;
  *o = skw_options{};
  o->chunk_size = skewes::kDefaultChunkSize;
}

skw_status skw_certify(const skw_catalog* catalog, const skw_params* p, const skw_options* o,
                       skw_certificate** out) {
  if (out) *out = nullptr;
  return guard([&] {
    need(out, "out");
    *out = new skw_certificate{skewes::certify(maybe(catalog), from_c(p), from_c(o))};
  });
}

double skw_certificate_lower_bound(const skw_certificate* c) { return c ? c->value.lower_bound : kNaN; }
int skw_certificate_positive(const skw_certificate* c) {
  return c && c->value.verdict == skewes::Verdict::kPositive ? 1 : 0;
}
double skw_certificate_run_length_log10(const skw_certificate* c) { return c ? c->value.run_length_log10 : kNaN; }
double skw_certificate_s_star(const skw_certificate* c) { return c ? c->value.sum.s_star : kNaN; }
double skw_certificate_delta_s1(const skw_certificate* c) { return c ? c->value.sum.delta_s1 : kNaN; }
double skw_certificate_delta_s2(const skw_certificate* c) { return c ? c->value.sum.delta_s2 : kNaN; }
double skw_certificate_budget_total(const skw_certificate* c) { return c ? c->value.budget.total : kNaN; }

skw_status skw_certificate_render(const skw_certificate* c, skw_format f, char* buf, size_t cap, size_t* needed) {
  std::string text;
  const skw_status st = guard([&] {
    need(c, "certificate");
    text = f == SKW_FORMAT_JSON ? skewes::render_certificate_json(c->value) : skewes::render_certificate(c->value);
  });
  if (st != SKW_OK) return st;
  return copy_out(text, buf, cap, needed);
}

void skw_certificate_free(skw_certificate* c) { delete c; }

skw_status skw_resize_eta(const skw_catalog* catalog, const skw_params* p, const double* etas, size_t n,
                          const skw_options* o, int refine, skw_resize_table** out) {
  if (out) *out = nullptr;
  return guard([&] {
    need(out, "out");
    if (n > 0) need(etas, "etas");
    *out = new skw_resize_table{
        skewes::resize_eta(maybe(catalog), from_c(p), std::span<const double>(etas, n), from_c(o), refine != 0)};
  });
}

size_t skw_resize_rows(const skw_resize_table* t) { return t ? t->value.rows.size() : 0; }
double skw_resize_eta_at(const skw_resize_table* t, size_t i) {
  return t && i < t->value.rows.size() ? t->value.rows[i].eta : kNaN;
}
double skw_resize_total_at(const skw_resize_table* t, size_t i) {
  return t && i < t->value.rows.size() ? t->value.rows[i].budget.total : kNaN;
}
double skw_resize_lower_at(const skw_resize_table* t, size_t i) {
  return t && i < t->value.rows.size() ? t->value.rows[i].lower_bound : kNaN;
}
long skw_resize_best(const skw_resize_table* t) {
  return t && t->value.best ? static_cast<long>(*t->value.best) : -1;
}

skw_status skw_resize_render(const skw_resize_table* t, char* buf, size_t cap, size_t* needed) {
  std::string text;
  const skw_status st = guard([&] {
    need(t, "table");
    text = skewes::render_resize_table(t->value);
  });
  if (st != SKW_OK) return st;
  return copy_out(text, buf, cap, needed);
}

void skw_resize_free(skw_resize_table* t) { delete t; }

skw_status skw_run_length(double delta, double omega, double eta, double* log10_out) {
  return guard([&] {
    need(log10_out, "out");
    *log10_out = skewes::run_length(delta, omega, eta);
  });
}

skw_status skw_F_T(const skw_catalog* catalog, double omega10_hi, double omega10_lo, double T, unsigned threads,
                   double* out) {
  return guard([&] {
    need(catalog, "catalog");
    need(out, "out");
    skewes::ParallelOptions opt;
    opt.threads = threads;
    *out = skewes::F_T(catalog->value, skewes::DoubleDouble(omega10_hi, omega10_lo), T, opt);
  });
}

skw_status skw_scan(const skw_catalog* catalog, double omega_lo, double omega_hi, size_t points, double T,
                    unsigned threads, skw_series** out) {
  if (out) *out = nullptr;
  return guard([&] {
    need(catalog, "catalog");
    need(out, "out");
    skewes::ParallelOptions opt;
    opt.threads = threads;
    *out = new skw_series{skewes::scan(catalog->value, omega_lo, omega_hi, points, T, opt)};
  });
}

size_t skw_series_size(const skw_series* s) { return s ? s->value.values.size() : 0; }
double skw_series_omega(const skw_series* s, size_t i) {
  return s && i < s->value.omegas.size() ? s->value.omegas[i] : kNaN;
}
double skw_series_value(const skw_series* s, size_t i) {
  return s && i < s->value.values.size() ? s->value.values[i] : kNaN;
}
double skw_series_spacing(const skw_series* s) { return s ? s->value.spacing : kNaN; }
size_t skw_series_zeros_used(const skw_series* s) { return s ? s->value.zeros_used : 0; }

skw_status skw_series_write_csv(const skw_series* s, const char* path) {
  return guard([&] {
    need(s, "series");
    need(path, "path");
    skewes::emit_csv(s->value, path);
  });
}

skw_status skw_series_write_svg(const skw_series* s, const char* path) {
  return guard([&] {
    need(s, "series");
    need(path, "path");
    skewes::emit_svg(s->value, path);
  });
}

skw_status skw_series_candidates(const skw_series* s, double threshold, size_t* count, char* buf, size_t cap,
                                 size_t* needed) {
  std::string text;
  const skw_status st = guard([&] {
    need(s, "series");
    const auto list = skewes::find_candidates(s->value, threshold);
    if (count) *count = list.size();
    char line[160];
    for (const auto& c : list) {
      std::snprintf(line, sizeof line, "%.4f,%.4f,%s\n", c.omega, c.value, c.comment.c_str());
      text += line;
    }
  });
  if (st != SKW_OK) return st;
  return copy_out(text, buf, cap, needed);
}

void skw_series_free(skw_series* s) { delete s; }

skw_status skw_verify_lemmas(const skw_catalog* catalog, skw_report** out) {
  if (out) *out = nullptr;
  return guard([&] {
    need(catalog, "catalog");
    need(out, "out");
    *out = new skw_report{skewes::run_lemma_suite(catalog->value)};
  });
}

void skw_oracle_options_default(skw_oracle_options* o) {
  if (!o) return;
  const skewes::OracleSuiteOptions d;
  *o = skw_oracle_options{};
  o->max_x = d.max_x;
  o->samples = d.samples;
  o->li_complex_points = d.li_complex_points;
}

skw_status skw_oracle_check(const skw_catalog* catalog, const skw_oracle_options* o, skw_report** out) {
  if (out) *out = nullptr;
  return guard([&] {
    need(catalog, "catalog");
    need(out, "out");
    skewes::OracleSuiteOptions opt;
    if (o) {
      opt.max_x = o->max_x;
      opt.samples = o->samples;
      opt.li_complex_points = o->li_complex_points;
      if (o->has_pi_at_4e9) opt.pi_at_4e9 = o->pi_at_4e9;
    }
    *out = new skw_report{skewes::run_oracle_suite(catalog->value, opt)};
  });
}

size_t skw_report_count(const skw_report* r) { return r ? r->value.size() : 0; }
const char* skw_report_name(const skw_report* r, size_t i) {
  return r && i < r->value.size() ? r->value[i].name.c_str() : nullptr;
}
int skw_report_passed(const skw_report* r, size_t i) { return r && i < r->value.size() && r->value[i].passed; }
const char* skw_report_detail(const skw_report* r, size_t i) {
  return r && i < r->value.size() ? r->value[i].detail.c_str() : nullptr;
}
int skw_report_all_passed(const skw_report* r) { return r && skewes::all_passed(r->value) ? 1 : 0; }

skw_status skw_report_render(const skw_report* r, char* buf, size_t cap, size_t* needed) {
  std::string text;
  const skw_status st = guard([&] {
    need(r, "report");
    text = skewes::render_checks(r->value);
  });
  if (st != SKW_OK) return st;
  return copy_out(text, buf, cap, needed);
}

void skw_report_free(skw_report* r) { delete r; }

}  // extern "C"
