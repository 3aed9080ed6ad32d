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

/*
 * C interface to the skewes certification library.
 *
 * Every function returns an skw_status; on failure skw_last_error() gives a
 * thread-local message valid until the next call on that thread. Objects are
 * opaque handles released with the matching *_free function (NULL is fine);
 * a failed constructor leaves *out NULL. Accessors given NULL or an index out
 * of range return NaN, NULL or 0.
 * Text results are copied into caller buffers: pass cap = 0 to learn the
 * required size (including the NUL) through *needed.
 */
#ifndef SKEWES_SKEWES_H
#define SKEWES_SKEWES_H

#include <stddef.h>

#if defined(_WIN32)
#define SKW_API __declspec(dllexport)
#else
#define SKW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skw_status {
  SKW_OK = 0,
  SKW_ERR_INVALID_ARGUMENT = 1,
  SKW_ERR_CONDITION_VIOLATED = 2,
  SKW_ERR_CATALOG_EXHAUSTED = 3,
  SKW_ERR_PARSE = 4,
  SKW_ERR_IO = 5,
  SKW_ERR_FORMAT = 6,
  SKW_ERR_NUMERIC = 7,
  SKW_ERR_BUFFER_TOO_SMALL = 8,
  SKW_ERR_INTERNAL = 99
} skw_status;

SKW_API const char* skw_last_error(void);
SKW_API const char* skw_status_name(skw_status status);
SKW_API const char* skw_version(void);

/* ---- zero catalog ---- */

typedef struct skw_catalog skw_catalog;

/* Text or "ZZC1" binary, chosen by magic. */
SKW_API skw_status skw_catalog_load(const char* path, skw_catalog** out);
SKW_API skw_status skw_catalog_parse_text(const char* text, size_t len, const char* source, skw_catalog** out);
SKW_API skw_status skw_catalog_save_binary(const skw_catalog* c, const char* path);
SKW_API skw_status skw_catalog_save_text(const skw_catalog* c, const char* path);
SKW_API size_t skw_catalog_size(const skw_catalog* c);
SKW_API double skw_catalog_ordinate(const skw_catalog* c, size_t i);
SKW_API double skw_catalog_declared_accuracy(const skw_catalog* c);
/* Declared accuracy plus one ulp of the largest ordinate. */
SKW_API double skw_catalog_accuracy(const skw_catalog* c);
SKW_API void skw_catalog_free(skw_catalog* c);

/* ---- parameters ---- */

typedef enum skw_variant {
  SKW_VARIANT_LEHMAN1966 = 0,
  SKW_VARIANT_SAOUTER_DEMICHEL2010 = 1,
  SKW_VARIANT_REVERS = 2,
  SKW_VARIANT_STD2015 = 3
} skw_variant;

typedef struct skw_params {
  double alpha;
  double omega_hi; /* omega = omega_hi + omega_lo */
  double omega_lo;
  double eta;
  double A;
  double T;
  skw_variant variant;
  int rh_mode;
} skw_params;

SKW_API void skw_params_chao_plymen(skw_params* p);
SKW_API void skw_params_saouter_demichel(skw_params* p);
SKW_API skw_status skw_variant_parse(const char* name, skw_variant* out);
SKW_API const char* skw_variant_name(skw_variant v);

/* Decimal literal to a double-word value. */
SKW_API skw_status skw_parse_decimal(const char* text, double* hi, double* lo);

/* Number of violated side conditions; their description goes to buf. */
SKW_API skw_status skw_validate(const skw_params* p, size_t* violations, char* buf, size_t cap, size_t* needed);

/* ---- error budget ---- */

typedef struct skw_budget skw_budget;

SKW_API skw_status skw_budget_compute(const skw_params* p, skw_budget** out);
SKW_API size_t skw_budget_count(const skw_budget* b);
SKW_API const char* skw_budget_name(const skw_budget* b, size_t i);
SKW_API double skw_budget_value(const skw_budget* b, size_t i);
SKW_API double skw_budget_total(const skw_budget* b);
SKW_API void skw_budget_free(skw_budget* b);

/* ---- certification ---- */

typedef struct skw_options {
  unsigned threads;   /* 0 = all cores; never changes results */
  size_t chunk_size;  /* 0 = default 65536 */
  int compat_deltas;  /* Delta bounds with gamma_min = 14, kappa = 1.0001 */
  int has_epsilon;
  double epsilon;     /* zero accuracy override */
  int has_s_star_override;
  double s_star_override;
} skw_options;

SKW_API void skw_options_default(skw_options* o);

typedef struct skw_certificate skw_certificate;

/* catalog may be NULL when an S* override is set. */
SKW_API skw_status skw_certify(const skw_catalog* catalog, const skw_params* p, const skw_options* o,
                               skw_certificate** out);
SKW_API double skw_certificate_lower_bound(const skw_certificate* c);
SKW_API int skw_certificate_positive(const skw_certificate* c);
SKW_API double skw_certificate_run_length_log10(const skw_certificate* c);
SKW_API double skw_certificate_s_star(const skw_certificate* c);
SKW_API double skw_certificate_delta_s1(const skw_certificate* c);
SKW_API double skw_certificate_delta_s2(const skw_certificate* c);
SKW_API double skw_certificate_budget_total(const skw_certificate* c);

typedef enum skw_format { SKW_FORMAT_TEXT = 0, SKW_FORMAT_JSON = 1 } skw_format;

SKW_API skw_status skw_certificate_render(const skw_certificate* c, skw_format f, char* buf, size_t cap,
                                          size_t* needed);
SKW_API void skw_certificate_free(skw_certificate* c);

typedef struct skw_resize_table skw_resize_table;

SKW_API skw_status skw_resize_eta(const skw_catalog* catalog, const skw_params* p, const double* etas, size_t n,
                                  const skw_options* o, int refine, skw_resize_table** out);
SKW_API size_t skw_resize_rows(const skw_resize_table* t);
SKW_API double skw_resize_eta_at(const skw_resize_table* t, size_t i);
SKW_API double skw_resize_total_at(const skw_resize_table* t, size_t i);
SKW_API double skw_resize_lower_at(const skw_resize_table* t, size_t i);
/* -1 when no row is positive. */
SKW_API long skw_resize_best(const skw_resize_table* t);
SKW_API skw_status skw_resize_render(const skw_resize_table* t, char* buf, size_t cap, size_t* needed);
SKW_API void skw_resize_free(skw_resize_table* t);

/* log10 of the run length delta e^{(omega-eta)/2}. */
SKW_API skw_status skw_run_length(double delta, double omega, double eta, double* log10_out);

/* ---- region scanner ---- */

typedef struct skw_series skw_series;

/* F_T at one base-10 exponent (double-word). */
SKW_API skw_status skw_F_T(const skw_catalog* catalog, double omega10_hi, double omega10_lo, double T,
                           unsigned threads, double* out);
SKW_API skw_status skw_scan(const skw_catalog* catalog, double omega_lo, double omega_hi, size_t points, double T,
                            unsigned threads, skw_series** out);
SKW_API size_t skw_series_size(const skw_series* s);
SKW_API double skw_series_omega(const skw_series* s, size_t i);
SKW_API double skw_series_value(const skw_series* s, size_t i);
SKW_API double skw_series_spacing(const skw_series* s);
SKW_API size_t skw_series_zeros_used(const skw_series* s);
SKW_API skw_status skw_series_write_csv(const skw_series* s, const char* path);
SKW_API skw_status skw_series_write_svg(const skw_series* s, const char* path);
/* Candidate list as "omega,value,comment" lines. */
SKW_API skw_status skw_series_candidates(const skw_series* s, double threshold, size_t* count, char* buf, size_t cap,
                                         size_t* needed);
SKW_API void skw_series_free(skw_series* s);

/* ---- verification suites ---- */

typedef struct skw_report skw_report;

SKW_API skw_status skw_verify_lemmas(const skw_catalog* catalog, skw_report** out);

typedef struct skw_oracle_options {
  unsigned long long max_x;
  int samples;
  int li_complex_points;
  int has_pi_at_4e9;
  unsigned long long pi_at_4e9;
} skw_oracle_options;

SKW_API void skw_oracle_options_default(skw_oracle_options* o);
SKW_API skw_status skw_oracle_check(const skw_catalog* catalog, const skw_oracle_options* o, skw_report** out);
SKW_API size_t skw_report_count(const skw_report* r);
SKW_API const char* skw_report_name(const skw_report* r, size_t i);
SKW_API int skw_report_passed(const skw_report* r, size_t i);
SKW_API const char* skw_report_detail(const skw_report* r, size_t i);
SKW_API int skw_report_all_passed(const skw_report* r);
SKW_API skw_status skw_report_render(const skw_report* r, char* buf, size_t cap, size_t* needed);
SKW_API void skw_report_free(skw_report* r);

#ifdef __cplusplus
}
#endif

#endif /* SKEWES_SKEWES_H */
