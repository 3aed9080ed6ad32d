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

// skewes: command-line front end over the C API.
//
//   skewes certify --zeros zeros.txt
//   skewes resize-eta --s-star-override -1.006553478788955
//   skewes scan --zeros zeros.txt --from 300 --to 320 --csv f.csv
//
// exit codes: 0 ok, 1 check failed / inconclusive, 2 usage, 3 I/O

#include <cstdio>
#include <ctime>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewes/skewes.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Failure {
  int code;
  std::string message;
};

int exit_for(skw_status st) {
  switch (st) {
    case SKW_ERR_IO:
    case SKW_ERR_PARSE:
    case SKW_ERR_FORMAT:
      return kExitIo;
    case SKW_ERR_INVALID_ARGUMENT:
    case SKW_ERR_CONDITION_VIOLATED:
      return kExitUsage;
    default:
      return kExitCheck;
  }
}

void check(skw_status st, const std::string& what) {
  if (st != SKW_OK) throw Failure{exit_for(st), what + ": " + skw_last_error()};
}

// Bad flag values are usage errors whatever the library calls them.
void check_flag(skw_status st, const std::string& what) {
  if (st != SKW_OK) throw Failure{kExitUsage, what + ": " + skw_last_error()};
}

// Two-pass copy out of the library.
template <typename Fn>
std::string fetch(Fn&& fn, const std::string& what) {
  size_t need = 0;
  check(fn(nullptr, 0, &need), what);
  std::string s(need, '\0');
  check(fn(s.data(), s.size(), &need), what);
  s.resize(need ? need - 1 : 0);
  return s;
}

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};

using Catalog = Handle<skw_catalog, skw_catalog_free>;
using Certificate = Handle<skw_certificate, skw_certificate_free>;
using Resize = Handle<skw_resize_table, skw_resize_free>;
using Series = Handle<skw_series, skw_series_free>;
using Report = Handle<skw_report, skw_report_free>;

struct Common {
  unsigned threads = 0;
  bool no_timestamp = false;
};

void stamp(const Common& c) {
  if (c.no_timestamp) return;
  char buf[64];
  const std::time_t now = std::time(nullptr);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  std::printf("# skewes %s run at %s\n", skw_version(), buf);
}

void load(const std::string& path, Catalog& cat) {
  if (path.empty()) throw Failure{kExitUsage, "a zero catalog path is required (--zeros)"};
  check(skw_catalog_load(path.c_str(), &cat.p), "loading " + path);
}

// Flags shared by certify and resize-eta.
struct ParamFlags {
  std::string preset = "chao-plymen";
  std::optional<double> alpha, eta, A, T;
  std::string omega;
  std::string variant;
  bool rh_mode = false;
  bool compat_deltas = false;
  std::optional<double> epsilon;
  std::optional<double> s_star;
  std::string zeros;

  void attach(CLI::App* app, bool with_eta) {
    app->add_option("--zeros", zeros, "zero catalog (text or ZZC1 binary)");
    app->add_option("--preset", preset, "base parameter set")
        ->check(CLI::IsMember({"chao-plymen", "saouter-demichel"}));
    app->add_option("--alpha", alpha, "kernel width alpha");
    app->add_option("--omega", omega, "centre omega (decimal, kept to double-double)");
    if (with_eta) app->add_option("--eta", eta, "half width eta");
    app->add_option("--A", A, "height to which RH is verified");
    app->add_option("--T", T, "truncation height for the zero sums");
    app->add_option("--variant", variant, "lehman1966 | saouter_demichel2010 | revers | std2015");
    app->add_flag("--rh-mode", rh_mode, "assume RH everywhere");
    app->add_flag("--compat-deltas", compat_deltas, "Delta bounds with gamma_min = 14 and kappa = 1.0001");
    app->add_option("--epsilon", epsilon, "zero accuracy override");
    app->add_option("--s-star-override", s_star, "use this S* instead of summing the catalog");
  }

  skw_params params() const {
    skw_params p;
    if (preset == "saouter-demichel") {
      skw_params_saouter_demichel(&p);
    } else {
      skw_params_chao_plymen(&p);
    }
    if (alpha) p.alpha = *alpha;
    if (!omega.empty()) check_flag(skw_parse_decimal(omega.c_str(), &p.omega_hi, &p.omega_lo), "--omega");
    if (eta) p.eta = *eta;
    if (A) p.A = *A;
    if (T) p.T = *T;
    if (!variant.empty()) check_flag(skw_variant_parse(variant.c_str(), &p.variant), "--variant");
    p.rh_mode = rh_mode ? 1 : 0;
    return p;
  }

  skw_options options(const Common& c) const {
    skw_options o;
    skw_options_default(&o);
    o.threads = c.threads;
    o.compat_deltas = compat_deltas ? 1 : 0;
    if (epsilon) {
      o.has_epsilon = 1;
      o.epsilon = *epsilon;
    }
    if (s_star) {
      o.has_s_star_override = 1;
      o.s_star_override = *s_star;
    }
    return o;
  }

  void load_if_needed(Catalog& cat) const {
    if (!zeros.empty()) {
      load(zeros, cat);
    } else if (!s_star) {
      throw Failure{kExitUsage, "either --zeros or --s-star-override is required"};
    }
  }
};

int run_verify(const Common& c, const std::string& zeros) {
  Catalog cat;
  load(zeros, cat);
  Report rep;
  check(skw_verify_lemmas(cat.p, &rep.p), "verify-lemmas");
  stamp(c);
  std::printf("catalog = %s (%zu zeros)\n", zeros.c_str(), skw_catalog_size(cat.p));
  std::fputs(fetch([&](char* b, size_t n, size_t* k) { return skw_report_render(rep.p, b, n, k); }, "render").c_str(),
             stdout);
  return skw_report_all_passed(rep.p) ? kExitOk : kExitCheck;
}

int run_certify(const Common& c, const ParamFlags& f, bool json) {
  Catalog cat;
  f.load_if_needed(cat);
  const skw_params p = f.params();
  const skw_options o = f.options(c);
  Certificate cert;
  check(skw_certify(cat.p, &p, &o, &cert.p), "certify");
  if (!json) stamp(c);
  const skw_format fmt = json ? SKW_FORMAT_JSON : SKW_FORMAT_TEXT;
  std::fputs(
      fetch([&](char* b, size_t n, size_t* k) { return skw_certificate_render(cert.p, fmt, b, n, k); }, "render")
          .c_str(),
      stdout);
  return skw_certificate_positive(cert.p) ? kExitOk : kExitCheck;
}

std::vector<double> default_grid(const skw_params& p, const std::string& preset) {
  if (preset == "saouter-demichel") return {2 * p.A / p.alpha, 2.0e-5, 1.8e-5, 1.6e-5, 1.59e-5, 1.58e-5, 1.55e-5};
  return {1.6e-4, 1.4e-4, 1.2e-4, 1.063e-4, 1.061e-4, 1.060e-4, 1.050e-4};
}

int run_resize(const Common& c, const ParamFlags& f, std::vector<double> etas, bool refine) {
  Catalog cat;
  f.load_if_needed(cat);
  const skw_params p = f.params();
  const skw_options o = f.options(c);
  if (etas.empty()) etas = default_grid(p, f.preset);
  Resize tab;
  check(skw_resize_eta(cat.p, &p, etas.data(), etas.size(), &o, refine ? 1 : 0, &tab.p), "resize-eta");
  stamp(c);
  std::fputs(fetch([&](char* b, size_t n, size_t* k) { return skw_resize_render(tab.p, b, n, k); }, "render").c_str(),
             stdout);
  return skw_resize_best(tab.p) >= 0 ? kExitOk : kExitCheck;
}

struct ScanFlags {
  std::string zeros;
  double from = 300, to = 320;
  std::size_t points = 500;
  std::optional<double> T;
  std::string csv, svg;
  std::optional<double> threshold;
};

int run_scan(const Common& c, const ScanFlags& f) {
  if (f.csv.empty() && f.svg.empty() && !f.threshold) {
    throw Failure{kExitUsage, "nothing to emit: give --csv, --svg or --threshold"};
  }
  Catalog cat;
  load(f.zeros, cat);
  const double T = f.T ? *f.T : skw_catalog_ordinate(cat.p, skw_catalog_size(cat.p) - 1);
  Series s;
  check(skw_scan(cat.p, f.from, f.to, f.points, T, c.threads, &s.p), "scan");
  stamp(c);
  std::printf("range = [%.6g, %.6g]\npoints = %zu\nspacing = %.6g\nT = %.10g\nzeros_used = %zu\n", f.from, f.to,
              skw_series_size(s.p), skw_series_spacing(s.p), T, skw_series_zeros_used(s.p));
  if (!f.csv.empty()) {
    check(skw_series_write_csv(s.p, f.csv.c_str()), "writing " + f.csv);
    std::printf("csv = %s\n", f.csv.c_str());
  }
  if (!f.svg.empty()) {
    check(skw_series_write_svg(s.p, f.svg.c_str()), "writing " + f.svg);
    std::printf("svg = %s\n", f.svg.c_str());
  }
  if (f.threshold) {
    size_t count = 0;
    const std::string text = fetch(
        [&](char* b, size_t n, size_t* k) { return skw_series_candidates(s.p, *f.threshold, &count, b, n, k); },
        "candidates");
    std::printf("candidates (threshold %.6g): %zu\n", *f.threshold, count);
    if (count) std::printf("omega,value,note\n%s", text.c_str());
  }
  return kExitOk;
}

int run_convert(const Common& c, const std::string& in, const std::string& out, std::string format) {
  Catalog cat;
  load(in, cat);
  if (format.empty()) {
    const auto dot = out.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : out.substr(dot);
    format = ext == ".bin" || ext == ".zzc" ? "binary" : "text";
  }
  if (format == "binary") {
    check(skw_catalog_save_binary(cat.p, out.c_str()), "writing " + out);
  } else {
    check(skw_catalog_save_text(cat.p, out.c_str()), "writing " + out);
  }
  stamp(c);
  std::printf("%s -> %s (%s, %zu zeros, accuracy %.3g)\n", in.c_str(), out.c_str(), format.c_str(),
              skw_catalog_size(cat.p), skw_catalog_declared_accuracy(cat.p));
  return kExitOk;
}

int run_oracle(const Common& c, const std::string& zeros, const skw_oracle_options& o) {
  if (o.max_x > 100'000'000ULL) throw Failure{kExitUsage, "--max-x exceeds the sieve limit 1e8"};
  Catalog cat;
  load(zeros, cat);
  Report rep;
  check(skw_oracle_check(cat.p, &o, &rep.p), "oracle-check");
  stamp(c);
  std::fputs(fetch([&](char* b, size_t n, size_t* k) { return skw_report_render(rep.p, b, n, k); }, "render").c_str(),
             stdout);
  return skw_report_all_passed(rep.p) ? kExitOk : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify sign changes of pi(x) - li(x) from zeta zeros"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "worker cap (0 = all cores); results do not depend on it");
  app.add_flag("--no-timestamp", common.no_timestamp, "omit the timestamp line");

  auto* verify = app.add_subcommand("verify-lemmas", "zero-sum and kernel lemma checks");
  std::string verify_zeros;
  verify->add_option("--zeros", verify_zeros, "zero catalog")->required();

  auto* certify = app.add_subcommand("certify", "certify I(omega, eta) > 0");
  ParamFlags cert_flags;
  cert_flags.attach(certify, true);
  bool json = false;
  certify->add_flag("--json", json, "JSON output");

  auto* resize = app.add_subcommand("resize-eta", "error budget and lower bound over an eta grid");
  ParamFlags resize_flags;
  resize_flags.attach(resize, false);
  std::vector<double> etas;
  bool refine = false;
  resize->add_option("--etas", etas, "eta grid (default: the preset's table grid)")->delimiter(',');
  resize->add_flag("--refine", refine, "bisect the smallest positive eta to 4 digits");

  auto* scan = app.add_subcommand("scan", "F_T over a base-10 exponent range");
  ScanFlags scan_flags;
  scan->add_option("--zeros", scan_flags.zeros, "zero catalog")->required();
  scan->add_option("--from", scan_flags.from, "lower log10 x");
  scan->add_option("--to", scan_flags.to, "upper log10 x");
  scan->add_option("--points", scan_flags.points, "grid points")->check(CLI::Range(2, 100000000));
  scan->add_option("--T", scan_flags.T, "truncation height (default: last ordinate)");
  scan->add_option("--csv", scan_flags.csv, "CSV output path");
  scan->add_option("--svg", scan_flags.svg, "SVG output path");
  scan->add_option("--threshold", scan_flags.threshold, "list local maxima at or above this value");

  auto* convert = app.add_subcommand("zeros-convert", "convert a zero catalog between text and ZZC1 binary");
  std::string conv_in, conv_out, conv_format;
  convert->add_option("input", conv_in, "source catalog")->required();
  convert->add_option("output", conv_out, "destination")->required();
  convert->add_option("--to", conv_format, "binary | text (default from the extension)")
      ->check(CLI::IsMember({"binary", "text"}));

  auto* oracle = app.add_subcommand("oracle-check", "prime counting oracles and explicit formula checks");
  std::string oracle_zeros;
  skw_oracle_options oracle_opt;
  skw_oracle_options_default(&oracle_opt);
  double max_x = static_cast<double>(oracle_opt.max_x);
  std::optional<double> pi_4e9;
  oracle->add_option("--zeros", oracle_zeros, "zero catalog (at least 1000 ordinates)")->required();
  oracle->add_option("--max-x", max_x, "sieve extent");
  oracle->add_option("--samples", oracle_opt.samples, "pi < li samples");
  oracle->add_option("--pi-4e9", pi_4e9, "pi(4e9) from a table, enables the Dusart check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return run_verify(common, verify_zeros);
    if (*certify) return run_certify(common, cert_flags, json);
    if (*resize) return run_resize(common, resize_flags, etas, refine);
    if (*scan) return run_scan(common, scan_flags);
    if (*convert) return run_convert(common, conv_in, conv_out, conv_format);
    if (*oracle) {
      if (!(max_x >= 1) || max_x > 1e18) throw Failure{kExitUsage, "--max-x out of range"};
      oracle_opt.max_x = static_cast<unsigned long long>(max_x);
      if (pi_4e9) {
        oracle_opt.has_pi_at_4e9 = 1;
        oracle_opt.pi_at_4e9 = static_cast<unsigned long long>(*pi_4e9);
      }
      return run_oracle(common, oracle_zeros, oracle_opt);
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "skewes: %s\n", f.message.c_str());
    return f.code;
  }
  return kExitUsage;
}
