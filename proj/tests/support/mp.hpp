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

// Thin RAII layer over MPFR for the multiprecision oracles. Test-only.

#include <mpfr.h>

#include <string>

namespace mp {

// Working precision for newly created values; raise it for cancellation-heavy
// series.
inline mpfr_prec_t kBits = 256;

class Real {
 public:
  Real() { mpfr_init2(v_, kBits); mpfr_set_zero(v_, 1); }
  Real(double x) { mpfr_init2(v_, kBits); mpfr_set_d(v_, x, MPFR_RNDN); }  // NOLINT
  explicit Real(const char* decimal) {
    mpfr_init2(v_, kBits);
    mpfr_set_str(v_, decimal, 10, MPFR_RNDN);
  }
  Real(const Real& o) { mpfr_init2(v_, kBits); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double d() const { return mpfr_get_d(v_, MPFR_RNDN); }

  friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  Real operator-() const { Real r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

#define MP_UNARY(name, fn)                 \
  inline Real name(const Real& x) {        \
    Real r;                                \
    fn(r.get(), x.get(), MPFR_RNDN);       \
    return r;                              \
  }
MP_UNARY(exp, mpfr_exp)
MP_UNARY(log, mpfr_log)
MP_UNARY(sqrt, mpfr_sqrt)
MP_UNARY(cos, mpfr_cos)
MP_UNARY(sin, mpfr_sin)
MP_UNARY(eint, mpfr_eint)
MP_UNARY(abs, mpfr_abs)
#undef MP_UNARY

inline Real pi() {
  Real r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

inline Real euler() {
  Real r;
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

inline Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

inline Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

// x - 2 pi round(x / 2 pi)
inline Real reduce(const Real& x) {
  const Real tp = pi() * Real(2.0);
  Real q = x / tp;
  mpfr_round(q.get(), q.get());
  return x - q * tp;
}

struct Complex {
  Real re, im;
};

inline Complex mul(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex add(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex scale(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
inline Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline Complex inv(const Complex& a) {
  const Real n = norm(a);
  return {a.re / n, -a.im / n};
}

// Ei-type series: gamma + Log z + sum z^k/(k k!) - i pi sgn(Im z), i.e. li(e^z)
// along the horizontal contour. Runs until terms fall below 2^-kBits relative.
inline Complex li_exp_series(const Complex& z) {
  Complex sum{Real(0.0), Real(0.0)};
  Complex term = z;  // z^k / k!
  const Real tiny = pow(Real(2.0), -static_cast<long>(kBits) - 10);
  for (long k = 1; k < 100000; ++k) {
    if (k > 1) term = scale(term, Real(1.0) / Real(static_cast<double>(k)));
    const Complex contrib = scale(term, Real(1.0) / Real(static_cast<double>(k)));
    sum = add(sum, contrib);
    if (k > 10 && norm(contrib) < tiny * tiny * (norm(sum) + Real(1.0))) break;
    term = mul(term, z);
  }
  const Real logmod = log(norm(z)) / Real(2.0);
  const Real arg = atan2(z.im, z.re);
  Real sgn(z.im < Real(0.0) ? -1.0 : 1.0);
  return {sum.re + euler() + logmod, sum.im + arg - pi() * sgn};
}

}  // namespace mp
