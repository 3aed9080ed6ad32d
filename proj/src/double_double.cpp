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

#include "skewes/double_double.hpp"

#include <cctype>
#include <string>

#include "skewes/error.hpp"

namespace skewes {

namespace {

// 10^k for 0 <= k <= 22 is exact in binary64.
DoubleDouble scale_pow10(DoubleDouble v, int exponent) {
  while (exponent > 0) {
    const int step = exponent > 22 ? 22 : exponent;
    v = v * std::pow(10.0, step);
    exponent -= step;
  }
  while (exponent < 0) {
    const int step = -exponent > 22 ? 22 : -exponent;
    v = v / DoubleDouble(std::pow(10.0, step));
    exponent += step;
  }
  return v;
}

}  // namespace

DoubleDouble parse_decimal(std::string_view text) {
  auto bad = [&]() { fail(ErrorCode::kParse, "not a decimal number: '" + std::string(text) + "'"); };
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (i == end) bad();

  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  DoubleDouble mantissa;
  int digits = 0;
  int significant = 0;
  int scale = 0;  // power of ten applied after the mantissa
  bool seen_point = false;
  for (; i < end; ++i) {
    const char c = text[i];
    if (c == '.') {
      if (seen_point) bad();
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) break;
    ++digits;
    if (significant < 32) {
      mantissa = mantissa * 10.0 + DoubleDouble(static_cast<double>(c - '0'));
      if (mantissa.hi != 0.0) ++significant;
      if (seen_point) --scale;
    } else if (!seen_point) {
      ++scale;  // digits past double-word resolution only shift the magnitude
    }
  }
  if (digits == 0) bad();
  if (i < end) {
    if (text[i] != 'e' && text[i] != 'E') bad();
    ++i;
    bool exp_negative = false;
    if (i < end && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i == end) bad();
    int exponent = 0;
    for (; i < end; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) bad();
      if (exponent < 100000) exponent = exponent * 10 + (text[i] - '0');
    }
    scale += exp_negative ? -exponent : exponent;
  }
  DoubleDouble v = scale_pow10(mantissa, scale);
  if (!std::isfinite(v.hi)) fail(ErrorCode::kParse, "decimal out of range: '" + std::string(text) + "'");
  return negative ? -v : v;
}

DoubleDouble reduce_two_pi(DoubleDouble x) {
  const double k = std::nearbyint(x.hi / dd::kTwoPi.hi);
  DoubleDouble r = x - dd::kTwoPi * k;
  // One correction step for phases landing just outside [-pi, pi].
  if (r.hi > dd::kTwoPi.hi / 2) r = r - dd::kTwoPi;
  if (r.hi < -dd::kTwoPi.hi / 2) r = r + dd::kTwoPi;
  return r;
}

CosSin cos_sin(DoubleDouble reduced) {
  const double c = std::cos(reduced.hi);
  const double s = std::sin(reduced.hi);
  return {c - s * reduced.lo, s + c * reduced.lo};
}

}  // namespace skewes
