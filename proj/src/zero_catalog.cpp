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

#include "skewes/zero_catalog.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>

#include "skewes/error.hpp"
#include "skewes/quadrature.hpp"
#include "skewes/summation.hpp"

namespace skewes {

namespace {

constexpr char kMagic[4] = {'Z', 'Z', 'C', '1'};
constexpr double kTwoPiE = 2 * std::numbers::pi * std::numbers::e;

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

template <typename T>
T to_little_endian(T v) {
  if constexpr (std::endian::native == std::endian::big) {
    unsigned char bytes[sizeof(T)];
    std::memcpy(bytes, &v, sizeof(T));
    std::reverse(bytes, bytes + sizeof(T));
    std::memcpy(&v, bytes, sizeof(T));
  }
  return v;
}

template <typename T>
void write_le(std::ostream& out, T v) {
  v = to_little_endian(v);
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
bool read_le(std::istream& in, T& v) {
  if (!in.read(reinterpret_cast<char*>(&v), sizeof(T))) return false;
  v = to_little_endian(v);
  return true;
}

}  // namespace

ZeroCatalog::ZeroCatalog(std::vector<double> ordinates, double declared_accuracy, std::string source)
    : declared_accuracy_(declared_accuracy), source_(std::move(source)) {
  if (ordinates.empty()) fail(ErrorCode::kFormat, "zero catalog must be non-empty");
  if (!(declared_accuracy >= 0.0) || !std::isfinite(declared_accuracy))
    fail(ErrorCode::kFormat, "zero catalog accuracy must be a finite non-negative number");
  if (!(ordinates.front() > kFirstOrdinateFloor))
    fail(ErrorCode::kFormat, "first ordinate must exceed 14.1");
  for (std::size_t i = 1; i < ordinates.size(); ++i) {
    if (!(ordinates[i] > ordinates[i - 1])) {
      std::ostringstream msg;
      msg << "zero ordinates not strictly increasing at entry " << i + 1 << " (" << ordinates[i - 1]
          << " then " << ordinates[i] << ")";
      fail(ErrorCode::kFormat, msg.str());
    }
  }
  if (!std::isfinite(ordinates.back())) fail(ErrorCode::kFormat, "non-finite zero ordinate");
  ordinates_ = std::make_shared<const std::vector<double>>(std::move(ordinates));
}

ZeroCatalog ZeroCatalog::parse_text(std::istream& in, const std::string& source) {
  std::vector<double> values;
  double accuracy = kDefaultZeroAccuracy;
  std::string line;
  std::size_t line_no = 0;
  double previous = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = trim(line);
    if (s.empty()) continue;
    if (s.front() == '#') {
      s.remove_prefix(1);
      s = trim(s);
      constexpr std::string_view key = "accuracy:";
      if (s.substr(0, key.size()) == key) {
        if (!parse_double(trim(s.substr(key.size())), accuracy) || !(accuracy >= 0.0)) {
          fail(ErrorCode::kParse, source + ":" + std::to_string(line_no) + ": bad accuracy header");
        }
      }
      continue;
    }
    double v = 0.0;
    if (!parse_double(s, v) || !std::isfinite(v)) {
      fail(ErrorCode::kParse,
           source + ":" + std::to_string(line_no) + ": cannot parse ordinate '" + std::string(s) + "'");
    }
    if (values.empty() && !(v > kFirstOrdinateFloor)) {
      fail(ErrorCode::kFormat, source + ":" + std::to_string(line_no) + ": first ordinate must exceed 14.1");
    }
    if (!values.empty() && !(v > previous)) {
      fail(ErrorCode::kFormat, source + ":" + std::to_string(line_no) + ": ordinates not ascending");
    }
    values.push_back(v);
    previous = v;
  }
  return ZeroCatalog(std::move(values), accuracy, source);
}

ZeroCatalog ZeroCatalog::load_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path.string());
  return parse_text(in, path.string());
}

ZeroCatalog ZeroCatalog::load_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path.string());
  char magic[4] = {};
  if (!in.read(magic, 4)) fail(ErrorCode::kFormat, path.string() + ": truncated header");
  if (std::memcmp(magic, kMagic, 4) != 0) fail(ErrorCode::kFormat, path.string() + ": bad magic");
  std::uint64_t count = 0;
  double accuracy = 0.0;
  if (!read_le(in, count) || !read_le(in, accuracy))
    fail(ErrorCode::kFormat, path.string() + ": truncated header");
  if (count == 0) fail(ErrorCode::kFormat, path.string() + ": zero catalog must be non-empty");

  in.seekg(0, std::ios::end);
  const auto end = static_cast<std::uint64_t>(in.tellg());
  constexpr std::uint64_t header = 4 + 8 + 8;
  if (end < header || (end - header) / 8 < count)
    fail(ErrorCode::kFormat, path.string() + ": truncated payload");
  in.seekg(header);

  std::vector<double> values(count);
  for (auto& v : values) {
    if (!read_le(in, v)) fail(ErrorCode::kFormat, path.string() + ": truncated payload");
  }
  return ZeroCatalog(std::move(values), accuracy, path.string());
}

ZeroCatalog ZeroCatalog::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path.string());
  char magic[4] = {};
  in.read(magic, 4);
  if (in.gcount() == 4 && std::memcmp(magic, kMagic, 4) == 0) return load_binary(path);
  return load_text(path);
}

void ZeroCatalog::save_binary(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot write " + path.string());
  out.write(kMagic, 4);
  write_le<std::uint64_t>(out, ordinates_->size());
  write_le(out, declared_accuracy_);
  for (double v : *ordinates_) write_le(out, v);
  if (!out) fail(ErrorCode::kIo, "write failed: " + path.string());
}

void ZeroCatalog::save_text(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot write " + path.string());
  // Shortest round-trip representation keeps text -> binary -> text stable.
  char buf[64];
  auto [acc_end, acc_ec] = std::to_chars(buf, buf + sizeof buf, declared_accuracy_);
  out << "# accuracy: " << std::string_view(buf, acc_end - buf) << "\n";
  for (double v : *ordinates_) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, ptr - buf);
    out.put('\n');
  }
  if (!out) fail(ErrorCode::kIo, "write failed: " + path.string());
}

double ZeroCatalog::accuracy() const {
  const double top = last();
  return declared_accuracy_ + (std::nextafter(top, INFINITY) - top);
}

std::size_t ZeroCatalog::count_below(double T) const {
  const auto& v = *ordinates_;
  return static_cast<std::size_t>(std::upper_bound(v.begin(), v.end(), T) - v.begin());
}

double ZeroCatalog::inverse_power_sum(int n, double T) const {
  require(n >= 1, "inverse_power_sum: n must be >= 1");
  if (T > last()) {
    std::ostringstream msg;
    msg << "zero catalog exhausted: T = " << T << " exceeds last ordinate " << last();
    fail(ErrorCode::kCatalogExhausted, msg.str());
  }
  const std::size_t count = count_below(T);
  CompensatedSum acc;
  for (std::size_t i = 0; i < count; ++i) acc.add(std::pow((*ordinates_)[i], -n));
  return acc.value();
}

double tail_power_bound(int n, double T) {
  require(n >= 2, "tail_power_bound: n must be >= 2");
  require(T >= kTwoPiE, "tail_power_bound: T must be >= 2*pi*e");
  return std::pow(T, 1 - n) * std::log(T);
}

Interval reciprocal_sum_bracket(double T) {
  require(T >= kTwoPiE, "reciprocal_sum_bracket: T must be >= 2*pi*e");
  const double l = std::log(T / (2 * std::numbers::pi));
  const double center = l * l / (4 * std::numbers::pi);
  return {center - 0.9321, center + 0.9321};
}

Interval zero_density_bracket(const std::function<double(double)>& f, double T1, double T2) {
  require(T1 >= kTwoPiE, "zero_density_bracket: T1 must be >= 2*pi*e");
  require(T1 < T2, "zero_density_bracket: requires T1 < T2");
  const double f1 = f(T1);
  require(f1 > 0.0 && f(T2) > 0.0, "zero_density_bracket: f must be positive");
  constexpr double tol = 1e-10;
  const auto main = integrate(
      [&](double x) { return f(x) * std::log(x / (2 * std::numbers::pi)); }, T1, T2, tol);
  const auto weight = integrate([&](double x) { return f(x) / x; }, T1, T2, tol);
  const double center = main.value / (2 * std::numbers::pi);
  const double slack = 4 * f1 * std::log(T1) + 2 * weight.value +
                       (main.error_estimate / (2 * std::numbers::pi) + 2 * weight.error_estimate) +
                       tol * (std::fabs(center) + 2 * std::fabs(weight.value));
  return {center - slack, center + slack};
}

}  // namespace skewes
