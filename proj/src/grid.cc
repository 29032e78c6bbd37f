// Copyright 2026 The ifms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ifms/grid.h"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "ifms/error.h"

namespace ifms {
namespace {

double parse_double(std::string_view text, std::string_view whole) {
  std::string buf(text);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v)) {
    throw PreconditionError("malformed grid '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

std::vector<double> GridSpec::values() const {
  std::vector<double> out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(start);
    return out;
  }
  const double denom = static_cast<double>(count - 1);
  if (spacing == GridSpacing::kLinear) {
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(start + (stop - start) * static_cast<double>(i) / denom);
    }
  } else {
    const double lo = std::log10(start);
    const double hi = std::log10(stop);
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(
          std::pow(10.0, lo + (hi - lo) * static_cast<double>(i) / denom));
    }
  }
  out.front() = start;
  out.back() = stop;
  return out;
}

std::string GridSpec::to_string() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g:%.17g:%zu%s", start, stop, count,
                spacing == GridSpacing::kLog ? "log" : "lin");
  return buf;
}

GridSpec parse_grid(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 =
      c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw PreconditionError("malformed grid '" + std::string(text) +
                            "', expected start:stop:count[log|lin]");
  }
  GridSpec g;
  g.start = parse_double(text.substr(0, c1), text);
  g.stop = parse_double(text.substr(c1 + 1, c2 - c1 - 1), text);
  std::string_view tail = text.substr(c2 + 1);
  if (tail.ends_with("log")) {
    g.spacing = GridSpacing::kLog;
    tail.remove_suffix(3);
  } else if (tail.ends_with("lin")) {
    tail.remove_suffix(3);
  }
  std::size_t count = 0;
  const auto [ptr, ec] =
      std::from_chars(tail.data(), tail.data() + tail.size(), count);
  if (ec != std::errc() || ptr != tail.data() + tail.size() || count == 0) {
    throw PreconditionError("malformed grid count in '" + std::string(text) +
                            "'");
  }
  g.count = count;
  if (g.stop < g.start || (count > 1 && g.stop == g.start)) {
    throw PreconditionError("grid '" + std::string(text) +
                            "' is not increasing");
  }
  if (g.spacing == GridSpacing::kLog && !(g.start > 0.0)) {
    throw PreconditionError("log grid '" + std::string(text) +
                            "' needs a positive start");
  }
  return g;
}

std::vector<double> decade_grid(int lo_exp, int hi_exp, int per_decade) {
  if (hi_exp < lo_exp || per_decade < 1) {
    throw PreconditionError("decade_grid: empty range");
  }
  const int steps = (hi_exp - lo_exp) * per_decade;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) {
    // Integer numerator keeps exact powers of ten exact.
    const int whole = lo_exp + i / per_decade;
    const int frac = i % per_decade;
    out.push_back(std::pow(10.0, whole) *
                  std::pow(10.0, static_cast<double>(frac) / per_decade));
  }
  return out;
}

void require_time_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw PreconditionError("empty time grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i])) {
      throw PreconditionError("time grid values must be positive");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw PreconditionError("time grid must be strictly increasing");
    }
  }
}

}  // namespace ifms
