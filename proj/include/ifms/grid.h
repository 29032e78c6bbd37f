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

#ifndef IFMS_GRID_H_
#define IFMS_GRID_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ifms {

enum class GridSpacing { kLinear, kLog };

// Inclusive sample grid `count` points from `start` to `stop`.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 0;
  GridSpacing spacing = GridSpacing::kLinear;

  std::vector<double> values() const;
  std::string to_string() const;
};

// Parses "start:stop:count[log|lin]", e.g. "0.01:100:10log". A missing suffix
// means linear. Throws PreconditionError on malformed text, count == 0,
// stop < start, or a non-positive start for log grids.
GridSpec parse_grid(std::string_view text);

// Log grid with `per_decade` points per decade over [lo, hi] where lo and hi
// are powers of ten. Point i is exactly 10^(log10(lo) + i / per_decade).
std::vector<double> decade_grid(int lo_exp, int hi_exp, int per_decade);

// Throws PreconditionError unless the values are nonempty, positive, and
// strictly increasing.
void require_time_grid(const std::vector<double>& grid);

}  // namespace ifms

#endif  // IFMS_GRID_H_
