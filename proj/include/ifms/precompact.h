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

#ifndef IFMS_PRECOMPACT_H_
#define IFMS_PRECOMPACT_H_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ifms/if_metric.h"
#include "ifms/sequence.h"

namespace ifms {

// A finite (r, t)-net. `points` is the covered set in ascending index order
// and covered[i] records whether points[i] lies in some center's ball.
struct NetReport {
  std::vector<PointIndex> centers;
  double r = 0.0;
  double t = 0.0;
  std::vector<PointIndex> points;
  std::vector<bool> covered;

  std::size_t size() const { return centers.size(); }
  bool all_covered() const;
};

// Recomputes NetReport::covered from scratch with exact ball predicates.
std::vector<bool> coverage_replay(const IFMetric& metric,
                                  std::span<const PointIndex> points,
                                  std::span<const PointIndex> centers, double r,
                                  TimeParam t);

// Lowest-index uncovered point becomes the next center. 0 < r < 1.
NetReport greedy_net(const IFMetric& metric, std::span<const PointIndex> set,
                     double r, TimeParam t);

// Smallest-cardinality covering subset of `set` (at most 12 points), ties
// broken lexicographically.
NetReport exact_min_net(const IFMetric& metric, std::span<const PointIndex> set,
                        double r, TimeParam t);

inline constexpr std::size_t kExactNetLimit = 12;

struct RecenterReport {
  NetReport net;
  // Radius used for the external cover at time t/2.
  double level = 0.0;
  std::vector<PointIndex> kept_external;
  std::vector<PointIndex> dropped_external;
};

// Moves external centers into `set`. With s = chaining_level(ops, r) the
// external centers must cover `set` at (s, t/2) (PreconditionError
// otherwise). Centers whose ball misses `set` are dropped; each survivor is
// replaced by the lowest-index member of its ball. The returned net is
// replayed at (r, t).
RecenterReport recenter_net(const IFMetric& metric,
                            std::span<const PointIndex> external_centers,
                            std::span<const PointIndex> set, double r,
                            TimeParam t, const Operators& ops);

struct SeparationReport {
  std::vector<PointIndex> selected;
  double r = 0.0;
  double t = 0.0;
};

// Greedy maximal subset whose distinct pairs satisfy M <= 1 - r and N >= r.
SeparationReport separated_subset(const IFMetric& metric,
                                  std::span<const PointIndex> set, double r,
                                  TimeParam t);

struct DiagonalOptions {
  // Stage k uses schedule[k - 1]; empty means (1/k, 1/k).
  std::vector<std::pair<double, double>> schedule;
  std::size_t stages = 10;
  // Certification of the diagonal picks.
  double eps = 0.2;
  double t = 1.0;
};

struct DiagonalReport {
  // 0-based prefix positions of the diagonal picks, strictly increasing.
  std::vector<std::size_t> picks;
  // Survivor count after each stage.
  std::vector<std::size_t> stage_sizes;
  PrefixReport certification;
  // Smallest n with (1-1/n)*(1-1/n) > 1-eps, S(1/n, 1/n) < eps and 2/n < t:
  // picks from stage n on share a (1/n, 1/n) ball, so they are eps-close at
  // time t. Only meaningful for the default schedule.
  std::size_t device_n0 = 0;
  static constexpr const char* kSelectionRule =
      "most-populated ball, lowest center on ties";
};

// Diagonal subsequence construction on a prefix: stage k nets the
// surviving values at (r_k, t_k), keeps the members of the most populated
// ball and picks the k-th survivor. Throws EvaluationError when fewer than
// k survivors remain at stage k.
DiagonalReport diagonal_cauchy_subsequence(const SequencePrefix& seq,
                                           const DiagonalOptions& options = {});

}  // namespace ifms

#endif  // IFMS_PRECOMPACT_H_
