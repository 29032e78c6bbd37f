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

#ifndef IFMS_SEQUENCE_H_
#define IFMS_SEQUENCE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ifms/if_metric.h"

namespace ifms {

// Open ball B(center, r, t): points y with M(center, y, t) > 1 - r and
// N(center, y, t) < r.
class Ball {
 public:
  // Throws PreconditionError unless 0 < r < 1 and t > 0.
  Ball(PointIndex center, double r, double t);

  PointIndex center() const { return center_; }
  double r() const { return r_; }
  double t() const { return t_; }

 private:
  PointIndex center_;
  double r_;
  double t_;
};

// Both strict inequalities, compared exactly.
bool ball_membership(const IFMetric& metric, const Ball& ball, PointIndex y);

// Same predicate without the radius restriction; r = 1 is accepted and
// reduces to M > 0, N < 1.
bool near(const IFMetric& metric, PointIndex x, PointIndex y, double r,
          TimeParam t);

// (x, y) in U_n: near at r = t = 1/n. n = 1 is accepted but degenerate.
bool uniformity_member(const IFMetric& metric, PointIndex x, PointIndex y,
                       std::size_t n);

// Smallest m > 2n with T(1 - 1/m, 1 - 1/m) > 1 - 1/n and S(1/m, 1/m) < 1/n,
// so that U_m o U_m is contained in U_n.
std::size_t composition_level(const Operators& ops, std::size_t n);

// A finite sequence prefix x_1, ..., x_L of carrier points.
struct SequencePrefix {
  SequencePrefix(IFMetric carrier, std::vector<PointIndex> points);

  IFMetric carrier;
  std::vector<PointIndex> points;

  std::size_t length() const { return points.size(); }
};

// Result of a prefix scan. Positions are 1-based.
//
// n0 is the smallest position after which every checked pair (or element)
// passes; n0 = L + 1 when the last element still fails. The verdict is
// "certified" when the passing tail is at least as long as the head,
// 2 * n0 <= L. When some pair fails, worst_* identify the failing pair with
// the largest first position (largest deficit among those, then smallest
// second position).
struct PrefixReport {
  bool certified = false;
  std::size_t n0 = 1;
  std::size_t prefix_len = 0;
  std::optional<std::size_t> worst_first;
  std::optional<std::size_t> worst_second;
  // max((1 - eps) - M, N - eps) at the worst pair.
  double deficit = 0.0;

  static constexpr const char* kLabel = "prefix-certified";
};

// Pairs (n, m), n < m, need M(x_n, x_m, t) > 1 - eps and N < eps.
// Requires 0 < eps < 1 and L >= 2.
PrefixReport cauchy_prefix(const SequencePrefix& seq, double eps, TimeParam t);

// Elements need M(x_n, limit, t) > 1 - eps and N < eps; worst_second stays
// empty.
PrefixReport converges_prefix(const SequencePrefix& seq, PointIndex limit,
                              double eps, TimeParam t);

enum class ImplicationStatus { kHolds, kVacuous, kCounterexample };

std::string to_string(ImplicationStatus status);

// "A Cauchy sequence with a convergent subsequence converges" on a prefix.
// With s = chaining_level(ops, eps):
//   cauchy       cauchy_prefix(seq, s, t/2)
//   subsequence  converges_prefix(seq restricted to `subsequence`, s, t/2),
//                whose last element must sit at or after the Cauchy n0
//   conclusion   converges_prefix(seq, eps, t)
struct ClusterReport {
  double level = 0.0;
  PrefixReport cauchy;
  PrefixReport subsequence;
  PrefixReport conclusion;
  bool subsequence_reaches_tail = false;
  ImplicationStatus status = ImplicationStatus::kVacuous;
};

// `subsequence` holds 0-based, strictly increasing positions into the
// prefix (at least two).
ClusterReport cluster_convergence_check(const SequencePrefix& seq,
                                        std::span<const std::size_t> subsequence,
                                        PointIndex limit, double eps,
                                        TimeParam t);

}  // namespace ifms

#endif  // IFMS_SEQUENCE_H_
