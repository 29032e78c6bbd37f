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

#include "ifms/sequence.h"

#include <algorithm>
#include <cmath>

namespace ifms {
namespace {

void require_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw PreconditionError("eps must lie in (0,1)");
  }
}

double deficit(const MembershipPair& p, double eps) {
  return std::max((1.0 - eps) - p.m_deg, p.n_deg - eps);
}

bool passes(const MembershipPair& p, double eps) {
  return p.m_deg > 1.0 - eps && p.n_deg < eps;
}

}  // namespace

Ball::Ball(PointIndex center, double r, double t)
    : center_(center), r_(r), t_(t) {
  if (!(r > 0.0 && r < 1.0)) {
    throw PreconditionError("ball radius must lie in (0,1)");
  }
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw PreconditionError("ball time must be positive");
  }
}

bool near(const IFMetric& metric, PointIndex x, PointIndex y, double r,
          TimeParam t) {
  const auto p = metric.eval(x, y, t);
  return p.m_deg > 1.0 - r && p.n_deg < r;
}

bool ball_membership(const IFMetric& metric, const Ball& ball, PointIndex y) {
  return near(metric, ball.center(), y, ball.r(), TimeParam(ball.t()));
}

bool uniformity_member(const IFMetric& metric, PointIndex x, PointIndex y,
                       std::size_t n) {
  if (n == 0) throw PreconditionError("uniformity level must be >= 1");
  const double inv = 1.0 / static_cast<double>(n);
  return near(metric, x, y, inv, TimeParam(inv));
}

std::size_t composition_level(const Operators& ops, std::size_t n) {
  if (n == 0) throw PreconditionError("uniformity level must be >= 1");
  const double target = 1.0 / static_cast<double>(n);
  for (std::size_t m = 2 * n + 1; m < 2 * n + 100000000; ++m) {
    const double inv = 1.0 / static_cast<double>(m);
    if (ops.tnorm(1.0 - inv, 1.0 - inv) > 1.0 - target &&
        ops.tconorm(inv, inv) < target) {
      return m;
    }
  }
  throw EvaluationError("no composition level found");
}

SequencePrefix::SequencePrefix(IFMetric carrier_in,
                               std::vector<PointIndex> points_in)
    : carrier(std::move(carrier_in)), points(std::move(points_in)) {
  if (points.empty()) throw PreconditionError("sequence prefix is empty");
  for (PointIndex p : points) carrier.check_index(p);
}

PrefixReport cauchy_prefix(const SequencePrefix& seq, double eps, TimeParam t) {
  require_eps(eps);
  const std::size_t len = seq.length();
  if (len < 2) throw PreconditionError("cauchy_prefix needs a prefix of length >= 2");
  PrefixReport report;
  report.prefix_len = len;
  // Scan from the back so the first failing row fixes n0.
  for (std::size_t n = len - 1; n-- > 0;) {
    bool row_failed = false;
    for (std::size_t m = n + 1; m < len; ++m) {
      const auto p = seq.carrier.eval(seq.points[n], seq.points[m], t);
      if (passes(p, eps)) continue;
      const double d = deficit(p, eps);
      if (!row_failed || d > report.deficit) {
        report.worst_first = n + 1;
        report.worst_second = m + 1;
        report.deficit = d;
      }
      row_failed = true;
    }
    if (row_failed) {
      report.n0 = n + 2;
      break;
    }
  }
  report.certified = 2 * report.n0 <= len;
  return report;
}

PrefixReport converges_prefix(const SequencePrefix& seq, PointIndex limit,
                              double eps, TimeParam t) {
  require_eps(eps);
  seq.carrier.check_index(limit);
  const std::size_t len = seq.length();
  if (len < 2) {
    throw PreconditionError("converges_prefix needs a prefix of length >= 2");
  }
  PrefixReport report;
  report.prefix_len = len;
  for (std::size_t n = len; n-- > 0;) {
    const auto p = seq.carrier.eval(seq.points[n], limit, t);
    if (passes(p, eps)) continue;
    report.n0 = n + 2;
    report.worst_first = n + 1;
    report.deficit = deficit(p, eps);
    break;
  }
  report.certified = 2 * report.n0 <= len;
  return report;
}

std::string to_string(ImplicationStatus status) {
  switch (status) {
    case ImplicationStatus::kHolds:
      return "implication_holds";
    case ImplicationStatus::kVacuous:
      return "vacuous";
    case ImplicationStatus::kCounterexample:
      return "counterexample";
  }
  return {};
}

ClusterReport cluster_convergence_check(const SequencePrefix& seq,
                                        std::span<const std::size_t> subsequence,
                                        PointIndex limit, double eps,
                                        TimeParam t) {
  require_eps(eps);
  if (subsequence.size() < 2) {
    throw PreconditionError("subsequence needs at least two positions");
  }
  for (std::size_t i = 0; i < subsequence.size(); ++i) {
    if (subsequence[i] >= seq.length()) {
      throw PreconditionError("subsequence position out of range");
    }
    if (i > 0 && subsequence[i] <= subsequence[i - 1]) {
      throw PreconditionError("subsequence positions must strictly increase");
    }
  }
  ClusterReport report;
  report.level = chaining_level(seq.carrier.ops(), UnitScalar(eps));
  const TimeParam half(t.value() / 2.0);
  report.cauchy = cauchy_prefix(seq, report.level, half);

  std::vector<PointIndex> sub_points;
  for (std::size_t pos : subsequence) sub_points.push_back(seq.points[pos]);
  const SequencePrefix sub(seq.carrier, std::move(sub_points));
  report.subsequence = converges_prefix(sub, limit, report.level, half);
  report.subsequence_reaches_tail = subsequence.back() + 1 >= report.cauchy.n0;

  report.conclusion = converges_prefix(seq, limit, eps, t);
  const bool hypotheses = report.cauchy.certified &&
                          report.subsequence.certified &&
                          report.subsequence_reaches_tail;
  if (!hypotheses) {
    report.status = ImplicationStatus::kVacuous;
  } else if (report.conclusion.certified) {
    report.status = ImplicationStatus::kHolds;
  } else {
    report.status = ImplicationStatus::kCounterexample;
  }
  return report;
}

}  // namespace ifms
