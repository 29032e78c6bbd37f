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

#include "ifms/precompact.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace ifms {
namespace {

std::vector<PointIndex> sorted_unique(const IFMetric& metric,
                                      std::span<const PointIndex> set) {
  if (set.empty()) throw PreconditionError("point set is empty");
  std::vector<PointIndex> out(set.begin(), set.end());
  for (PointIndex i : out) metric.check_index(i);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) throw PreconditionError("radius must lie in (0,1)");
}

// Greedy net with r in (0, 1]; r = 1 is the first diagonal stage.
NetReport greedy_any_radius(const IFMetric& metric,
                            const std::vector<PointIndex>& points, double r,
                            TimeParam t) {
  NetReport net;
  net.r = r;
  net.t = t;
  net.points = points;
  net.covered.assign(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (net.covered[i]) continue;
    net.centers.push_back(points[i]);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (!net.covered[j] && near(metric, points[i], points[j], r, t)) {
        net.covered[j] = true;
      }
    }
  }
  return net;
}

}  // namespace

bool NetReport::all_covered() const {
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::vector<bool> coverage_replay(const IFMetric& metric,
                                  std::span<const PointIndex> points,
                                  std::span<const PointIndex> centers, double r,
                                  TimeParam t) {
  std::vector<bool> covered(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (PointIndex c : centers) {
      if (near(metric, c, points[i], r, t)) {
        covered[i] = true;
        break;
      }
    }
  }
  return covered;
}

NetReport greedy_net(const IFMetric& metric, std::span<const PointIndex> set,
                     double r, TimeParam t) {
  require_radius(r);
  return greedy_any_radius(metric, sorted_unique(metric, set), r, t);
}

NetReport exact_min_net(const IFMetric& metric, std::span<const PointIndex> set,
                        double r, TimeParam t) {
  require_radius(r);
  const auto points = sorted_unique(metric, set);
  const std::size_t n = points.size();
  if (n > kExactNetLimit) {
    throw PreconditionError("exact_min_net handles at most " +
                            std::to_string(kExactNetLimit) + " points, got " +
                            std::to_string(n));
  }
  // cover[i]: bitmask of points inside the ball around points[i].
  std::vector<unsigned> cover(n, 0U);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (near(metric, points[i], points[j], r, t)) cover[i] |= 1U << j;
    }
  }
  const unsigned full = (1U << n) - 1U;
  for (std::size_t k = 1; k <= n; ++k) {
    // Lexicographic k-subsets of {0, ..., n-1}.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      unsigned mask = 0U;
      for (std::size_t i : idx) mask |= cover[i];
      if (mask == full) {
        NetReport net;
        net.r = r;
        net.t = t;
        net.points = points;
        for (std::size_t i : idx) net.centers.push_back(points[i]);
        net.covered = coverage_replay(metric, points, net.centers, r, t);
        return net;
      }
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw EvaluationError("no covering subset found");
}

RecenterReport recenter_net(const IFMetric& metric,
                            std::span<const PointIndex> external_centers,
                            std::span<const PointIndex> set, double r,
                            TimeParam t, const Operators& ops) {
  require_radius(r);
  if (external_centers.empty()) {
    throw PreconditionError("recenter_net needs external centers");
  }
  for (PointIndex c : external_centers) metric.check_index(c);
  const auto points = sorted_unique(metric, set);
  RecenterReport report;
  report.level = chaining_level(ops, UnitScalar(r));
  const TimeParam half(t.value() / 2.0);

  const auto hyp = coverage_replay(metric, points, external_centers,
                                   report.level, half);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!hyp[i]) {
      throw PreconditionError(
          "external centers do not cover point " + std::to_string(points[i]) +
          " at the chaining level (s, t/2)");
    }
  }

  report.net.r = r;
  report.net.t = t;
  report.net.points = points;
  for (PointIndex c : external_centers) {
    std::optional<PointIndex> rep;
    for (PointIndex p : points) {
      if (near(metric, c, p, report.level, half)) {
        rep = p;
        break;
      }
    }
    if (!rep) {
      report.dropped_external.push_back(c);
      continue;
    }
    report.kept_external.push_back(c);
    if (std::find(report.net.centers.begin(), report.net.centers.end(), *rep) ==
        report.net.centers.end()) {
      report.net.centers.push_back(*rep);
    }
  }
  report.net.covered =
      coverage_replay(metric, points, report.net.centers, r, t);
  return report;
}

SeparationReport separated_subset(const IFMetric& metric,
                                  std::span<const PointIndex> set, double r,
                                  TimeParam t) {
  require_radius(r);
  const auto points = sorted_unique(metric, set);
  SeparationReport report;
  report.r = r;
  report.t = t;
  for (PointIndex p : points) {
    bool separated = true;
    for (PointIndex q : report.selected) {
      const auto a = metric.eval(p, q, t);
      const auto b = metric.eval(q, p, t);
      if (!(a.m_deg <= 1.0 - r && a.n_deg >= r && b.m_deg <= 1.0 - r &&
            b.n_deg >= r)) {
        separated = false;
        break;
      }
    }
    if (separated) report.selected.push_back(p);
  }
  return report;
}

DiagonalReport diagonal_cauchy_subsequence(const SequencePrefix& seq,
                                           const DiagonalOptions& options) {
  if (options.stages == 0) throw PreconditionError("need at least one stage");
  if (!(options.eps > 0.0 && options.eps < 1.0) || !(options.t > 0.0)) {
    throw PreconditionError("certification needs eps in (0,1) and t > 0");
  }
  if (!options.schedule.empty() && options.schedule.size() < options.stages) {
    throw PreconditionError("schedule shorter than the stage count");
  }
  const IFMetric& metric = seq.carrier;
  DiagonalReport report;
  std::vector<std::size_t> survivors(seq.length());
  for (std::size_t i = 0; i < survivors.size(); ++i) survivors[i] = i;

  for (std::size_t k = 1; k <= options.stages; ++k) {
    double r = 1.0 / static_cast<double>(k);
    double t = r;
    if (!options.schedule.empty()) {
      std::tie(r, t) = options.schedule[k - 1];
    }
    if (!(r > 0.0 && r <= 1.0) || !(t > 0.0)) {
      throw PreconditionError("schedule stage " + std::to_string(k) +
                              " needs r in (0,1] and t > 0");
    }
    std::vector<PointIndex> values;
    for (std::size_t pos : survivors) values.push_back(seq.points[pos]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const NetReport net = greedy_any_radius(metric, values, r, TimeParam(t));

    std::vector<std::vector<std::size_t>> members(net.centers.size());
    for (std::size_t pos : survivors) {
      for (std::size_t c = 0; c < net.centers.size(); ++c) {
        if (near(metric, net.centers[c], seq.points[pos], r, TimeParam(t))) {
          members[c].push_back(pos);
          break;
        }
      }
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < members.size(); ++c) {
      if (members[c].size() > members[best].size()) best = c;
    }
    survivors = std::move(members[best]);
    report.stage_sizes.push_back(survivors.size());
    if (survivors.size() < k) {
      throw EvaluationError("diagonal construction exhausted the prefix at stage " +
                            std::to_string(k) + " (" +
                            std::to_string(survivors.size()) + " survivors)");
    }
    report.picks.push_back(survivors[k - 1]);
  }

  const Operators& ops = metric.ops();
  for (std::size_t n = 2;; ++n) {
    const double inv = 1.0 / static_cast<double>(n);
    if (ops.tnorm(1.0 - inv, 1.0 - inv) > 1.0 - options.eps &&
        ops.tconorm(inv, inv) < options.eps && 2.0 * inv < options.t) {
      report.device_n0 = n;
      break;
    }
  }
  if (report.picks.size() >= 2) {
    std::vector<PointIndex> pts;
    for (std::size_t pos : report.picks) pts.push_back(seq.points[pos]);
    report.certification = cauchy_prefix(SequencePrefix(metric, std::move(pts)),
                                         options.eps, TimeParam(options.t));
  } else {
    report.certification.certified = true;
    report.certification.prefix_len = report.picks.size();
  }
  return report;
}

}  // namespace ifms
