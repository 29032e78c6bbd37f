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

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "ifms/grid.h"
#include "ifms/if_metric.h"

namespace ifms {
namespace {

// M/N values for every ordered pair of sample positions at one time.
struct PairTable {
  std::size_t k = 0;
  std::vector<MembershipPair> cells;

  const MembershipPair& at(std::size_t i, std::size_t j) const {
    return cells[i * k + j];
  }
};

PairTable tabulate(const IFMetric& metric, std::span<const PointIndex> sample,
                   double t) {
  PairTable table{sample.size(), {}};
  table.cells.reserve(sample.size() * sample.size());
  const TimeParam tp(t);
  for (PointIndex x : sample) {
    for (PointIndex y : sample) table.cells.push_back(metric.eval(x, y, tp));
  }
  return table;
}

Witness pair_witness(PointIndex x, PointIndex y, double t) {
  Witness w;
  w.x = x;
  w.y = y;
  w.t = t;
  return w;
}

}  // namespace

AuditReport axiom_audit(const IFMetric& metric,
                        std::span<const PointIndex> sample,
                        const std::vector<double>& t_grid,
                        const AuditOptions& options) {
  if (sample.empty()) throw PreconditionError("audit sample is empty");
  for (PointIndex i : sample) metric.check_index(i);
  require_time_grid(t_grid);

  std::vector<double> grid;
  for (double t : t_grid) {
    if (metric.evaluable_at(t)) grid.push_back(t);
  }
  AuditRecorder rec(options);
  if (grid.size() < t_grid.size()) {
    rec.unchecked("grid", "some grid times are not evaluable by this metric");
  }

  std::map<double, PairTable> tables;
  for (double t : grid) tables.emplace(t, tabulate(metric, sample, t));
  for (double t : grid) {
    for (double s : grid) {
      const double sum = t + s;
      if (tables.count(sum) == 0 && metric.evaluable_at(sum)) {
        tables.emplace(sum, tabulate(metric, sample, sum));
      }
    }
  }

  const std::size_t k = sample.size();
  const Operators& ops = metric.ops();

  // Pointwise axioms a, b, c, g, h.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const PointIndex x = sample[i];
      const PointIndex y = sample[j];
      const bool same = x == y;
      for (double t : grid) {
        const auto& p = tables.at(t).at(i, j);
        const Witness w = pair_witness(x, y, t);
        rec.check("a", p.m_deg + p.n_deg - 1.0, w);
        rec.check_exact("b", !(p.m_deg > 0.0), -p.m_deg, w);
        if (same) {
          rec.check("c", 1.0 - p.m_deg, w);
          rec.check("h", p.n_deg, w);
        } else {
          rec.check_exact("c", p.m_deg == 1.0, 0.0, w);
          rec.check_exact("h", p.n_deg == 0.0, 0.0, w);
        }
        rec.check("g", -p.n_deg, w);
      }
    }
  }

  // Symmetry d, i.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (double t : grid) {
        const auto& table = tables.at(t);
        const Witness w = pair_witness(sample[i], sample[j], t);
        rec.check("d", std::abs(table.at(i, j).m_deg - table.at(j, i).m_deg),
                  w);
        rec.check("i", std::abs(table.at(i, j).n_deg - table.at(j, i).n_deg),
                  w);
      }
    }
  }

  // Triangle inequalities e, j.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        for (double t : grid) {
          const auto& xy = tables.at(t).at(i, j);
          for (double s : grid) {
            const auto sum_it = tables.find(t + s);
            if (sum_it == tables.end()) continue;
            const auto& yz = tables.at(s).at(j, l);
            const auto& xz = sum_it->second.at(i, l);
            Witness w;
            w.x = sample[i];
            w.y = sample[j];
            w.z = sample[l];
            w.t = t;
            w.s = s;
            rec.check("e", ops.tnorm(xy.m_deg, yz.m_deg) - xz.m_deg, w);
            rec.check("j", xz.n_deg - ops.tconorm(xy.n_deg, yz.n_deg), w);
          }
        }
      }
    }
  }

  // Continuity f, k: two-sided jump probe around each grid time.
  if (metric.continuous_probe_supported()) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        for (double t : grid) {
          const auto& p = tables.at(t).at(i, j);
          double jump_m = 0.0;
          double jump_n = 0.0;
          for (double factor :
               {1.0 - options.continuity_step, 1.0 + options.continuity_step}) {
            const auto q =
                metric.eval(sample[i], sample[j], TimeParam(t * factor));
            jump_m = std::max(jump_m, std::abs(q.m_deg - p.m_deg));
            jump_n = std::max(jump_n, std::abs(q.n_deg - p.n_deg));
          }
          const Witness w = pair_witness(sample[i], sample[j], t);
          rec.check_exact("f", !(jump_m <= options.continuity_jump), jump_m,
                          w);
          rec.check_exact("k", !(jump_n <= options.continuity_jump), jump_n,
                          w);
        }
      }
    }
  } else {
    rec.unchecked("f", "values are only known on a finite time grid");
    rec.unchecked("k", "values are only known on a finite time grid");
  }

  // Monotonicity along the grid.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t g = 0; g + 1 < grid.size(); ++g) {
        const auto& lo = tables.at(grid[g]).at(i, j);
        const auto& hi = tables.at(grid[g + 1]).at(i, j);
        Witness w = pair_witness(sample[i], sample[j], grid[g]);
        w.s = grid[g + 1];
        rec.check("m_monotone", lo.m_deg - hi.m_deg, w);
        rec.check("n_monotone", hi.n_deg - lo.n_deg, w);
      }
    }
  }

  return std::move(rec).finish();
}

}  // namespace ifms
