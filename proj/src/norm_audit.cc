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
#include <optional>

#include "ifms/grid.h"
#include "ifms/if_norm.h"

namespace ifms {
namespace {

std::optional<MembershipPair> try_eval(const IFNorm& norm,
                                       const Eigen::VectorXd& x, double t) {
  if (!norm.evaluable(x, t)) return std::nullopt;
  return norm.eval(x, TimeParam(t));
}

Witness at(std::size_t i, double t) {
  Witness w;
  w.x = i;
  w.t = t;
  return w;
}

}  // namespace

AuditReport norm_axiom_audit(const IFNorm& norm,
                             std::span<const Eigen::VectorXd> sample,
                             const std::vector<double>& t_grid,
                             const NormAuditOptions& options) {
  if (sample.empty()) throw PreconditionError("norm audit sample is empty");
  for (const auto& x : sample) {
    if (static_cast<std::size_t>(x.size()) != norm.dimension()) {
      throw PreconditionError("sample vector does not match the norm dimension");
    }
  }
  require_time_grid(t_grid);

  std::vector<Eigen::VectorXd> points(sample.begin(), sample.end());
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(norm.dimension());
  const bool has_zero = std::any_of(points.begin(), points.end(),
                                    [](const auto& x) { return x.isZero(0.0); });
  if (!has_zero && norm.evaluable(zero, t_grid.front())) points.push_back(zero);

  AuditRecorder rec(options.base);
  const std::size_t k = points.size();
  const std::size_t nt = t_grid.size();
  std::vector<std::optional<MembershipPair>> table(k * nt);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t g = 0; g < nt; ++g) {
      table[i * nt + g] = try_eval(norm, points[i], t_grid[g]);
    }
  }
  std::size_t skipped = 0;

  // Pointwise a, b, c, h, i.
  for (std::size_t i = 0; i < k; ++i) {
    const bool is_zero = points[i].isZero(0.0);
    for (std::size_t g = 0; g < nt; ++g) {
      const auto& p = table[i * nt + g];
      if (!p) {
        ++skipped;
        continue;
      }
      const Witness w = at(i, t_grid[g]);
      rec.check("a", p->m_deg + p->n_deg - 1.0, w);
      rec.check_exact("b", !(p->m_deg > 0.0), -p->m_deg, w);
      rec.check_exact("h", !(p->n_deg < 1.0), p->n_deg - 1.0, w);
      if (is_zero) {
        rec.check("c", 1.0 - p->m_deg, w);
        rec.check("i", p->n_deg, w);
      } else {
        rec.check_exact("c", p->m_deg == 1.0, 0.0, w);
        rec.check_exact("i", p->n_deg == 0.0, 0.0, w);
      }
    }
  }

  // Scaling d, j.
  for (std::size_t i = 0; i < k; ++i) {
    for (double alpha : options.scalars) {
      if (alpha == 0.0) continue;
      const Eigen::VectorXd scaled = alpha * points[i];
      for (double t : t_grid) {
        const auto lhs = try_eval(norm, scaled, t);
        const auto rhs = try_eval(norm, points[i], t / std::abs(alpha));
        if (!lhs || !rhs) {
          ++skipped;
          continue;
        }
        Witness w = at(i, t);
        w.scale = alpha;
        rec.check("d", std::abs(lhs->m_deg - rhs->m_deg), w);
        rec.check("j", std::abs(lhs->n_deg - rhs->n_deg), w);
      }
    }
  }

  // Triangle e, k.
  const Operators& ops = norm.ops();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Eigen::VectorXd sum = points[i] + points[j];
      for (std::size_t g = 0; g < nt; ++g) {
        const auto& px = table[i * nt + g];
        if (!px) continue;
        for (std::size_t h = 0; h < nt; ++h) {
          const auto& py = table[j * nt + h];
          if (!py) continue;
          const auto psum = try_eval(norm, sum, t_grid[g] + t_grid[h]);
          if (!psum) {
            ++skipped;
            continue;
          }
          Witness w;
          w.x = i;
          w.y = j;
          w.t = t_grid[g];
          w.s = t_grid[h];
          rec.check("e", ops.tnorm(px->m_deg, py->m_deg) - psum->m_deg, w);
          rec.check("k", psum->n_deg - ops.tconorm(px->n_deg, py->n_deg), w);
        }
      }
    }
  }

  // Continuity f, l.
  if (norm.continuous_probe_supported()) {
    const double step = options.base.continuity_step;
    const double jump = options.base.continuity_jump;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t g = 0; g < nt; ++g) {
        const auto& p = table[i * nt + g];
        if (!p) continue;
        double jm = 0.0;
        double jn = 0.0;
        for (double factor : {1.0 - step, 1.0 + step}) {
          const auto q = norm.eval(points[i], TimeParam(t_grid[g] * factor));
          jm = std::max(jm, std::abs(q.m_deg - p->m_deg));
          jn = std::max(jn, std::abs(q.n_deg - p->n_deg));
        }
        const Witness w = at(i, t_grid[g]);
        rec.check_exact("f", !(jm <= jump), jm, w);
        rec.check_exact("l", !(jn <= jump), jn, w);
      }
    }
  } else {
    rec.unchecked("f", "values are only known at listed times");
    rec.unchecked("l", "values are only known at listed times");
  }

  // Limits g, m.
  double min_norm = 0.0;
  for (const auto& x : points) {
    const double n = x.norm();
    if (n > 0.0 && (min_norm == 0.0 || n < min_norm)) min_norm = n;
  }
  bool limits_probed = false;
  if (min_norm > 0.0) {
    const double t_lo = min_norm / options.limit_scale;
    const double lt = options.limit_tol;
    for (std::size_t i = 0; i < k; ++i) {
      if (points[i].isZero(0.0)) continue;
      const double t_hi = options.limit_scale * std::max(1.0, points[i].norm());
      if (const auto p = try_eval(norm, points[i], t_hi)) {
        limits_probed = true;
        const Witness w = at(i, t_hi);
        rec.check_exact("g", !(p->m_deg >= 1.0 - lt), (1.0 - lt) - p->m_deg, w);
        rec.check_exact("m", !(p->n_deg <= lt), p->n_deg - lt, w);
      }
      if (const auto p = try_eval(norm, points[i], t_lo)) {
        limits_probed = true;
        const Witness w = at(i, t_lo);
        rec.check_exact("g", !(p->m_deg <= lt), p->m_deg - lt, w);
        rec.check_exact("m", !(p->n_deg >= 1.0 - lt), (1.0 - lt) - p->n_deg, w);
      }
    }
  }
  if (!limits_probed) {
    rec.unchecked("g", "no nonzero sample is evaluable at the limit times");
    rec.unchecked("m", "no nonzero sample is evaluable at the limit times");
  }

  // Monotonicity in t.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t g = 0; g + 1 < nt; ++g) {
      const auto& lo = table[i * nt + g];
      const auto& hi = table[i * nt + g + 1];
      if (!lo || !hi) continue;
      Witness w = at(i, t_grid[g]);
      w.s = t_grid[g + 1];
      rec.check("m_monotone", lo->m_deg - hi->m_deg, w);
      rec.check("n_monotone", hi->n_deg - lo->n_deg, w);
    }
  }

  if (skipped > 0) {
    rec.unchecked("partial",
                  std::to_string(skipped) +
                      " checks skipped: values not evaluable at the needed "
                      "(x, t)");
  }
  return std::move(rec).finish();
}

}  // namespace ifms
