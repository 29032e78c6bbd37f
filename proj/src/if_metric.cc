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

#include "ifms/if_metric.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include "ifms/grid.h"
#include "ifms/if_norm.h"

namespace ifms {
namespace {

struct ParametricData {
  ParametricWeights weights;
  PointSet base;
};

struct StandardData {
  PointSet base;
};

struct BoundedData {
  double lambda;
  double eta;
  IFMetric inner;
};

struct ProductData {
  std::vector<IFMetric> factors;
  std::vector<std::vector<PointIndex>> tuples;
  std::size_t truncation;
  std::vector<double> lambdas;  // 1 - eps^(n), n = 1..truncation
  std::vector<double> etas;     // eps^[n]
  double tail_m;
  double tail_n;
};

struct SubspaceData {
  IFMetric ambient;
  std::vector<PointIndex> members;          // ambient index per carrier point
  std::vector<std::optional<double>> scale;  // f(x, s); empty when D = 1
  double s;
};

struct NormInducedData {
  IFNorm norm;
  std::vector<Eigen::VectorXd> points;
};

struct ReciprocalData {
  std::vector<double> values;
};

struct TabulatedData {
  MetricTable table;
};

// Standard construction M = t / (t + d). N is taken as the exact complement
// so that M + N <= 1 survives rounding.
MembershipPair standard_pair(double d, double t) {
  const double m = t / (t + d);
  return {m, 1.0 - m};
}

std::optional<std::size_t> find_time(const std::vector<double>& times,
                                     double t) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (std::abs(times[i] - t) <= 1e-12 * std::max(1.0, std::abs(t))) {
      return i;
    }
  }
  return std::nullopt;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

struct IFMetric::Node {
  Operators ops;
  std::size_t size = 0;
  MetricKind kind = MetricKind::kStandard;
  std::variant<ParametricData, StandardData, BoundedData, ProductData,
               SubspaceData, NormInducedData, ReciprocalData, TabulatedData>
      data;
};

std::string to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::kParametric:
      return "parametric";
    case MetricKind::kStandard:
      return "standard";
    case MetricKind::kBounded:
      return "bounded";
    case MetricKind::kProduct:
      return "product";
    case MetricKind::kSubspaceGraph:
      return "subspace_graph";
    case MetricKind::kNormInduced:
      return "norm_induced";
    case MetricKind::kReciprocalAugmented:
      return "reciprocal_augmented";
    case MetricKind::kTabulated:
      return "tabulated";
  }
  return {};
}

const std::vector<double>& default_time_grid() {
  static const std::vector<double> grid =
      GridSpec{1e-2, 1e2, 10, GridSpacing::kLog}.values();
  return grid;
}

IFMetric IFMetric::parametric(const ParametricWeights& w, PointSet base,
                              Operators ops, Validation validation) {
  if (!(w.nearness_weight > 0 && w.non_nearness_weight > 0 &&
        w.distance_weight > 0 && w.time_exponent > 0)) {
    throw PreconditionError("parametric weights must be positive");
  }
  IFMetric metric(std::make_shared<const Node>(Node{
      ops, base.size(), MetricKind::kParametric, ParametricData{w, std::move(base)}}));
  if (validation == Validation::kValidate) {
    double worst = 0.0;
    std::size_t wx = 0, wy = 0;
    double wt = 0.0;
    for (double t : default_time_grid()) {
      for (std::size_t x = 0; x < metric.size(); ++x) {
        for (std::size_t y = 0; y < metric.size(); ++y) {
          const auto p = metric.eval(x, y, TimeParam(t));
          if (p.m_deg + p.n_deg > 1.0 + worst) {
            worst = p.m_deg + p.n_deg - 1.0;
            wx = x;
            wy = y;
            wt = t;
          }
        }
      }
    }
    if (worst > 1e-12) {
      throw AxiomError("parametric weights violate M + N <= 1 at x=" +
                       std::to_string(wx) + ", y=" + std::to_string(wy) +
                       ", t=" + fmt(wt) + " (excess " + fmt(worst) + ")");
    }
  }
  return metric;
}

IFMetric IFMetric::standard(PointSet base, Operators ops) {
  return IFMetric(std::make_shared<const Node>(
      Node{ops, base.size(), MetricKind::kStandard, StandardData{std::move(base)}}));
}

IFMetric IFMetric::bounded(double lambda, double eta, IFMetric inner) {
  if (!(lambda > 0.0 && lambda < 1.0 && eta > 0.0 && eta < 1.0)) {
    throw PreconditionError("bounds lambda, eta must lie in (0,1)");
  }
  if (lambda + eta > 1.0) {
    throw PreconditionError("bounds need lambda + eta <= 1");
  }
  return IFMetric(std::make_shared<const Node>(
      Node{inner.ops(), inner.size(), MetricKind::kBounded, BoundedData{lambda, eta, std::move(inner)}}));
}

IFMetric IFMetric::product(std::vector<IFMetric> factors,
                           std::vector<std::vector<PointIndex>> tuples,
                           double eps, std::size_t truncation, Operators ops,
                           std::size_t tail_window) {
  if (truncation < 1) throw PreconditionError("product truncation K must be >= 1");
  if (factors.size() < truncation) {
    throw PreconditionError("product needs at least K factors");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw PreconditionError("product eps must lie in (0,1)");
  }
  if (tuples.empty()) throw PreconditionError("product carrier is empty");
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (tuples[i].size() != factors.size()) {
      throw PreconditionError("product tuple " + std::to_string(i) +
                              " needs one index per factor");
    }
    for (std::size_t n = 0; n < factors.size(); ++n) {
      factors[n].check_index(tuples[i][n]);
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (tuples[i] == tuples[j]) {
        throw PreconditionError("product tuples " + std::to_string(j) +
                                " and " + std::to_string(i) + " coincide");
      }
    }
  }
  ProductData data{std::move(factors), std::move(tuples), truncation, {}, {},
                   1.0, 0.0};
  const UnitScalar e(eps);
  for (std::size_t n = 1; n <= truncation; ++n) {
    data.lambdas.push_back(1.0 - iterated_power(ops.tnorm, e, n));
    data.etas.push_back(iterated_power(ops.tconorm, e, n));
  }
  for (std::size_t n = truncation + 1; n <= truncation + tail_window; ++n) {
    data.tail_m = ops.tnorm(data.tail_m, 1.0 - iterated_power(ops.tnorm, e, n));
    data.tail_n = ops.tconorm(data.tail_n, iterated_power(ops.tconorm, e, n));
  }
  return IFMetric(std::make_shared<const Node>(
      Node{ops, data.tuples.size(), MetricKind::kProduct, std::move(data)}));
}

IFMetric IFMetric::subspace_graph(IFMetric ambient,
                                  std::vector<PointIndex> complement, double s,
                                  TNorm tnorm) {
  if (complement.empty()) throw EmptyComplementError();
  const TimeParam ts(s);
  std::vector<bool> excluded(ambient.size(), false);
  for (PointIndex c : complement) {
    ambient.check_index(c);
    excluded[c] = true;
  }
  SubspaceData data{ambient, {}, {}, s};
  for (PointIndex i = 0; i < ambient.size(); ++i) {
    if (excluded[i]) continue;
    data.members.push_back(i);
    const Closeness cl = closeness(ambient, i, complement, ts);
    if (cl.nearness >= 1.0) {
      data.scale.emplace_back(std::nullopt);
    } else {
      data.scale.emplace_back(1.0 / (1.0 - cl.nearness));
    }
  }
  if (data.members.empty()) {
    throw PreconditionError("subspace graph metric has an empty carrier");
  }
  return IFMetric(std::make_shared<const Node>(
      Node{Operators{tnorm, ambient.ops().tconorm}, data.members.size(), MetricKind::kSubspaceGraph, std::move(data)}));
}

IFMetric IFMetric::norm_induced(const IFNorm& norm,
                                std::vector<Eigen::VectorXd> points) {
  if (points.empty()) throw PreconditionError("norm-induced carrier is empty");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<std::size_t>(points[i].size()) != norm.dimension()) {
      throw PreconditionError("carrier vector " + std::to_string(i) +
                              " does not match the norm dimension");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i] == points[j]) {
        throw PreconditionError("carrier vectors " + std::to_string(j) +
                                " and " + std::to_string(i) + " coincide");
      }
    }
  }
  return IFMetric(std::make_shared<const Node>(
      Node{norm.ops(), points.size(), MetricKind::kNormInduced, NormInducedData{norm, std::move(points)}}));
}

IFMetric IFMetric::reciprocal_augmented(std::vector<double> values,
                                        Operators ops) {
  if (values.empty()) throw PreconditionError("empty carrier");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw PreconditionError("reciprocal-augmented points must be positive");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (values[i] == values[j]) {
        throw PreconditionError("points " + std::to_string(j) + " and " +
                                std::to_string(i) + " coincide");
      }
    }
  }
  return IFMetric(std::make_shared<const Node>(
      Node{ops, values.size(), MetricKind::kReciprocalAugmented, ReciprocalData{std::move(values)}}));
}

IFMetric IFMetric::tabulated(MetricTable table, Operators ops) {
  const std::size_t n = table.size;
  if (n == 0) throw PreconditionError("tabulated metric is empty");
  require_time_grid(table.times);
  auto check_block = [&](const auto& block, const char* what) {
    if (block.size() != table.times.size()) {
      throw PreconditionError(std::string("tabulated ") + what +
                              " needs one table per time");
    }
    for (const auto& rows : block) {
      if (rows.size() != n) {
        throw PreconditionError(std::string("tabulated ") + what +
                                " table has the wrong row count");
      }
      for (const auto& row : rows) {
        if (row.size() != n) {
          throw PreconditionError(std::string("tabulated ") + what +
                                  " table has the wrong column count");
        }
        for (double v : row) {
          if (!(v >= 0.0 && v <= 1.0)) {
            throw PreconditionError(std::string("tabulated ") + what +
                                    " value outside [0,1]");
          }
        }
      }
    }
  };
  check_block(table.m, "m");
  check_block(table.n, "n");
  return IFMetric(std::make_shared<const Node>(
      Node{ops, n, MetricKind::kTabulated, TabulatedData{std::move(table)}}));
}

std::size_t IFMetric::size() const { return node_->size; }
MetricKind IFMetric::kind() const { return node_->kind; }
const Operators& IFMetric::ops() const { return node_->ops; }

void IFMetric::check_index(PointIndex i) const {
  if (i >= node_->size) {
    throw PreconditionError("point index " + std::to_string(i) +
                            " out of range (carrier size " +
                            std::to_string(node_->size) + ")");
  }
}

bool IFMetric::evaluable_at(double t) const {
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, TabulatedData>) {
          return find_time(d.table.times, t).has_value();
        } else if constexpr (std::is_same_v<T, BoundedData>) {
          return d.inner.evaluable_at(t);
        } else if constexpr (std::is_same_v<T, ProductData>) {
          return std::all_of(d.factors.begin(),
                             d.factors.begin() + d.truncation,
                             [&](const IFMetric& f) { return f.evaluable_at(t); });
        } else if constexpr (std::is_same_v<T, SubspaceData>) {
          return d.ambient.evaluable_at(t);
        } else {
          return true;
        }
      },
      node_->data);
}

bool IFMetric::continuous_probe_supported() const {
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, TabulatedData>) {
          return false;
        } else if constexpr (std::is_same_v<T, BoundedData>) {
          return d.inner.continuous_probe_supported();
        } else if constexpr (std::is_same_v<T, ProductData>) {
          return std::all_of(
              d.factors.begin(), d.factors.begin() + d.truncation,
              [](const IFMetric& f) { return f.continuous_probe_supported(); });
        } else if constexpr (std::is_same_v<T, SubspaceData>) {
          return d.ambient.continuous_probe_supported();
        } else if constexpr (std::is_same_v<T, NormInducedData>) {
          return d.norm.continuous_probe_supported();
        } else {
          return true;
        }
      },
      node_->data);
}

const PointSet* IFMetric::base_points() const {
  if (const auto* p = std::get_if<StandardData>(&node_->data)) return &p->base;
  if (const auto* p = std::get_if<ParametricData>(&node_->data)) return &p->base;
  return nullptr;
}

const std::vector<Eigen::VectorXd>& IFMetric::vectors() const {
  static const std::vector<Eigen::VectorXd> kEmpty;
  if (const auto* p = std::get_if<NormInducedData>(&node_->data)) {
    return p->points;
  }
  return kEmpty;
}

MembershipPair IFMetric::eval(PointIndex x, PointIndex y, TimeParam t) const {
  check_index(x);
  check_index(y);
  const Operators& ops = node_->ops;
  return std::visit(
      [&](const auto& d) -> MembershipPair {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ParametricData>) {
          const double dist = d.base.distance(x, y);
          const double tn = std::pow(t.value(), d.weights.time_exponent);
          const double md = d.weights.distance_weight * dist;
          const double ht = d.weights.nearness_weight * tn;
          return {ht / (ht + md),
                  dist / (d.weights.non_nearness_weight * tn + md)};
        } else if constexpr (std::is_same_v<T, StandardData>) {
          return standard_pair(d.base.distance(x, y), t);
        } else if constexpr (std::is_same_v<T, BoundedData>) {
          const auto p = d.inner.eval(x, y, t);
          return {std::max(d.lambda, p.m_deg), std::min(d.eta, p.n_deg)};
        } else if constexpr (std::is_same_v<T, ProductData>) {
          MembershipPair acc{1.0, 0.0};
          for (std::size_t n = 0; n < d.truncation; ++n) {
            const auto p = d.factors[n].eval(d.tuples[x][n], d.tuples[y][n], t);
            acc.m_deg = ops.tnorm(acc.m_deg, std::max(d.lambdas[n], p.m_deg));
            acc.n_deg = ops.tconorm(acc.n_deg, std::min(d.etas[n], p.n_deg));
          }
          return acc;
        } else if constexpr (std::is_same_v<T, SubspaceData>) {
          if (!d.scale[x] || !d.scale[y]) {
            throw EvaluationError(
                "subspace graph scale undefined: point touches the "
                "complement closure (D = 1)");
          }
          const auto p = d.ambient.eval(d.members[x], d.members[y], t);
          const double line =
              t / (t + std::abs(*d.scale[x] - *d.scale[y]));
          return {ops.tnorm(p.m_deg, line), p.n_deg};
        } else if constexpr (std::is_same_v<T, NormInducedData>) {
          return d.norm.eval(d.points[x] - d.points[y], t);
        } else if constexpr (std::is_same_v<T, ReciprocalData>) {
          const double a = d.values[x];
          const double b = d.values[y];
          return standard_pair(std::abs(a - b) + std::abs(1.0 / a - 1.0 / b),
                               t);
        } else {
          const auto ti = find_time(d.table.times, t);
          if (!ti) {
            throw EvaluationError("tabulated metric has no entry at t=" +
                                  fmt(t));
          }
          return {d.table.m[*ti][x][y], d.table.n[*ti][x][y]};
        }
      },
      node_->data);
}

ProductEval product_metric_eval(const IFMetric& metric, PointIndex x,
                                PointIndex y, TimeParam t) {
  const auto* d = std::get_if<ProductData>(&metric.node().data);
  if (d == nullptr) {
    throw PreconditionError("product_metric_eval needs a product metric");
  }
  return ProductEval{metric.eval(x, y, t), d->tail_m, d->tail_n};
}

MembershipPair subspace_graph_eval(const IFMetric& metric, PointIndex x,
                                   PointIndex y, TimeParam t) {
  if (metric.kind() != MetricKind::kSubspaceGraph) {
    throw PreconditionError("subspace_graph_eval needs a subspace graph metric");
  }
  return metric.eval(x, y, t);
}

double subspace_graph_scale(const IFMetric& metric, PointIndex x) {
  const auto* d = std::get_if<SubspaceData>(&metric.node().data);
  if (d == nullptr) {
    throw PreconditionError("subspace_graph_scale needs a subspace graph metric");
  }
  metric.check_index(x);
  if (!d->scale[x]) {
    throw EvaluationError("subspace graph scale undefined (D = 1)");
  }
  return *d->scale[x];
}

Closeness closeness(const IFMetric& metric, PointIndex x,
                    std::span<const PointIndex> set, TimeParam t) {
  if (set.empty()) throw PreconditionError("closeness needs a nonempty set");
  Closeness c{0.0, 1.0};
  for (PointIndex y : set) {
    const auto p = metric.eval(x, y, t);
    c.nearness = std::max(c.nearness, p.m_deg);
    c.non_nearness = std::min(c.non_nearness, p.n_deg);
  }
  return c;
}

}  // namespace ifms
