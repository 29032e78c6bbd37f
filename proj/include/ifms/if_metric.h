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

#ifndef IFMS_IF_METRIC_H_
#define IFMS_IF_METRIC_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ifms/audit.h"
#include "ifms/error.h"
#include "ifms/point_set.h"
#include "ifms/scalars.h"
#include "ifms/tnorm.h"

namespace ifms {

class IFNorm;

enum class MetricKind {
  kParametric,
  kStandard,
  kBounded,
  kProduct,
  kSubspaceGraph,
  kNormInduced,
  kReciprocalAugmented,
  kTabulated,
};

std::string to_string(MetricKind kind);

// Weights of the parametric family
//   M(x,y,t) = h t^n / (h t^n + m d(x,y))
//   N(x,y,t) = d(x,y) / (k t^n + m d(x,y))
// with h = nearness_weight, k = non_nearness_weight, m = distance_weight and
// n = time_exponent. All must be positive.
struct ParametricWeights {
  double nearness_weight = 1.0;
  double non_nearness_weight = 1.0;
  double distance_weight = 1.0;
  double time_exponent = 1.0;
};

enum class Validation { kValidate, kUnchecked };

// Explicit value tables: m[t][i][j], n[t][i][j] for each time in `times`.
struct MetricTable {
  std::size_t size = 0;
  std::vector<double> times;
  std::vector<std::vector<std::vector<double>>> m;
  std::vector<std::vector<std::vector<double>>> n;
};

// Ten log-spaced points over [1e-2, 1e2].
const std::vector<double>& default_time_grid();

// Thrown by subspace_graph when the complement sample is empty; the ambient
// metric already is the answer in that case.
class EmptyComplementError : public PreconditionError {
 public:
  EmptyComplementError()
      : PreconditionError(
            "subspace graph metric with an empty complement is undefined; "
            "use the ambient metric unchanged") {}
};

// An intuitionistic fuzzy metric (M, N) on a finite carrier {0, ..., size-1}
// together with the t-norm / t-conorm it is audited against. Instances are
// immutable, cheap to copy, and safe to share across threads.
class IFMetric {
 public:
  // With Validation::kValidate the weights are rejected (AxiomError, with the
  // witness pair and time) when M + N exceeds 1 anywhere on the base points
  // over default_time_grid().
  static IFMetric parametric(const ParametricWeights& weights, PointSet base,
                             Operators ops = {},
                             Validation validation = Validation::kValidate);

  // M = t / (t + d), N = d / (t + d).
  static IFMetric standard(PointSet base, Operators ops = {});

  // m = max(lambda, M), n = min(eta, N). Requires lambda, eta in (0,1) with
  // lambda + eta <= 1.
  static IFMetric bounded(double lambda, double eta, IFMetric inner);

  // Truncated countable product. Factor n (1-based) is clamped by
  // (1 - eps^(n), eps^[n]) with powers taken under `ops`; the first
  // `truncation` factors are folded with the t-norm / t-conorm. Each carrier
  // point is a tuple holding one index per factor.
  static IFMetric product(std::vector<IFMetric> factors,
                          std::vector<std::vector<PointIndex>> tuples,
                          double eps, std::size_t truncation, Operators ops,
                          std::size_t tail_window = 16);

  // Open-subspace metric on G = ambient carrier minus `complement`:
  //   m(x,y,t) = M(x,y,t) * S(f(x,s), f(y,s), t),  n = N,
  // with f(x,s) = 1 / (1 - D(x, complement, s)) and S the standard metric
  // on the real line. Carrier indices are positions in the ascending list of
  // ambient indices outside the complement.
  static IFMetric subspace_graph(IFMetric ambient,
                                 std::vector<PointIndex> complement,
                                 double s, TNorm tnorm);

  // M(x,y,t) = mu(x - y, t), N(x,y,t) = nu(x - y, t).
  static IFMetric norm_induced(const IFNorm& norm,
                               std::vector<Eigen::VectorXd> points);

  // Standard metric of |x - y| + |1/x - 1/y| on values in (0, 1] (any
  // positive values are accepted).
  static IFMetric reciprocal_augmented(
      std::vector<double> values,
      Operators ops = {TNorm::minimum(), TConorm::maximum()});

  static IFMetric tabulated(MetricTable table, Operators ops);

  // Throws PreconditionError for an invalid index and EvaluationError when
  // the value is undefined (tabulated off-grid, subspace f undefined).
  MembershipPair eval(PointIndex x, PointIndex y, TimeParam t) const;

  std::size_t size() const;
  MetricKind kind() const;
  const Operators& ops() const;

  // False only for tabulated metrics at a time missing from the table.
  bool evaluable_at(double t) const;
  // Tabulated metrics cannot be probed between grid times.
  bool continuous_probe_supported() const;

  // Carrier PointSet for metrics that have one (standard, parametric,
  // reciprocal); nullptr otherwise.
  const PointSet* base_points() const;
  // Coordinates for norm-induced metrics; empty otherwise.
  const std::vector<Eigen::VectorXd>& vectors() const;

  void check_index(PointIndex i) const;

  struct Node;
  const Node& node() const { return *node_; }

 private:
  explicit IFMetric(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ProductEval {
  MembershipPair pair;
  // Window products over factors K+1 .. K+tail_window of (1 - eps^(n)) and
  // eps^[n]; the nearness of the untruncated product lies in
  // [pair.m_deg * tail_m_bound, pair.m_deg].
  double tail_m_bound = 1.0;
  double tail_n_bound = 0.0;
};

// Throws PreconditionError unless `metric` is a product metric.
ProductEval product_metric_eval(const IFMetric& metric, PointIndex x,
                                PointIndex y, TimeParam t);

// Same value as IFMetric::eval for subspace graph metrics.
MembershipPair subspace_graph_eval(const IFMetric& metric, PointIndex x,
                                   PointIndex y, TimeParam t);

// f(x, s) of a subspace graph metric at carrier point x.
double subspace_graph_scale(const IFMetric& metric, PointIndex x);

// Closeness degrees of x to a finite nonempty set:
//   nearness = max over A of M(x, y, t),  non_nearness = min over A of N.
struct Closeness {
  double nearness = 0.0;
  double non_nearness = 1.0;
};

Closeness closeness(const IFMetric& metric, PointIndex x,
                    std::span<const PointIndex> set, TimeParam t);

// Checks the metric axioms on every ordered pair and triple of `sample` and
// every (t, s) pair from `t_grid`:
//   a  M + N <= 1                 g  N >= 0
//   b  M > 0                      h  N = 0 iff x = y
//   c  M = 1 iff x = y            i  N symmetric
//   d  M symmetric                j  S(N(x,y,t), N(y,z,s)) >= N(x,z,t+s)
//   e  T(M(x,y,t), M(y,z,s)) <= M(x,z,t+s)
//   f, k  continuity of M(x,y,.) and N(x,y,.) (local jump probe)
//   m_monotone, n_monotone  M nondecreasing / N nonincreasing along t_grid
// Identity checks (c, h) for distinct points are exact; the rest use
// options.tol. Pairs (t, s) whose sum the metric cannot evaluate are skipped.
AuditReport axiom_audit(const IFMetric& metric,
                        std::span<const PointIndex> sample,
                        const std::vector<double>& t_grid,
                        const AuditOptions& options = {});

}  // namespace ifms

#endif  // IFMS_IF_METRIC_H_
