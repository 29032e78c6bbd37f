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

#ifndef IFMS_IF_NORM_H_
#define IFMS_IF_NORM_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ifms/audit.h"
#include "ifms/if_metric.h"
#include "ifms/point_set.h"
#include "ifms/scalars.h"
#include "ifms/tnorm.h"

namespace ifms {

enum class NormKind { kStandard, kEuclideanProduct, kGraph, kTabulated };

std::string to_string(NormKind kind);

struct NormTableEntry {
  Eigen::VectorXd x;
  double t = 1.0;
  double mu = 1.0;
  double nu = 0.0;
};

// An intuitionistic fuzzy norm (mu, nu) on R^dimension with the operators it
// is audited against. Immutable and cheap to copy.
class IFNorm {
 public:
  // mu = t / (t + |x|), nu = 1 - mu for a classical norm |.|. kAbsolute
  // requires dimension 1.
  static IFNorm standard(std::size_t dimension, ClassicalMetric norm,
                         Operators ops = {});

  // Phi(x, t) = T_j mu(x_j, t), Psi(x, t) = S_j nu(x_j, t) for a norm on the
  // real line. Valid when the conorm is max; other conorms are built but
  // flagged.
  static IFNorm euclidean_product(IFNorm component, std::size_t dimension,
                                  Operators ops);

  // mu''(x, t) = mu(x, t) * mu'(Ax, t), nu''(x, t) = nu(x, t) <> nu'(Ax, t).
  // Valid when the conorm is max; other conorms are built but flagged.
  static IFNorm graph(IFNorm domain, Eigen::MatrixXd matrix, IFNorm codomain,
                      Operators ops);

  // Values known only at listed (x, t); x = 0 must be listed explicitly.
  static IFNorm tabulated(std::size_t dimension,
                          std::vector<NormTableEntry> entries, Operators ops);

  // Throws PreconditionError on a dimension mismatch and EvaluationError for
  // tabulated lookups that miss.
  MembershipPair eval(const Eigen::VectorXd& x, TimeParam t) const;
  bool evaluable(const Eigen::VectorXd& x, double t) const;

  std::size_t dimension() const;
  NormKind kind() const;
  const Operators& ops() const;
  bool continuous_probe_supported() const;
  // False when a construction is used outside its validity hypothesis.
  bool validated() const;
  // Human-readable reason when !validated().
  const std::string& validity_note() const;

  // Listed sample points of a tabulated norm; empty otherwise.
  std::vector<Eigen::VectorXd> tabulated_points() const;

  struct Node;

 private:
  explicit IFNorm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct NormAuditOptions {
  AuditOptions base;
  // Limit checks (g), (m) run at t_hi = scale * max(1, |x|_2) and
  // t_lo = min over the nonzero sample of |x|_2 / scale.
  double limit_scale = 1e3;
  double limit_tol = 1e-2;
  // Scalars for the (d), (j) scaling checks.
  std::vector<double> scalars = {-4.0, -1.0, -0.3, 0.5, 2.0, 3.0};
};

// Checks the norm axioms on `sample` (plus the zero vector, appended at
// position sample.size(), whenever it is evaluable):
//   a  mu + nu <= 1              h  nu < 1
//   b  mu > 0                    i  nu = 0 iff x = 0
//   c  mu = 1 iff x = 0          j  nu(a x, t) = nu(x, t / |a|)
//   d  mu(a x, t) = mu(x, t / |a|)
//   e  mu(x, t) * mu(y, s) <= mu(x + y, t + s)
//   k  nu(x, t) <> nu(y, s) >= nu(x + y, t + s)
//   f, l  continuity in t (jump probe)
//   g, m  limits at t_hi / t_lo
//   m_monotone, n_monotone  along t_grid
// Witness indices are sample positions; Witness::scale carries the scalar.
AuditReport norm_axiom_audit(const IFNorm& norm,
                             std::span<const Eigen::VectorXd> sample,
                             const std::vector<double>& t_grid,
                             const NormAuditOptions& options = {});

// Norm-induced metric on the given (distinct) vectors.
IFMetric induced_metric(const IFNorm& norm, std::vector<Eigen::VectorXd> points);

struct BoundednessResult {
  bool bounded = false;
  // Lexicographically smallest (r, t) witnessing mu > 1 - r, nu < r on all
  // of A.
  std::optional<double> r;
  std::optional<double> t;
  // On failure: the element of A with the largest deficit at (r_max, t_max).
  std::optional<std::size_t> worst_index;
  double worst_deficit = 0.0;
  std::size_t sample_size = 0;

  static constexpr const char* kLabel = "sample-certified";
};

// Requires nonempty A and grids; r values must lie in (0,1).
BoundednessResult if_bounded_check(std::span<const Eigen::VectorXd> set,
                                   const IFNorm& norm,
                                   const std::vector<double>& r_grid,
                                   const std::vector<double>& t_grid);

struct TestSequence {
  std::vector<Eigen::VectorXd> values;
  Eigen::VectorXd limit;
};

struct EquivalenceCell {
  std::size_t sequence = 0;
  double eps = 0.0;
  double t = 0.0;
  bool certified_a = false;
  bool certified_b = false;
  std::size_t n0_a = 0;
  std::size_t n0_b = 0;
  bool agree = false;
  // Disagreement that prefix slack cannot explain: one side certifies while
  // the other still fails at the last element.
  bool defect = false;
};

struct EquivalenceReport {
  std::vector<EquivalenceCell> cells;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t defects = 0;
};

// Runs converges_prefix under both induced metrics for every sequence and
// every (eps, t). Both norms must share the dimension.
EquivalenceReport equivalence_diagnostic(const IFNorm& norm_a,
                                         const IFNorm& norm_b,
                                         std::span<const TestSequence> family,
                                         const std::vector<double>& eps_grid,
                                         const std::vector<double>& t_grid);

struct EquivalenceConstants {
  // Largest grid c with mu(y, t) <= t / (t + c) on every sample.
  double c = 0.0;
  // Largest grid d with nu(y, t) >= d / (t + d) on every sample.
  double d = 0.0;
  std::size_t sample_size = 0;
  double tolerance = 0.0;

  static constexpr const char* kLabel = "sample-certified";
};

struct ConstantSearchOptions {
  std::size_t sphere_samples = 256;
  int lo_exp = -6;
  int hi_exp = 6;
  int per_decade = 200;
  double tol = 1e-12;
};

// Basis vectors are the columns of `basis`. Samples y = sum beta_j x_j over
// the unit l1 sphere (all +-e_j vertices plus a Halton sequence with sign
// patterns) and compares against the standard norm on the real line.
// Throws PreconditionError when the basis is numerically rank deficient
// (sigma_min / sigma_max < 1e-10) and EvaluationError when no grid value
// works.
EquivalenceConstants basis_equivalence_constants(
    const Eigen::MatrixXd& basis, const IFNorm& norm,
    const std::vector<double>& t_grid,
    const ConstantSearchOptions& options = {});

}  // namespace ifms

#endif  // IFMS_IF_NORM_H_
