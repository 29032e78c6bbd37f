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

#include "ifms/if_norm.h"

#include <algorithm>
#include <cmath>
#include <variant>

#include "ifms/grid.h"
#include "ifms/sequence.h"

namespace ifms {
namespace {

struct StandardData {
  ClassicalMetric tag;
};

struct ProductData {
  IFNorm component;
};

struct GraphData {
  IFNorm domain;
  Eigen::MatrixXd matrix;
  IFNorm codomain;
};

struct TableData {
  std::vector<NormTableEntry> entries;
};

bool same_time(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b));
}

bool same_vector(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return (a - b).lpNorm<Eigen::Infinity>() <= 1e-12;
}

double classical_norm(ClassicalMetric tag, const Eigen::VectorXd& x) {
  switch (tag) {
    case ClassicalMetric::kEuclidean:
      return x.norm();
    case ClassicalMetric::kManhattan:
      return x.lpNorm<1>();
    case ClassicalMetric::kChebyshev:
      return x.lpNorm<Eigen::Infinity>();
    case ClassicalMetric::kAbsolute:
      return std::abs(x(0));
  }
  return 0.0;
}

const NormTableEntry* lookup(const TableData& d, const Eigen::VectorXd& x,
                             double t) {
  for (const auto& e : d.entries) {
    if (same_time(e.t, t) && same_vector(e.x, x)) return &e;
  }
  return nullptr;
}

}  // namespace

struct IFNorm::Node {
  Operators ops;
  std::size_t dimension = 0;
  NormKind kind = NormKind::kStandard;
  bool validated = true;
  std::string note;
  std::variant<StandardData, ProductData, GraphData, TableData> data =
      StandardData{ClassicalMetric::kEuclidean};
};

std::string to_string(NormKind kind) {
  switch (kind) {
    case NormKind::kStandard:
      return "standard";
    case NormKind::kEuclideanProduct:
      return "euclidean_product";
    case NormKind::kGraph:
      return "graph";
    case NormKind::kTabulated:
      return "tabulated";
  }
  return {};
}

IFNorm IFNorm::standard(std::size_t dimension, ClassicalMetric norm,
                        Operators ops) {
  if (dimension == 0) throw PreconditionError("norm dimension must be >= 1");
  if (norm == ClassicalMetric::kAbsolute && dimension != 1) {
    throw PreconditionError("the abs norm needs dimension 1");
  }
  auto node = std::make_shared<Node>();
  node->ops = ops;
  node->dimension = dimension;
  node->kind = NormKind::kStandard;
  node->data = StandardData{norm};
  return IFNorm(node);
}

IFNorm IFNorm::euclidean_product(IFNorm component, std::size_t dimension,
                                 Operators ops) {
  if (component.dimension() != 1) {
    throw PreconditionError("product component must be a norm on the real line");
  }
  if (dimension == 0) throw PreconditionError("norm dimension must be >= 1");
  auto node = std::make_shared<Node>();
  node->ops = ops;
  node->dimension = dimension;
  node->kind = NormKind::kEuclideanProduct;
  if (ops.tconorm.kind() != TConormKind::kMaximum) {
    node->validated = false;
    node->note = "componentwise product is only known to be a norm under the "
                 "max conorm; got " + ops.tconorm.name();
  }
  node->data = ProductData{std::move(component)};
  return IFNorm(node);
}

IFNorm IFNorm::graph(IFNorm domain, Eigen::MatrixXd matrix, IFNorm codomain,
                     Operators ops) {
  if (static_cast<std::size_t>(matrix.cols()) != domain.dimension() ||
      static_cast<std::size_t>(matrix.rows()) != codomain.dimension()) {
    throw PreconditionError("operator matrix is " +
                            std::to_string(matrix.rows()) + "x" +
                            std::to_string(matrix.cols()) +
                            ", norms need " +
                            std::to_string(codomain.dimension()) + "x" +
                            std::to_string(domain.dimension()));
  }
  auto node = std::make_shared<Node>();
  node->ops = ops;
  node->dimension = domain.dimension();
  node->kind = NormKind::kGraph;
  if (ops.tconorm.kind() != TConormKind::kMaximum) {
    node->validated = false;
    node->note = "graph norm is only known to be a norm under the max "
                 "conorm; got " + ops.tconorm.name();
  }
  node->data = GraphData{std::move(domain), std::move(matrix),
                         std::move(codomain)};
  return IFNorm(node);
}

IFNorm IFNorm::tabulated(std::size_t dimension,
                         std::vector<NormTableEntry> entries, Operators ops) {
  if (dimension == 0) throw PreconditionError("norm dimension must be >= 1");
  if (entries.empty()) throw PreconditionError("tabulated norm is empty");
  for (const auto& e : entries) {
    if (static_cast<std::size_t>(e.x.size()) != dimension) {
      throw PreconditionError("tabulated norm entry has the wrong dimension");
    }
    if (!(e.t > 0.0)) throw PreconditionError("tabulated norm time must be > 0");
    if (!(e.mu >= 0.0 && e.mu <= 1.0 && e.nu >= 0.0 && e.nu <= 1.0)) {
      throw PreconditionError("tabulated norm value outside [0,1]");
    }
  }
  auto node = std::make_shared<Node>();
  node->ops = ops;
  node->dimension = dimension;
  node->kind = NormKind::kTabulated;
  node->data = TableData{std::move(entries)};
  return IFNorm(node);
}

std::size_t IFNorm::dimension() const { return node_->dimension; }
NormKind IFNorm::kind() const { return node_->kind; }
const Operators& IFNorm::ops() const { return node_->ops; }
bool IFNorm::validated() const { return node_->validated; }
const std::string& IFNorm::validity_note() const { return node_->note; }

bool IFNorm::continuous_probe_supported() const {
  return std::visit(
      [](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, TableData>) {
          return false;
        } else if constexpr (std::is_same_v<T, ProductData>) {
          return d.component.continuous_probe_supported();
        } else if constexpr (std::is_same_v<T, GraphData>) {
          return d.domain.continuous_probe_supported() &&
                 d.codomain.continuous_probe_supported();
        } else {
          return true;
        }
      },
      node_->data);
}

std::vector<Eigen::VectorXd> IFNorm::tabulated_points() const {
  std::vector<Eigen::VectorXd> out;
  if (const auto* d = std::get_if<TableData>(&node_->data)) {
    for (const auto& e : d->entries) {
      const bool seen = std::any_of(out.begin(), out.end(),
                                    [&](const auto& v) { return same_vector(v, e.x); });
      if (!seen) out.push_back(e.x);
    }
  }
  return out;
}

bool IFNorm::evaluable(const Eigen::VectorXd& x, double t) const {
  if (static_cast<std::size_t>(x.size()) != node_->dimension || !(t > 0.0)) {
    return false;
  }
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, TableData>) {
          return lookup(d, x, t) != nullptr;
        } else if constexpr (std::is_same_v<T, ProductData>) {
          for (Eigen::Index j = 0; j < x.size(); ++j) {
            if (!d.component.evaluable(x.segment(j, 1), t)) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, GraphData>) {
          return d.domain.evaluable(x, t) &&
                 d.codomain.evaluable(d.matrix * x, t);
        } else {
          return true;
        }
      },
      node_->data);
}

MembershipPair IFNorm::eval(const Eigen::VectorXd& x, TimeParam t) const {
  if (static_cast<std::size_t>(x.size()) != node_->dimension) {
    throw PreconditionError("vector of dimension " + std::to_string(x.size()) +
                            " given to a norm on dimension " +
                            std::to_string(node_->dimension));
  }
  const Operators& ops = node_->ops;
  return std::visit(
      [&](const auto& d) -> MembershipPair {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, StandardData>) {
          const double m = t / (t + classical_norm(d.tag, x));
          return {m, 1.0 - m};
        } else if constexpr (std::is_same_v<T, ProductData>) {
          MembershipPair acc{1.0, 0.0};
          for (Eigen::Index j = 0; j < x.size(); ++j) {
            const auto p = d.component.eval(x.segment(j, 1), t);
            acc.m_deg = ops.tnorm(acc.m_deg, p.m_deg);
            acc.n_deg = ops.tconorm(acc.n_deg, p.n_deg);
          }
          return acc;
        } else if constexpr (std::is_same_v<T, GraphData>) {
          const auto p = d.domain.eval(x, t);
          const auto q = d.codomain.eval(d.matrix * x, t);
          return {ops.tnorm(p.m_deg, q.m_deg), ops.tconorm(p.n_deg, q.n_deg)};
        } else {
          const NormTableEntry* e = lookup(d, x, t);
          if (e == nullptr) {
            throw EvaluationError("tabulated norm has no entry for this (x, t)");
          }
          return {e->mu, e->nu};
        }
      },
      node_->data);
}

IFMetric induced_metric(const IFNorm& norm,
                        std::vector<Eigen::VectorXd> points) {
  return IFMetric::norm_induced(norm, std::move(points));
}

BoundednessResult if_bounded_check(std::span<const Eigen::VectorXd> set,
                                   const IFNorm& norm,
                                   const std::vector<double>& r_grid,
                                   const std::vector<double>& t_grid) {
  if (set.empty()) throw PreconditionError("boundedness check needs a nonempty set");
  if (r_grid.empty() || t_grid.empty()) {
    throw PreconditionError("boundedness check needs nonempty grids");
  }
  for (double r : r_grid) {
    if (!(r > 0.0 && r < 1.0)) throw PreconditionError("r grid values must lie in (0,1)");
  }
  for (double t : t_grid) {
    if (!(t > 0.0)) throw PreconditionError("t grid values must be positive");
  }
  std::vector<double> rs = r_grid;
  std::vector<double> ts = t_grid;
  std::sort(rs.begin(), rs.end());
  std::sort(ts.begin(), ts.end());

  BoundednessResult result;
  result.sample_size = set.size();
  for (double r : rs) {
    for (double t : ts) {
      const TimeParam tp(t);
      const bool all = std::all_of(set.begin(), set.end(), [&](const auto& x) {
        const auto p = norm.eval(x, tp);
        return p.m_deg > 1.0 - r && p.n_deg < r;
      });
      if (all) {
        result.bounded = true;
        result.r = r;
        result.t = t;
        return result;
      }
    }
  }
  const double r = rs.back();
  const TimeParam tp(ts.back());
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto p = norm.eval(set[i], tp);
    const double d = std::max((1.0 - r) - p.m_deg, p.n_deg - r);
    if (!result.worst_index || d > result.worst_deficit) {
      result.worst_index = i;
      result.worst_deficit = d;
    }
  }
  return result;
}

EquivalenceReport equivalence_diagnostic(const IFNorm& norm_a,
                                         const IFNorm& norm_b,
                                         std::span<const TestSequence> family,
                                         const std::vector<double>& eps_grid,
                                         const std::vector<double>& t_grid) {
  if (norm_a.dimension() != norm_b.dimension()) {
    throw PreconditionError("norms live on different dimensions");
  }
  if (eps_grid.empty() || t_grid.empty()) {
    throw PreconditionError("equivalence diagnostic needs nonempty grids");
  }
  EquivalenceReport report;
  for (std::size_t s = 0; s < family.size(); ++s) {
    const TestSequence& seq = family[s];
    // Distinct carrier vectors; the limit gets its own slot.
    std::vector<Eigen::VectorXd> carrier;
    auto slot = [&](const Eigen::VectorXd& v) -> PointIndex {
      for (std::size_t i = 0; i < carrier.size(); ++i) {
        if (carrier[i] == v) return i;
      }
      carrier.push_back(v);
      return carrier.size() - 1;
    };
    const PointIndex limit = slot(seq.limit);
    std::vector<PointIndex> indices;
    for (const auto& v : seq.values) indices.push_back(slot(v));

    const SequencePrefix prefix_a(induced_metric(norm_a, carrier), indices);
    const SequencePrefix prefix_b(induced_metric(norm_b, carrier), indices);
    const std::size_t len = indices.size();
    for (double eps : eps_grid) {
      for (double t : t_grid) {
        const auto ra = converges_prefix(prefix_a, limit, eps, TimeParam(t));
        const auto rb = converges_prefix(prefix_b, limit, eps, TimeParam(t));
        EquivalenceCell cell;
        cell.sequence = s;
        cell.eps = eps;
        cell.t = t;
        cell.certified_a = ra.certified;
        cell.certified_b = rb.certified;
        cell.n0_a = ra.n0;
        cell.n0_b = rb.n0;
        cell.agree = ra.certified == rb.certified;
        if (cell.agree) {
          ++report.agreements;
        } else {
          ++report.disagreements;
          const std::size_t failing_n0 = ra.certified ? rb.n0 : ra.n0;
          cell.defect = failing_n0 == len + 1;
          if (cell.defect) ++report.defects;
        }
        report.cells.push_back(cell);
      }
    }
  }
  return report;
}

namespace {

double radical_inverse(std::size_t index, unsigned base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

unsigned nth_prime(std::size_t n) {
  static const unsigned kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                     31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  if (n < std::size(kPrimes)) return kPrimes[n];
  unsigned candidate = kPrimes[std::size(kPrimes) - 1];
  std::size_t count = std::size(kPrimes) - 1;
  while (count < n) {
    candidate += 2;
    bool prime = true;
    for (unsigned d = 3; d * d <= candidate; d += 2) {
      if (candidate % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) ++count;
  }
  return candidate;
}

// Unit l1-sphere coefficient samples: the 2n vertices, then Halton points
// normalized onto the simplex with signs cycling through all patterns.
std::vector<Eigen::VectorXd> l1_sphere_samples(std::size_t n,
                                               std::size_t count) {
  std::vector<Eigen::VectorXd> out;
  for (std::size_t j = 0; j < n; ++j) {
    for (double sign : {1.0, -1.0}) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
      v(j) = sign;
      out.push_back(v);
    }
  }
  for (std::size_t i = 1; i <= count; ++i) {
    Eigen::VectorXd v(n);
    for (std::size_t j = 0; j < n; ++j) {
      v(j) = radical_inverse(i, nth_prime(j));
    }
    const double sum = v.sum();
    if (!(sum > 0.0)) continue;
    v /= sum;
    for (std::size_t j = 0; j < n && j < 63; ++j) {
      if ((i >> j) & 1U) v(j) = -v(j);
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

EquivalenceConstants basis_equivalence_constants(
    const Eigen::MatrixXd& basis, const IFNorm& norm,
    const std::vector<double>& t_grid, const ConstantSearchOptions& options) {
  if (basis.cols() == 0) throw PreconditionError("basis is empty");
  if (static_cast<std::size_t>(basis.rows()) != norm.dimension()) {
    throw PreconditionError("basis vectors do not match the norm dimension");
  }
  require_time_grid(t_grid);
  if (basis.cols() > basis.rows()) {
    throw PreconditionError("more basis vectors than dimensions: not independent");
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(basis);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (!(smax > 0.0) || smin / smax < 1e-10) {
    throw PreconditionError("basis is numerically rank deficient (sigma ratio " +
                            std::to_string(smax > 0.0 ? smin / smax : 0.0) +
                            ")");
  }

  const auto coeffs =
      l1_sphere_samples(static_cast<std::size_t>(basis.cols()),
                        options.sphere_samples);
  // Values of mu, nu per (sample, t).
  std::vector<MembershipPair> values;
  for (const auto& beta : coeffs) {
    const Eigen::VectorXd y = basis * beta;
    for (double t : t_grid) values.push_back(norm.eval(y, TimeParam(t)));
  }
  const std::size_t nt = t_grid.size();
  const auto grid = decade_grid(options.lo_exp, options.hi_exp,
                                options.per_decade);

  auto c_ok = [&](double c) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double t = t_grid[i % nt];
      if (values[i].m_deg > t / (t + c) + options.tol) return false;
    }
    return true;
  };
  auto d_ok = [&](double d) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double t = t_grid[i % nt];
      if (values[i].n_deg < (1.0 - t / (t + d)) - options.tol) return false;
    }
    return true;
  };

  EquivalenceConstants out;
  out.sample_size = coeffs.size();
  out.tolerance = options.tol;
  bool found_c = false;
  bool found_d = false;
  for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
    if (!found_c && c_ok(*it)) {
      out.c = *it;
      found_c = true;
    }
    if (!found_d && d_ok(*it)) {
      out.d = *it;
      found_d = true;
    }
    if (found_c && found_d) break;
  }
  if (!found_c || !found_d) {
    throw EvaluationError("no grid constant satisfies the comparison on the sample");
  }
  return out;
}

}  // namespace ifms
