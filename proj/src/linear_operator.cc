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

#include "ifms/linear_operator.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "ifms/grid.h"

namespace ifms {
namespace {

std::vector<double> sorted_grid(const std::vector<double>& grid,
                                 const char* name) {
  if (grid.empty()) throw PreconditionError(std::string(name) + " grid is empty");
  std::vector<double> out = grid;
  for (double v : out) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw PreconditionError(std::string(name) + " grid values must be positive");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Evaluations of the codomain side and any scaled domain side, cached per
// (sample, t).
struct Sides {
  std::vector<MembershipPair> image;  // mu'(Ax, t), nu'(Ax, t)
  std::size_t nt = 0;
};

Sides image_side(const OperatorSpec& op, const std::vector<Eigen::VectorXd>& xs,
                 const std::vector<double>& ts) {
  Sides s;
  s.nt = ts.size();
  for (const auto& x : xs) {
    const Eigen::VectorXd ax = op.matrix * x;
    for (double t : ts) s.image.push_back(op.codomain.eval(ax, TimeParam(t)));
  }
  return s;
}

// Worst violation of `holds` over the sample at constant c, or nullopt when
// it holds everywhere. `gap` returns the amount by which it fails.
struct Binding {
  std::size_t sample;
  double t;
  double gap;
};

std::optional<Binding> check_constant(
    const OperatorSpec& op, const std::vector<Eigen::VectorXd>& xs,
    const std::vector<double>& ts, const Sides& sides, double c,
    const std::function<double(const MembershipPair& image,
                               const MembershipPair& scaled)>& gap) {
  std::optional<Binding> worst;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Eigen::VectorXd cx = c * xs[i];
    for (std::size_t g = 0; g < ts.size(); ++g) {
      const auto scaled = op.domain.eval(cx, TimeParam(ts[g]));
      const double d = gap(sides.image[i * sides.nt + g], scaled);
      if (d > 0.0 && (!worst || d > worst->gap)) worst = Binding{i, ts[g], d};
    }
  }
  return worst;
}

// First grid value (in the given order) at which `gap` never fires.
std::optional<double> first_valid(
    const OperatorSpec& op, const std::vector<Eigen::VectorXd>& xs,
    const std::vector<double>& ts, const Sides& sides,
    const std::vector<double>& order,
    const std::function<double(const MembershipPair&, const MembershipPair&)>&
        gap) {
  for (double c : order) {
    if (!check_constant(op, xs, ts, sides, c, gap)) return c;
  }
  return std::nullopt;
}

}  // namespace

OperatorSpec::OperatorSpec(Eigen::MatrixXd matrix_in, IFNorm domain_in,
                           IFNorm codomain_in)
    : matrix(std::move(matrix_in)),
      domain(std::move(domain_in)),
      codomain(std::move(codomain_in)) {
  if (static_cast<std::size_t>(matrix.cols()) != domain.dimension() ||
      static_cast<std::size_t>(matrix.rows()) != codomain.dimension()) {
    throw PreconditionError(
        "operator matrix is " + std::to_string(matrix.rows()) + "x" +
        std::to_string(matrix.cols()) + " but the norms need " +
        std::to_string(codomain.dimension()) + "x" +
        std::to_string(domain.dimension()));
  }
}

std::vector<Eigen::VectorXd> augmented_sample(
    const OperatorSpec& op, std::span<const Eigen::VectorXd> sample) {
  const Eigen::Index n = op.matrix.cols();
  std::vector<Eigen::VectorXd> out;
  for (const auto& x : sample) {
    if (x.size() != n) {
      throw PreconditionError("sample vector does not match the domain dimension");
    }
    if (!x.isZero(0.0)) out.push_back(x);
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    for (double sign : {1.0, -1.0}) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
      e(j) = sign;
      out.push_back(e);
    }
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(op.matrix, Eigen::ComputeThinV);
  if (svd.matrixV().cols() > 0) {
    const Eigen::VectorXd v = svd.matrixV().col(0);
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

std::vector<double> default_bound_grid() { return decade_grid(-3, 3, 50); }

BoundSearchResult fuzzy_bounded_search(const OperatorSpec& op,
                                       const std::vector<double>& h_grid,
                                       const std::vector<double>& k_grid,
                                       std::span<const Eigen::VectorXd> sample,
                                       const std::vector<double>& t_grid) {
  const auto hs = sorted_grid(h_grid, "h");
  const auto ks = sorted_grid(k_grid, "k");
  require_time_grid(t_grid);
  BoundSearchResult result;
  result.sample = augmented_sample(op, sample);
  const Sides sides = image_side(op, result.sample, t_grid);

  auto h_gap = [](const MembershipPair& image, const MembershipPair& scaled) {
    return scaled.m_deg - image.m_deg;
  };
  auto k_gap = [](const MembershipPair& image, const MembershipPair& scaled) {
    return image.n_deg - scaled.n_deg;
  };
  result.h = first_valid(op, result.sample, t_grid, sides, hs, h_gap);
  result.k = first_valid(op, result.sample, t_grid, sides, ks, k_gap);
  if (!result.h) {
    const auto b = check_constant(op, result.sample, t_grid, sides, hs.back(), h_gap);
    result.binding_h_sample = b->sample;
    result.binding_h_t = b->t;
  }
  if (!result.k) {
    const auto b = check_constant(op, result.sample, t_grid, sides, ks.back(), k_gap);
    result.binding_k_sample = b->sample;
    result.binding_k_t = b->t;
  }
  result.certified = result.h.has_value() && result.k.has_value();
  return result;
}

SandwichReport topological_isomorphism_check(
    const OperatorSpec& op, const SandwichGrids& grids,
    std::span<const Eigen::VectorXd> sample, const std::vector<double>& t_grid) {
  if (op.matrix.rows() != op.matrix.cols()) {
    throw PreconditionError("topological isomorphism check needs a square matrix");
  }
  require_time_grid(t_grid);
  const auto as = sorted_grid(grids.a, "a");
  const auto bs = sorted_grid(grids.b, "b");
  const auto aps = sorted_grid(grids.a_prime, "a'");
  const auto bps = sorted_grid(grids.b_prime, "b'");

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(op.matrix);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (!(smax > 0.0) || smin / smax < 1e-10) {
    throw PreconditionError("matrix is singular: the operator is not onto");
  }
  SandwichReport report;
  report.condition = smax / smin;

  const auto xs = augmented_sample(op, sample);
  report.sample_size = xs.size();
  const Sides sides = image_side(op, xs, t_grid);

  // mu(ax) <= mu'(Ax): smallest a.
  report.a = first_valid(op, xs, t_grid, sides, as,
                         [](const MembershipPair& im, const MembershipPair& sc) {
                           return sc.m_deg - im.m_deg;
                         });
  // mu'(Ax) <= mu(bx): largest b.
  report.b = first_valid(op, xs, t_grid, sides, {bs.rbegin(), bs.rend()},
                         [](const MembershipPair& im, const MembershipPair& sc) {
                           return im.m_deg - sc.m_deg;
                         });
  // nu(a'x) <= nu'(Ax): largest a'.
  report.a_prime = first_valid(
      op, xs, t_grid, sides, {aps.rbegin(), aps.rend()},
      [](const MembershipPair& im, const MembershipPair& sc) {
        return sc.n_deg - im.n_deg;
      });
  // nu'(Ax) <= nu(b'x): smallest b'.
  report.b_prime = first_valid(
      op, xs, t_grid, sides, bps,
      [](const MembershipPair& im, const MembershipPair& sc) {
        return im.n_deg - sc.n_deg;
      });
  report.certified = report.a && report.b && report.a_prime && report.b_prime;
  if (!report.certified) return report;

  constexpr double kReplayTol = 1e-12;
  const auto lu = op.matrix.partialPivLu();
  report.inverse_mu = report.inverse_nu_lower = report.inverse_nu_upper = true;
  for (const auto& y : xs) {
    const Eigen::VectorXd inv_y = lu.solve(y);
    for (double t : t_grid) {
      const TimeParam tp(t);
      const auto pre = op.domain.eval(inv_y, tp);
      const auto by = op.codomain.eval(y / *report.b, tp);
      const auto bpy = op.codomain.eval(y / *report.b_prime, tp);
      const auto apy = op.codomain.eval(y / *report.a_prime, tp);
      if (by.m_deg > pre.m_deg + kReplayTol) report.inverse_mu = false;
      if (bpy.n_deg > pre.n_deg + kReplayTol) report.inverse_nu_lower = false;
      if (pre.n_deg > apy.n_deg + kReplayTol) report.inverse_nu_upper = false;
    }
  }
  return report;
}

IFNorm graph_norm(const OperatorSpec& op, const Operators& ops) {
  return IFNorm::graph(op.domain, op.matrix, op.codomain, ops);
}

}  // namespace ifms
