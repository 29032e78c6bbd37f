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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ifms/grid.h"
#include "ifms/sequence.h"

namespace ifms {
namespace {

const std::vector<double> kTimes = {0.1, 1.0, 10.0};
const Operators kProdMax{TNorm::product(), TConorm::maximum()};

std::vector<Eigen::VectorXd> random_vectors(std::size_t n, Eigen::Index dim,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Eigen::VectorXd> out;
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::VectorXd v(dim);
    for (Eigen::Index j = 0; j < dim; ++j) v(j) = u(rng);
    out.push_back(v);
  }
  return out;
}

OperatorSpec diagonal_op(std::vector<double> diag, ClassicalMetric norm) {
  const auto dim = static_cast<Eigen::Index>(diag.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  const auto n = IFNorm::standard(diag.size(), norm);
  return OperatorSpec(m, n, n);
}

TEST(OperatorSpecTest, DimensionChecks) {
  const auto n2 = IFNorm::standard(2, ClassicalMetric::kEuclidean);
  const auto n3 = IFNorm::standard(3, ClassicalMetric::kEuclidean);
  EXPECT_NO_THROW(OperatorSpec(Eigen::MatrixXd::Zero(3, 2), n2, n3));
  EXPECT_THROW(OperatorSpec(Eigen::MatrixXd::Zero(2, 3), n2, n3), PreconditionError);
}

TEST(AugmentedSampleTest, ContainsAxesAndDropsZero) {
  const auto op = diagonal_op({2.0, 3.0}, ClassicalMetric::kEuclidean);
  const std::vector<Eigen::VectorXd> sample = {Eigen::VectorXd::Zero(2)};
  const auto xs = augmented_sample(op, sample);
  for (const auto& x : xs) EXPECT_GT(x.norm(), 0.0);
  for (int j = 0; j < 2; ++j) {
    for (double sign : {1.0, -1.0}) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(2);
      e(j) = sign;
      EXPECT_TRUE(std::any_of(xs.begin(), xs.end(),
                              [&](const Eigen::VectorXd& x) { return x == e; }));
    }
  }
}

TEST(FuzzyBoundedTest, Examples) {
  const auto grid = default_bound_grid();
  const auto id = diagonal_op({1.0, 1.0}, ClassicalMetric::kEuclidean);
  const auto r1 = fuzzy_bounded_search(id, grid, grid, random_vectors(20, 2, 1), kTimes);
  ASSERT_TRUE(r1.certified);
  EXPECT_DOUBLE_EQ(*r1.h, 1.0);
  EXPECT_DOUBLE_EQ(*r1.k, 1.0);

  const std::vector<double> coarse = {0.5, 1.0, 1.5, 2.0, 2.5, 4.0};
  const auto twice = diagonal_op({2.0}, ClassicalMetric::kAbsolute);
  std::vector<Eigen::VectorXd> reals;
  for (double x : {-3.0, -0.5, 0.25, 1.0, 7.0}) reals.push_back(Eigen::VectorXd::Constant(1, x));
  const auto r2 = fuzzy_bounded_search(twice, coarse, coarse, reals, kTimes);
  ASSERT_TRUE(r2.certified);
  EXPECT_DOUBLE_EQ(*r2.h, 2.0);
  EXPECT_DOUBLE_EQ(*r2.k, 2.0);

  const auto d23 = diagonal_op({2.0, 3.0}, ClassicalMetric::kEuclidean);
  const auto r3 = fuzzy_bounded_search(d23, grid, grid, random_vectors(20, 2, 2), kTimes);
  ASSERT_TRUE(r3.certified);
  const double step = std::pow(10.0, 1.0 / 50.0);
  EXPECT_GE(*r3.h, 3.0 * (1 - 1e-12));
  EXPECT_LE(*r3.h, 3.0 * step);
  EXPECT_GE(*r3.k, 3.0 * (1 - 1e-12));
  EXPECT_LE(*r3.k, 3.0 * step);
}

TEST(FuzzyBoundedTest, FailureReportsBinding) {
  const auto big = diagonal_op({5000.0}, ClassicalMetric::kAbsolute);
  std::vector<Eigen::VectorXd> reals = {Eigen::VectorXd::Constant(1, 1.0)};
  const auto grid = default_bound_grid();
  const auto r = fuzzy_bounded_search(big, grid, grid, reals, kTimes);
  EXPECT_FALSE(r.certified);
  EXPECT_FALSE(r.h.has_value());
  EXPECT_TRUE(r.binding_h_sample.has_value());
  EXPECT_TRUE(r.binding_h_t.has_value());
}

TEST(FuzzyBoundedTest, WitnessReplayAndMonotoneSoundness) {
  const auto grid = default_bound_grid();
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::MatrixXd m(2, 2);
    m << u(rng), u(rng), u(rng), u(rng);
    const auto n = IFNorm::standard(2, ClassicalMetric::kEuclidean);
    const OperatorSpec op(m, n, n);
    const auto r = fuzzy_bounded_search(op, grid, grid, random_vectors(15, 2, trial), kTimes);
    ASSERT_TRUE(r.certified);
    for (double h : grid) {
      const bool valid_h = h >= *r.h;
      for (const auto& x : r.sample) {
        for (double t : kTimes) {
          const auto img = n.eval(m * x, TimeParam(t));
          const auto scaled = n.eval(h * x, TimeParam(t));
          if (valid_h) {
            EXPECT_GE(img.m_deg, scaled.m_deg);
            EXPECT_LE(img.n_deg, scaled.n_deg);
          }
        }
      }
    }
    // The selected h is the smallest valid grid value.
    const auto it = std::find(grid.begin(), grid.end(), *r.h);
    ASSERT_NE(it, grid.end());
    if (it != grid.begin()) {
      const double below = *(it - 1);
      bool fails = false;
      for (const auto& x : r.sample) {
        for (double t : kTimes) {
          fails = fails || n.eval(m * x, TimeParam(t)).m_deg <
                               n.eval(below * x, TimeParam(t)).m_deg;
        }
      }
      EXPECT_TRUE(fails);
    }
  }
}

TEST(FuzzyBoundedTest, ImageOfConvergentPrefixConverges) {
  const auto op = diagonal_op({2.0, -1.0}, ClassicalMetric::kEuclidean);
  const auto grid = default_bound_grid();
  const auto r = fuzzy_bounded_search(op, grid, grid, random_vectors(10, 2, 3), kTimes);
  ASSERT_TRUE(r.certified);
  const double h = *r.h;
  std::vector<Eigen::VectorXd> xs, ys;
  Eigen::VectorXd limit(2);
  limit << 1.0, 2.0;
  for (int i = 1; i <= 80; ++i) {
    Eigen::VectorXd x(2);
    x << 1.0 + 1.0 / i, 2.0 - std::pow(0.9, i);
    xs.push_back(x);
    ys.push_back(op.matrix * x);
  }
  xs.push_back(limit);
  ys.push_back(op.matrix * limit);
  std::vector<PointIndex> idx(80);
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const auto dom = induced_metric(op.domain, xs);
  const auto cod = induced_metric(op.codomain, ys);
  for (double eps : {0.1, 0.3}) {
    for (double t : {1.0, 5.0}) {
      const auto pre = converges_prefix(SequencePrefix(dom, idx), 80, eps, TimeParam(t / h));
      const auto img = converges_prefix(SequencePrefix(cod, idx), 80, eps, TimeParam(t));
      if (pre.certified) {
        EXPECT_TRUE(img.certified);
        EXPECT_LE(img.n0, pre.n0);
      }
    }
  }
}

TEST(SandwichTest, Examples) {
  SandwichGrids g;
  g.a = g.b = g.a_prime = g.b_prime = {0.25, 0.5, 1.0, 2.0, 4.0};
  const auto id = diagonal_op({1.0, 1.0}, ClassicalMetric::kEuclidean);
  const auto r1 = topological_isomorphism_check(id, g, random_vectors(10, 2, 4), kTimes);
  ASSERT_TRUE(r1.certified);
  EXPECT_EQ(*r1.a, 1.0);
  EXPECT_EQ(*r1.b, 1.0);
  EXPECT_EQ(*r1.a_prime, 1.0);
  EXPECT_EQ(*r1.b_prime, 1.0);
  EXPECT_TRUE(r1.inverse_mu);
  EXPECT_TRUE(r1.inverse_nu_lower);
  EXPECT_TRUE(r1.inverse_nu_upper);
  EXPECT_NEAR(r1.condition, 1.0, 1e-12);

  const auto twice = diagonal_op({2.0}, ClassicalMetric::kAbsolute);
  std::vector<Eigen::VectorXd> reals;
  for (double x : {-3.0, 0.5, 2.0}) reals.push_back(Eigen::VectorXd::Constant(1, x));
  const auto r2 = topological_isomorphism_check(twice, g, reals, kTimes);
  ASSERT_TRUE(r2.certified);
  EXPECT_EQ(*r2.a, 2.0);
  EXPECT_EQ(*r2.b, 2.0);
  EXPECT_EQ(*r2.a_prime, 2.0);
  EXPECT_EQ(*r2.b_prime, 2.0);
  EXPECT_TRUE(r2.inverse_mu);
}

TEST(SandwichTest, RejectsSingularAndNonSquare) {
  SandwichGrids g;
  g.a = g.b = g.a_prime = g.b_prime = default_bound_grid();
  const auto n = IFNorm::standard(2, ClassicalMetric::kEuclidean);
  Eigen::MatrixXd sing(2, 2);
  sing << 1.0, 0.0, 1.0, 0.0;
  EXPECT_THROW(topological_isomorphism_check(OperatorSpec(sing, n, n), g,
                                             random_vectors(5, 2, 1), kTimes),
               PreconditionError);
  const auto n3 = IFNorm::standard(3, ClassicalMetric::kEuclidean);
  EXPECT_THROW(topological_isomorphism_check(OperatorSpec(Eigen::MatrixXd::Ones(3, 2), n, n3),
                                             g, random_vectors(5, 2, 1), kTimes),
               PreconditionError);
}

TEST(GraphNormTest, IdentitySquaresMembership) {
  const auto id = diagonal_op({1.0, 1.0}, ClassicalMetric::kEuclidean);
  const auto g = graph_norm(id, kProdMax);
  EXPECT_TRUE(g.validated());
  for (const auto& x : random_vectors(30, 2, 5)) {
    for (double t : kTimes) {
      const auto base = id.domain.eval(x, TimeParam(t));
      const auto p = g.eval(x, TimeParam(t));
      EXPECT_DOUBLE_EQ(p.m_deg, base.m_deg * base.m_deg);
      EXPECT_DOUBLE_EQ(p.n_deg, base.n_deg);
    }
  }
  const auto zero = g.eval(Eigen::VectorXd::Zero(2), TimeParam(1.0));
  EXPECT_EQ(zero.m_deg, 1.0);
  EXPECT_EQ(zero.n_deg, 0.0);
}

TEST(GraphNormTest, DominationAndAudit) {
  Eigen::MatrixXd m(2, 2);
  m << 1.0, 2.0, -0.5, 3.0;
  const auto n = IFNorm::standard(2, ClassicalMetric::kEuclidean);
  const auto cod = IFNorm::standard(2, ClassicalMetric::kManhattan);
  const OperatorSpec op(m, n, cod);
  for (const Operators ops : {kProdMax, Operators{TNorm::minimum(), TConorm::maximum()}}) {
    const auto g = graph_norm(op, ops);
    const auto sample = random_vectors(50, 2, 6);
    for (const auto& x : sample) {
      for (double t : kTimes) {
        const auto p = g.eval(x, TimeParam(t));
        const auto dom = n.eval(x, TimeParam(t));
        const auto img = cod.eval(m * x, TimeParam(t));
        EXPECT_LE(p.m_deg, std::min(dom.m_deg, img.m_deg));
        EXPECT_GE(p.n_deg, img.n_deg);
      }
    }
    const auto rep = norm_axiom_audit(g, sample, {0.1, 0.5, 1.0, 2.0, 10.0});
    EXPECT_TRUE(rep.clean()) << rep.total_violations();
  }
  const auto flagged = graph_norm(op, {TNorm::product(), TConorm::capped_sum()});
  EXPECT_FALSE(flagged.validated());
  EXPECT_THROW(graph_norm(OperatorSpec(Eigen::MatrixXd::Ones(1, 2), n,
                                       IFNorm::standard(1, ClassicalMetric::kAbsolute)),
                          kProdMax)
                   .eval(Eigen::VectorXd::Zero(3), TimeParam(1.0)),
               PreconditionError);
}

}  // namespace
}  // namespace ifms
