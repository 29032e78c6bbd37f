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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ifms/sequence.h"

namespace ifms {
namespace {

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

std::vector<Eigen::VectorXd> random_vectors(std::size_t n, Eigen::Index dim,
                                            std::uint64_t seed, double scale = 3.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<Eigen::VectorXd> out;
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::VectorXd v(dim);
    for (Eigen::Index j = 0; j < dim; ++j) v(j) = u(rng);
    out.push_back(v);
  }
  return out;
}

const std::vector<double> kTimes = {0.1, 0.5, 1.0, 2.0, 10.0};
const Operators kProdMax{TNorm::product(), TConorm::maximum()};

TEST(IFNormTest, StandardValues) {
  const auto n = IFNorm::standard(2, ClassicalMetric::kEuclidean);
  const auto p = n.eval(vec({0.0, 3.0}), TimeParam(1.0));
  EXPECT_DOUBLE_EQ(p.m_deg, 0.25);
  EXPECT_DOUBLE_EQ(p.n_deg, 0.75);
  const auto zero = n.eval(vec({0.0, 0.0}), TimeParam(0.3));
  EXPECT_EQ(zero.m_deg, 1.0);
  EXPECT_EQ(zero.n_deg, 0.0);
  const auto man = IFNorm::standard(2, ClassicalMetric::kManhattan);
  EXPECT_DOUBLE_EQ(man.eval(vec({1.0, -2.0}), TimeParam(1.0)).m_deg, 0.25);
  const auto cheb = IFNorm::standard(2, ClassicalMetric::kChebyshev);
  EXPECT_DOUBLE_EQ(cheb.eval(vec({1.0, -3.0}), TimeParam(1.0)).m_deg, 0.25);
  EXPECT_THROW(n.eval(vec({1.0}), TimeParam(1.0)), PreconditionError);
  EXPECT_THROW(IFNorm::standard(2, ClassicalMetric::kAbsolute), PreconditionError);
}

TEST(IFNormTest, EuclideanProductValues) {
  const auto comp = IFNorm::standard(1, ClassicalMetric::kAbsolute);
  const auto prod = IFNorm::euclidean_product(comp, 2, kProdMax);
  const auto p = prod.eval(vec({3.0, 4.0}), TimeParam(1.0));
  EXPECT_DOUBLE_EQ(p.m_deg, 0.05);
  EXPECT_DOUBLE_EQ(p.n_deg, 0.8);
  EXPECT_LE(p.m_deg + p.n_deg, 1.0);
  EXPECT_TRUE(prod.validated());
  const auto capped = IFNorm::euclidean_product(
      comp, 2, {TNorm::product(), TConorm::capped_sum()});
  EXPECT_FALSE(capped.validated());
  EXPECT_FALSE(capped.validity_note().empty());
}

TEST(IFNormTest, ProductWithMaximumStaysInTriangle) {
  const auto comp = IFNorm::standard(1, ClassicalMetric::kAbsolute);
  for (const TNorm t : {TNorm::product(), TNorm::minimum()}) {
    const auto prod = IFNorm::euclidean_product(comp, 3, {t, TConorm::maximum()});
    for (const auto& x : random_vectors(200, 3, 17)) {
      for (double time : kTimes) {
        const auto p = prod.eval(x, TimeParam(time));
        EXPECT_LE(p.m_deg + p.n_deg, 1.0 + 1e-15);
      }
    }
  }
}

TEST(IFNormTest, ScalingLawExactForPowersOfTwo) {
  const auto comp = IFNorm::standard(1, ClassicalMetric::kAbsolute);
  const std::vector<IFNorm> norms = {
      IFNorm::standard(3, ClassicalMetric::kEuclidean),
      IFNorm::standard(3, ClassicalMetric::kManhattan),
      IFNorm::standard(3, ClassicalMetric::kChebyshev),
      IFNorm::euclidean_product(comp, 3, kProdMax)};
  for (const auto& n : norms) {
    for (const auto& x : random_vectors(40, 3, 3)) {
      for (double alpha : {-4.0, -0.5, 0.25, 2.0, 8.0}) {
        for (double t : kTimes) {
          const auto lhs = n.eval(alpha * x, TimeParam(t));
          const auto rhs = n.eval(x, TimeParam(t / std::abs(alpha)));
          EXPECT_EQ(lhs.m_deg, rhs.m_deg);
          EXPECT_EQ(lhs.n_deg, rhs.n_deg);
        }
      }
    }
  }
}

TEST(IFNormTest, MonotoneInTime) {
  const auto n = IFNorm::standard(2, ClassicalMetric::kEuclidean);
  for (const auto& x : random_vectors(30, 2, 9)) {
    double prev_m = 0.0, prev_n = 1.0;
    for (double t = 0.01; t < 100; t *= 1.7) {
      const auto p = n.eval(x, TimeParam(t));
      EXPECT_GE(p.m_deg, prev_m);
      EXPECT_LE(p.n_deg, prev_n);
      prev_m = p.m_deg;
      prev_n = p.n_deg;
    }
  }
}

TEST(NormAuditTest, BuiltinsAreClean) {
  const auto comp = IFNorm::standard(1, ClassicalMetric::kAbsolute);
  const auto sample = random_vectors(50, 2, 1);
  for (const auto& n : {IFNorm::standard(2, ClassicalMetric::kEuclidean),
                        IFNorm::standard(2, ClassicalMetric::kChebyshev),
                        IFNorm::euclidean_product(comp, 2, kProdMax)}) {
    const auto rep = norm_axiom_audit(n, sample, kTimes);
    EXPECT_TRUE(rep.clean()) << rep.total_violations();
    for (const char* ax : {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l",
                           "m"}) {
      EXPECT_GT(rep.checked.count(ax), 0u) << ax;
    }
  }
  EXPECT_THROW(norm_axiom_audit(IFNorm::standard(2, ClassicalMetric::kEuclidean),
                                std::vector<Eigen::VectorXd>{}, kTimes),
               PreconditionError);
}

TEST(NormAuditTest, CappedSumProductLeavesTriangle) {
  // With S(a, b) = min(1, a + b), Phi + Psi = 1 + (1 - mu_1)(1 - mu_2) > 1
  // whenever both coordinates are nonzero.
  const auto comp = IFNorm::standard(1, ClassicalMetric::kAbsolute);
  const auto capped = IFNorm::euclidean_product(
      comp, 2, {TNorm::product(), TConorm::capped_sum()});
  const auto x = vec({1.0, 1.0});
  const auto p = capped.eval(x, TimeParam(1.0));
  EXPECT_DOUBLE_EQ(p.m_deg, 0.25);
  EXPECT_DOUBLE_EQ(p.n_deg, 1.0);
  const auto rep = norm_axiom_audit(capped, random_vectors(20, 2, 4), kTimes);
  EXPECT_GT(rep.violation_counts.at("a"), 0u);
  EXPECT_GT(rep.checked.at("k"), 0u);
  for (const auto& v : rep.of("a")) EXPECT_GT(v.magnitude, 0.0);
}

TEST(NormAuditTest, TabulatedZeroEntryFlagsIdentity) {
  std::vector<NormTableEntry> table;
  for (double t : {1.0, 2.0}) {
    table.push_back({vec({0.0}), t, 0.9, 0.1});
    table.push_back({vec({1.0}), t, t / (t + 1), 1 / (t + 1)});
  }
  const auto n = IFNorm::tabulated(1, table, kProdMax);
  const std::vector<Eigen::VectorXd> sample = {vec({0.0}), vec({1.0})};
  const auto rep = norm_axiom_audit(n, sample, {1.0, 2.0});
  EXPECT_EQ(rep.violation_counts.at("c"), 2u);
  EXPECT_FALSE(rep.unchecked.empty());
}

TEST(InducedMetricTest, MatchesStandardMetric) {
  const auto n = IFNorm::standard(1, ClassicalMetric::kAbsolute);
  const auto m = induced_metric(n, {vec({0.0}), vec({1.0})});
  const auto p = m.eval(0, 1, TimeParam(1.0));
  EXPECT_DOUBLE_EQ(p.m_deg, 0.5);
  EXPECT_DOUBLE_EQ(p.n_deg, 0.5);
  const auto same = m.eval(1, 1, TimeParam(1.0));
  EXPECT_EQ(same.m_deg, 1.0);
  EXPECT_EQ(same.n_deg, 0.0);
  const auto standard = IFMetric::standard(PointSet::on_line({0.0, 1.0}));
  for (double t : kTimes) {
    EXPECT_DOUBLE_EQ(m.eval(0, 1, TimeParam(t)).m_deg,
                     standard.eval(0, 1, TimeParam(t)).m_deg);
  }
}

TEST(InducedMetricTest, TranslationInvariantAndAuditClean) {
  // Dyadic coordinates keep x - y exact after translation.
  std::vector<Eigen::VectorXd> pts;
  const auto shift = vec({0.5, -1.25});
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> u(-64, 64);
  for (int i = 0; i < 8; ++i) pts.push_back(vec({u(rng) / 8.0, u(rng) / 8.0 + i}));
  const std::size_t base = pts.size();
  for (std::size_t i = 0; i < base; ++i) pts.push_back(pts[i] + shift);
  const auto n = IFNorm::standard(2, ClassicalMetric::kEuclidean);
  const auto m = induced_metric(n, pts);
  for (std::size_t i = 0; i < base; ++i) {
    for (std::size_t j = 0; j < base; ++j) {
      for (double t : kTimes) {
        const auto a = m.eval(i, j, TimeParam(t));
        const auto b = m.eval(i + base, j + base, TimeParam(t));
        EXPECT_EQ(a.m_deg, b.m_deg);
        EXPECT_EQ(a.n_deg, b.n_deg);
        const auto c = m.eval(j, i, TimeParam(t));
        EXPECT_EQ(a.m_deg, c.m_deg);
      }
    }
  }
  std::vector<PointIndex> all(pts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto rep = axiom_audit(m, all, kTimes);
  EXPECT_TRUE(rep.clean());
}

TEST(BoundednessTest, Examples) {
  std::vector<double> r_grid;
  for (int i = 1; i <= 99; ++i) r_grid.push_back(i / 100.0);
  const auto n = IFNorm::standard(1, ClassicalMetric::kAbsolute);

  const std::vector<Eigen::VectorXd> origin = {vec({0.0})};
  const auto z = if_bounded_check(origin, n, r_grid, {1.0, 10.0});
  ASSERT_TRUE(z.bounded);
  EXPECT_DOUBLE_EQ(*z.r, 0.01);
  EXPECT_DOUBLE_EQ(*z.t, 1.0);

  std::vector<Eigen::VectorXd> ints;
  for (int i = -5; i <= 5; ++i) ints.push_back(vec({static_cast<double>(i)}));
  const auto b = if_bounded_check(ints, n, r_grid, {10.0});
  ASSERT_TRUE(b.bounded);
  EXPECT_DOUBLE_EQ(*b.r, 0.34);
  EXPECT_DOUBLE_EQ(*b.t, 10.0);
  // Formula inversion: 10/15 > 1 - r iff r > 1/3.
  for (const auto& x : ints) {
    const auto p = n.eval(x, TimeParam(10.0));
    EXPECT_GT(p.m_deg, 1 - 0.34);
    EXPECT_LT(p.n_deg, 0.34);
  }

  std::vector<Eigen::VectorXd> wide;
  for (int k = 1; k <= 6; ++k) wide.push_back(vec({std::pow(10.0, k)}));
  const auto w = if_bounded_check(wide, n, r_grid, {1.0, 10.0, 100.0});
  EXPECT_FALSE(w.bounded);
  ASSERT_TRUE(w.worst_index.has_value());
  EXPECT_EQ(*w.worst_index, 5u);
  EXPECT_GT(w.worst_deficit, 0.0);

  EXPECT_THROW(if_bounded_check(ints, n, {}, {1.0}), PreconditionError);
}

TEST(EquivalenceTest, FiniteDimensionalNormsAgree) {
  std::vector<TestSequence> family(2);
  for (int i = 1; i <= 120; ++i) {
    family[0].values.push_back(vec({1.0 / i, 1.0 / i}));
    family[1].values.push_back(vec({1.0 + std::pow(0.9, i), -2.0}));
  }
  family[0].limit = vec({0.0, 0.0});
  family[1].limit = vec({1.0, -2.0});
  const auto euc = IFNorm::standard(2, ClassicalMetric::kEuclidean);
  const auto man = IFNorm::standard(2, ClassicalMetric::kManhattan);
  const auto comp = IFNorm::standard(1, ClassicalMetric::kAbsolute);
  const auto prod = IFNorm::euclidean_product(comp, 2, kProdMax);
  const std::vector<double> eps = {0.1, 0.3};
  const std::vector<double> ts = {1.0, 2.0};
  for (const auto& other : {euc, man, prod}) {
    const auto rep = equivalence_diagnostic(euc, other, family, eps, ts);
    EXPECT_EQ(rep.cells.size(), 8u);
    EXPECT_EQ(rep.agreements, rep.cells.size());
    EXPECT_EQ(rep.defects, 0u);
    for (const auto& c : rep.cells) {
      EXPECT_TRUE(c.certified_a);
      EXPECT_TRUE(c.certified_b);
    }
  }
}

TEST(EquivalenceTest, DimensionMismatchRejected) {
  std::vector<TestSequence> family(1);
  family[0].values = {vec({1.0, 0.0}), vec({0.5, 0.0})};
  family[0].limit = vec({0.0, 0.0});
  EXPECT_THROW(equivalence_diagnostic(IFNorm::standard(2, ClassicalMetric::kEuclidean),
                                      IFNorm::standard(3, ClassicalMetric::kEuclidean),
                                      family, {0.1}, {1.0}),
               PreconditionError);
}

TEST(ConstantsTest, SingleBasisVector) {
  const auto n = IFNorm::standard(2, ClassicalMetric::kEuclidean);
  const double step = std::pow(10.0, 1.0 / 200.0);
  Eigen::MatrixXd unit(2, 1);
  unit << 0.6, 0.8;
  const auto one = basis_equivalence_constants(unit, n, kTimes);
  EXPECT_LE(one.c, 1.0 + 1e-9);
  EXPECT_GE(one.c, 1.0 / step);
  EXPECT_LE(one.d, 1.0 + 1e-9);
  EXPECT_GE(one.d, 1.0 / step);
  EXPECT_GT(one.sample_size, 0u);

  Eigen::MatrixXd twice(2, 1);
  twice << 2.0, 0.0;
  const auto two = basis_equivalence_constants(twice, n, kTimes);
  EXPECT_LE(two.c, 2.0 + 1e-9);
  EXPECT_GE(two.c, 2.0 / step);
  EXPECT_LE(two.d, 2.0 + 1e-9);
  EXPECT_GE(two.d, 2.0 / step);
}

TEST(ConstantsTest, InequalitiesHoldOnIndependentSample) {
  Eigen::MatrixXd basis(2, 2);
  basis << 1.0, 1.0, 0.0, 2.0;
  const auto n = IFNorm::standard(2, ClassicalMetric::kEuclidean);
  const auto k = basis_equivalence_constants(basis, n, kTimes);
  ASSERT_GT(k.c, 0.0);
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double a = u(rng);
    const double b = (1.0 - std::abs(a)) * (u(rng) < 0 ? -1.0 : 1.0);
    const Eigen::VectorXd x = a * basis.col(0) + b * basis.col(1);
    for (double t : kTimes) {
      const auto p = n.eval(x, TimeParam(t));
      // Sampled certificate: an unseen beta may exceed the bound only by the
      // sampling gap, so allow a small slack.
      EXPECT_LE(p.m_deg, t / (t + k.c) + 0.05);
      EXPECT_GE(p.n_deg, k.d / (t + k.d) - 0.05);
    }
  }
}

TEST(ConstantsTest, RankDeficientBasisRejected) {
  Eigen::MatrixXd basis(2, 2);
  basis << 1.0, -1.0, 2.0, -2.0;
  const auto n = IFNorm::standard(2, ClassicalMetric::kEuclidean);
  EXPECT_THROW(basis_equivalence_constants(basis, n, kTimes), PreconditionError);
}

}  // namespace
}  // namespace ifms
