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

#include "ifms/point_set.h"

#include <cmath>

#include "ifms/error.h"

namespace ifms {

std::string to_string(ClassicalMetric m) {
  switch (m) {
    case ClassicalMetric::kEuclidean:
      return "euclidean";
    case ClassicalMetric::kManhattan:
      return "manhattan";
    case ClassicalMetric::kChebyshev:
      return "chebyshev";
    case ClassicalMetric::kAbsolute:
      return "abs";
  }
  return {};
}

ClassicalMetric parse_classical_metric(const std::string& name) {
  if (name == "euclidean") return ClassicalMetric::kEuclidean;
  if (name == "manhattan") return ClassicalMetric::kManhattan;
  if (name == "chebyshev") return ClassicalMetric::kChebyshev;
  if (name == "abs" || name == "absolute" || name == "absolute-difference") {
    return ClassicalMetric::kAbsolute;
  }
  throw SchemaError("unknown classical metric '" + name + "'");
}

double classical_distance(ClassicalMetric metric, const Eigen::VectorXd& a,
                          const Eigen::VectorXd& b) {
  if (a.size() != b.size()) {
    throw PreconditionError("distance between vectors of unequal dimension");
  }
  switch (metric) {
    case ClassicalMetric::kEuclidean:
      return (a - b).norm();
    case ClassicalMetric::kManhattan:
      return (a - b).lpNorm<1>();
    case ClassicalMetric::kChebyshev:
      return (a - b).lpNorm<Eigen::Infinity>();
    case ClassicalMetric::kAbsolute:
      if (a.size() != 1) {
        throw PreconditionError("absolute-difference metric needs dimension 1");
      }
      return std::abs(a[0] - b[0]);
  }
  return 0.0;
}

PointSet PointSet::from_vectors(std::vector<Eigen::VectorXd> points,
                                ClassicalMetric metric) {
  if (points.empty()) throw PreconditionError("empty point set");
  const auto dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim || dim == 0) {
      throw PreconditionError("point set has ragged or empty coordinates");
    }
    if (!p.allFinite()) throw PreconditionError("non-finite coordinate");
  }
  if (metric == ClassicalMetric::kAbsolute && dim != 1) {
    throw PreconditionError("absolute-difference metric needs dimension 1");
  }
  PointSet s;
  s.points_ = std::move(points);
  s.metric_ = metric;
  s.rebuild_distances();
  return s;
}

PointSet PointSet::from_distance_matrix(
    const std::vector<std::vector<double>>& matrix) {
  constexpr double kTol = 1e-12;
  const std::size_t n = matrix.size();
  if (n == 0) throw PreconditionError("empty distance matrix");
  for (const auto& row : matrix) {
    if (row.size() != n) throw PreconditionError("distance matrix not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 0.0) {
      throw PreconditionError("distance matrix diagonal must be zero");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double d = matrix[i][j];
      if (!std::isfinite(d) || d < 0.0) {
        throw PreconditionError("distance matrix entries must be finite, >= 0");
      }
      if (i != j && d == 0.0) {
        throw PreconditionError("distinct indices " + std::to_string(i) +
                                "," + std::to_string(j) + " at distance 0");
      }
      if (std::abs(d - matrix[j][i]) > kTol) {
        throw PreconditionError("distance matrix not symmetric");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (matrix[i][k] > matrix[i][j] + matrix[j][k] + kTol) {
          throw PreconditionError(
              "distance matrix violates the triangle inequality at (" +
              std::to_string(i) + "," + std::to_string(j) + "," +
              std::to_string(k) + ")");
        }
      }
    }
  }
  PointSet s;
  s.size_ = n;
  s.dist_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s.dist_[i * n + j] = matrix[i][j];
  }
  return s;
}

PointSet PointSet::on_line(const std::vector<double>& values) {
  std::vector<Eigen::VectorXd> pts;
  pts.reserve(values.size());
  for (double v : values) pts.push_back(Eigen::VectorXd::Constant(1, v));
  return from_vectors(std::move(pts), ClassicalMetric::kAbsolute);
}

std::size_t PointSet::dimension() const {
  return points_.empty() ? 0 : static_cast<std::size_t>(points_[0].size());
}

std::optional<PointIndex> PointSet::find(const Eigen::VectorXd& coords) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() == coords.size() && points_[i] == coords) return i;
  }
  return std::nullopt;
}

PointIndex PointSet::register_point(const Eigen::VectorXd& coords) {
  return register_points({coords}).front();
}

std::vector<PointIndex> PointSet::register_points(
    const std::vector<Eigen::VectorXd>& coords) {
  if (!metric_) {
    throw PreconditionError("cannot register coordinates in a matrix set");
  }
  std::vector<PointIndex> out;
  out.reserve(coords.size());
  bool grew = false;
  for (const auto& c : coords) {
    if (auto hit = find(c)) {
      out.push_back(*hit);
      continue;
    }
    if (static_cast<std::size_t>(c.size()) != dimension() || !c.allFinite()) {
      throw PreconditionError("registered point has the wrong dimension");
    }
    points_.push_back(c);
    out.push_back(points_.size() - 1);
    grew = true;
  }
  if (grew) rebuild_distances();
  return out;
}

void PointSet::check_index(PointIndex i) const {
  if (i >= size_) {
    throw PreconditionError("point index " + std::to_string(i) +
                            " out of range (size " + std::to_string(size_) +
                            ")");
  }
}

void PointSet::rebuild_distances() {
  const std::size_t n = points_.size();
  size_ = n;
  dist_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = classical_distance(*metric_, points_[i], points_[j]);
      if (d == 0.0) {
        throw PreconditionError("points " + std::to_string(i) + " and " +
                                std::to_string(j) + " coincide");
      }
      dist_[i * n + j] = d;
      dist_[j * n + i] = d;
    }
  }
}

}  // namespace ifms
