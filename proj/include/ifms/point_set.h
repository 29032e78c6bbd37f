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

#ifndef IFMS_POINT_SET_H_
#define IFMS_POINT_SET_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ifms {

using PointIndex = std::size_t;

enum class ClassicalMetric { kEuclidean, kManhattan, kChebyshev, kAbsolute };

std::string to_string(ClassicalMetric m);
ClassicalMetric parse_classical_metric(const std::string& name);

// Classical distance between two coordinate vectors. kAbsolute requires
// dimension 1.
double classical_distance(ClassicalMetric metric, const Eigen::VectorXd& a,
                          const Eigen::VectorXd& b);

// A finite classical metric space (X, d): either coordinate vectors with a
// metric tag, or an explicit distance matrix. Distances are precomputed.
//
// Point identity is index identity: two indices at distance zero are rejected
// at construction.
class PointSet {
 public:
  // Throws PreconditionError on empty input, ragged dimensions, non-finite
  // coordinates, or coincident points.
  static PointSet from_vectors(std::vector<Eigen::VectorXd> points,
                               ClassicalMetric metric);

  // Throws PreconditionError unless the matrix is square, symmetric within
  // 1e-12, has a zero diagonal, positive off-diagonal entries, and satisfies
  // the triangle inequality (within 1e-12) on every triple.
  static PointSet from_distance_matrix(
      const std::vector<std::vector<double>>& matrix);

  // Convenience for real lines with the absolute-difference metric.
  static PointSet on_line(const std::vector<double>& values);

  std::size_t size() const { return size_; }
  double distance(PointIndex i, PointIndex j) const {
    return dist_[i * size_ + j];
  }

  bool has_coordinates() const { return metric_.has_value(); }
  // Only for vector-backed sets.
  const std::vector<Eigen::VectorXd>& coordinates() const { return points_; }
  std::optional<ClassicalMetric> metric() const { return metric_; }
  std::size_t dimension() const;

  // Index of the point with exactly these coordinates, if present.
  std::optional<PointIndex> find(const Eigen::VectorXd& coords) const;

  // Returns the index of `coords`, appending it when absent. Only for
  // vector-backed sets.
  PointIndex register_point(const Eigen::VectorXd& coords);
  // Batch form; distances are rebuilt once.
  std::vector<PointIndex> register_points(
      const std::vector<Eigen::VectorXd>& coords);

  void check_index(PointIndex i) const;

 private:
  PointSet() = default;
  void rebuild_distances();

  std::size_t size_ = 0;
  std::vector<double> dist_;
  std::vector<Eigen::VectorXd> points_;
  std::optional<ClassicalMetric> metric_;
};

}  // namespace ifms

#endif  // IFMS_POINT_SET_H_
