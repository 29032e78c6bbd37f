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

#ifndef IFMS_LINEAR_OPERATOR_H_
#define IFMS_LINEAR_OPERATOR_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ifms/if_norm.h"

namespace ifms {

// Linear map between two normed spaces; matrix is codomain dim x domain dim.
struct OperatorSpec {
  OperatorSpec(Eigen::MatrixXd matrix, IFNorm domain, IFNorm codomain);

  Eigen::MatrixXd matrix;
  IFNorm domain;
  IFNorm codomain;
};

// The caller's sample without zero vectors, followed by +-e_j and +- the
// top right singular vector of the matrix.
std::vector<Eigen::VectorXd> augmented_sample(
    const OperatorSpec& op, std::span<const Eigen::VectorXd> sample);

// Default h, k grid: 50 log points per decade over [1e-3, 1e3].
std::vector<double> default_bound_grid();

struct BoundSearchResult {
  bool certified = false;
  // Smallest grid values with mu'(Ax, t) >= mu(hx, t) and
  // nu'(Ax, t) <= nu(kx, t) for every sampled x and every t, compared
  // exactly. One constant serves the whole t grid.
  std::optional<double> h;
  std::optional<double> k;
  // When a side fails: the sample position and time with the largest
  // deficit at the largest grid value.
  std::optional<std::size_t> binding_h_sample;
  std::optional<double> binding_h_t;
  std::optional<std::size_t> binding_k_sample;
  std::optional<double> binding_k_t;
  std::vector<Eigen::VectorXd> sample;

  static constexpr const char* kLabel = "sample-certified";
};

BoundSearchResult fuzzy_bounded_search(const OperatorSpec& op,
                                       const std::vector<double>& h_grid,
                                       const std::vector<double>& k_grid,
                                       std::span<const Eigen::VectorXd> sample,
                                       const std::vector<double>& t_grid);

struct SandwichGrids {
  std::vector<double> a, b, a_prime, b_prime;
};

struct SandwichReport {
  double condition = 0.0;
  // mu(ax) <= mu'(Ax) <= mu(bx) and nu(a'x) <= nu'(Ax) <= nu(b'x).
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> a_prime;
  std::optional<double> b_prime;
  bool certified = false;
  // Replays on y over the sample, inverse applied numerically, tolerance
  // 1e-12:
  //   mu'(y/b, t) <= mu(A^-1 y, t)
  //   nu'(y/b', t) <= nu(A^-1 y, t)   (lower bound on nu(A^-1 y))
  //   nu(A^-1 y, t) <= nu'(y/a', t)   (the bound that makes A^-1 bounded)
  bool inverse_mu = false;
  bool inverse_nu_lower = false;
  bool inverse_nu_upper = false;
  std::size_t sample_size = 0;

  static constexpr const char* kLabel = "sample-certified";
};

// Requires a square matrix; throws PreconditionError when it is singular
// (sigma_min / sigma_max < 1e-10).
SandwichReport topological_isomorphism_check(
    const OperatorSpec& op, const SandwichGrids& grids,
    std::span<const Eigen::VectorXd> sample, const std::vector<double>& t_grid);

// mu''(x, t) = mu(x, t) * mu'(Ax, t), nu''(x, t) = nu(x, t) <> nu'(Ax, t).
// Built for any conorm; IFNorm::validated() is false unless it is max.
IFNorm graph_norm(const OperatorSpec& op, const Operators& ops);

}  // namespace ifms

#endif  // IFMS_LINEAR_OPERATOR_H_
