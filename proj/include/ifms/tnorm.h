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

#ifndef IFMS_TNORM_H_
#define IFMS_TNORM_H_

#include <cstddef>
#include <functional>
#include <string>

#include "ifms/scalars.h"

namespace ifms {

enum class TNormKind { kProduct, kMinimum };

// A continuous t-norm. Only the product and minimum ship; both have closed
// form residual and root solvers.
class TNorm {
 public:
  constexpr TNorm() = default;
  constexpr explicit TNorm(TNormKind kind) : kind_(kind) {}

  static constexpr TNorm product() { return TNorm(TNormKind::kProduct); }
  static constexpr TNorm minimum() { return TNorm(TNormKind::kMinimum); }

  constexpr TNormKind kind() const { return kind_; }

  // Raw evaluation; arguments are assumed to lie in [0,1].
  double operator()(double a, double b) const;

  std::string name() const;

  friend constexpr bool operator==(TNorm, TNorm) = default;

 private:
  TNormKind kind_ = TNormKind::kProduct;
};

enum class TConormKind { kCappedSum, kMaximum, kAssociated };

// A continuous t-conorm: capped sum, maximum, or the De Morgan dual
// 1 - T(1-a, 1-b) of a built-in t-norm.
class TConorm {
 public:
  constexpr TConorm() = default;

  static constexpr TConorm capped_sum() {
    return TConorm(TConormKind::kCappedSum, TNorm());
  }
  static constexpr TConorm maximum() {
    return TConorm(TConormKind::kMaximum, TNorm());
  }
  static constexpr TConorm associated_to(TNorm t) {
    return TConorm(TConormKind::kAssociated, t);
  }

  constexpr TConormKind kind() const { return kind_; }
  // Meaningful only for kAssociated.
  constexpr TNorm dual_of() const { return dual_; }

  double operator()(double a, double b) const;

  std::string name() const;

  friend constexpr bool operator==(TConorm, TConorm) = default;

 private:
  constexpr TConorm(TConormKind kind, TNorm dual) : kind_(kind), dual_(dual) {}

  TConormKind kind_ = TConormKind::kCappedSum;
  TNorm dual_;
};

// The (t-norm, t-conorm) pair every metric and norm is audited against.
struct Operators {
  TNorm tnorm = TNorm::product();
  TConorm tconorm = TConorm::capped_sum();

  friend constexpr bool operator==(const Operators&,
                                   const Operators&) = default;
};

UnitScalar eval_tnorm(TNorm op, UnitScalar a, UnitScalar b);
UnitScalar eval_tconorm(TConorm op, UnitScalar a, UnitScalar b);

TConorm associated_tconorm(TNorm op);

// Left fold of n copies of eps. Throws PreconditionError for n == 0.
UnitScalar iterated_power(TNorm op, UnitScalar eps, std::size_t n);
UnitScalar iterated_power(TConorm op, UnitScalar eps, std::size_t n);

// Residual witnesses. Preconditions 0 < r2 < r1 < 1 (r5 in (0,1) for the
// roots); the returned value always satisfies the defining inequality when
// replayed with the raw operator:
//   solve_residual:       op(r1, r3) >= r2
//   solve_dual_residual:  op(r2, r4) <= r1
//   solve_root:           op(r6, r6) >= r5
//   solve_dual_root:      op(r7, r7) <= r5
//
// Canonical witnesses: product r2/r1 and sqrt(r5); minimum r2 and r5; capped
// sum r1-r2 and r5/2; maximum r2 and r5; associated product
// (r1-r2)/(1-r2) and 1-sqrt(1-r5).
UnitScalar solve_residual(TNorm op, UnitScalar r1, UnitScalar r2);
UnitScalar solve_dual_residual(TConorm op, UnitScalar r1, UnitScalar r2);
UnitScalar solve_root(TNorm op, UnitScalar r5);
UnitScalar solve_dual_root(TConorm op, UnitScalar r5);

// Bisection engines behind the closed forms, usable with any monotone
// operator. `section` must be nondecreasing on [0,1].
//
// bisect_lower_threshold: smallest a (up to the bracketing resolution) with
//   section(a) >= target, nudged upward until the inequality replays.
// bisect_upper_threshold: largest a with section(a) <= target, nudged down.
//
// Iteration stops after 80 halvings or once the bracket is narrower than
// 1e-14.
double bisect_lower_threshold(const std::function<double(double)>& section,
                              double target);
double bisect_upper_threshold(const std::function<double(double)>& section,
                              double target);

UnitScalar solve_residual_bisect(TNorm op, UnitScalar r1, UnitScalar r2);
UnitScalar solve_dual_residual_bisect(TConorm op, UnitScalar r1,
                                      UnitScalar r2);

// Level s in (0,1) used by the three-point chaining arguments, the largest
// canonical value with
//   (1-s) * (1-s) >= 1-r  and  s <> s <= r.
// Built from solve_root / solve_dual_root; r must lie in (0,1).
UnitScalar chaining_level(const Operators& ops, UnitScalar r);

}  // namespace ifms

#endif  // IFMS_TNORM_H_
