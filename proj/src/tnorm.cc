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

#include "ifms/tnorm.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ifms {
namespace {

constexpr int kBisectIterations = 80;
constexpr double kBisectWidth = 1e-14;

double up(double x) { return std::nextafter(x, 2.0); }
double down(double x) { return std::nextafter(x, -1.0); }

void require_open_pair(double r1, double r2) {
  if (!(r2 > 0.0 && r2 < r1 && r1 < 1.0)) {
    throw PreconditionError("residual solver requires 0 < r2 < r1 < 1");
  }
}

void require_open(double r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw PreconditionError("root solver requires an argument in (0,1)");
  }
}

}  // namespace

double TNorm::operator()(double a, double b) const {
  switch (kind_) {
    case TNormKind::kProduct:
      return a * b;
    case TNormKind::kMinimum:
      return std::min(a, b);
  }
  return 0.0;
}

std::string TNorm::name() const {
  return kind_ == TNormKind::kProduct ? "product" : "min";
}

double TConorm::operator()(double a, double b) const {
  switch (kind_) {
    case TConormKind::kCappedSum:
      return std::min(a + b, 1.0);
    case TConormKind::kMaximum:
      return std::max(a, b);
    case TConormKind::kAssociated: {
      // Rounding in 1 - a can push the dual below max(a, b); the clamp and
      // the zero short-circuit keep the identity law and the bound exact.
      if (b == 0.0) return a;
      if (a == 0.0) return b;
      return std::max({a, b, 1.0 - dual_(1.0 - a, 1.0 - b)});
    }
  }
  return 0.0;
}

std::string TConorm::name() const {
  switch (kind_) {
    case TConormKind::kCappedSum:
      return "capped_sum";
    case TConormKind::kMaximum:
      return "max";
    case TConormKind::kAssociated:
      return "associated_to:" + dual_.name();
  }
  return {};
}

UnitScalar eval_tnorm(TNorm op, UnitScalar a, UnitScalar b) {
  return UnitScalar(op(a, b));
}

UnitScalar eval_tconorm(TConorm op, UnitScalar a, UnitScalar b) {
  return UnitScalar(op(a, b));
}

TConorm associated_tconorm(TNorm op) { return TConorm::associated_to(op); }

UnitScalar iterated_power(TNorm op, UnitScalar eps, std::size_t n) {
  if (n == 0) throw PreconditionError("iterated_power needs n >= 1");
  double acc = eps;
  for (std::size_t i = 1; i < n; ++i) acc = op(acc, eps);
  return UnitScalar(acc);
}

UnitScalar iterated_power(TConorm op, UnitScalar eps, std::size_t n) {
  if (n == 0) throw PreconditionError("iterated_power needs n >= 1");
  double acc = eps;
  for (std::size_t i = 1; i < n; ++i) acc = op(acc, eps);
  return UnitScalar(acc);
}

double bisect_lower_threshold(const std::function<double(double)>& section,
                              double target) {
  if (section(1.0) < target) {
    throw PreconditionError("bisection: target above the section's range");
  }
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < kBisectIterations && hi - lo >= kBisectWidth; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (section(mid) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  while (section(hi) < target) hi = up(hi);
  return hi;
}

double bisect_upper_threshold(const std::function<double(double)>& section,
                              double target) {
  if (section(0.0) > target) {
    throw PreconditionError("bisection: target below the section's range");
  }
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < kBisectIterations && hi - lo >= kBisectWidth; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (section(mid) <= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  while (lo > 0.0 && section(lo) > target) lo = down(lo);
  return lo;
}

UnitScalar solve_residual(TNorm op, UnitScalar r1, UnitScalar r2) {
  require_open_pair(r1, r2);
  double r3 = 0.0;
  switch (op.kind()) {
    case TNormKind::kProduct:
      r3 = r2 / r1;
      break;
    case TNormKind::kMinimum:
      r3 = r2;
      break;
  }
  while (op(r1, r3) < r2) r3 = up(r3);
  return UnitScalar(r3);
}

UnitScalar solve_dual_residual(TConorm op, UnitScalar r1, UnitScalar r2) {
  require_open_pair(r1, r2);
  double r4 = 0.0;
  switch (op.kind()) {
    case TConormKind::kCappedSum:
      r4 = r1 - r2;
      break;
    case TConormKind::kMaximum:
      r4 = r2;
      break;
    case TConormKind::kAssociated:
      r4 = op.dual_of().kind() == TNormKind::kProduct
               ? (r1 - r2) / (1.0 - r2)
               : static_cast<double>(r2);
      break;
  }
  while (op(r2, r4) > r1) r4 = down(r4);
  return UnitScalar(r4);
}

UnitScalar solve_root(TNorm op, UnitScalar r5) {
  require_open(r5);
  double r6 = op.kind() == TNormKind::kProduct ? std::sqrt(r5.value())
                                               : r5.value();
  while (op(r6, r6) < r5) r6 = up(r6);
  return UnitScalar(r6);
}

UnitScalar solve_dual_root(TConorm op, UnitScalar r5) {
  require_open(r5);
  double r7 = 0.0;
  switch (op.kind()) {
    case TConormKind::kCappedSum:
      r7 = 0.5 * r5;
      break;
    case TConormKind::kMaximum:
      r7 = r5;
      break;
    case TConormKind::kAssociated:
      r7 = op.dual_of().kind() == TNormKind::kProduct
               ? 1.0 - std::sqrt(1.0 - r5)
               : static_cast<double>(r5);
      break;
  }
  while (op(r7, r7) > r5) r7 = down(r7);
  return UnitScalar(r7);
}

UnitScalar solve_residual_bisect(TNorm op, UnitScalar r1, UnitScalar r2) {
  require_open_pair(r1, r2);
  const double a = r1;
  return UnitScalar(
      bisect_lower_threshold([&](double x) { return op(a, x); }, r2));
}

UnitScalar solve_dual_residual_bisect(TConorm op, UnitScalar r1,
                                      UnitScalar r2) {
  require_open_pair(r1, r2);
  const double b = r2;
  return UnitScalar(
      bisect_upper_threshold([&](double x) { return op(b, x); }, r1));
}

UnitScalar chaining_level(const Operators& ops, UnitScalar r) {
  require_open(r);
  const double near = solve_root(ops.tnorm, UnitScalar(1.0 - r));
  double s = std::min(1.0 - near, solve_dual_root(ops.tconorm, r).value());
  while (s > 0.0 && (ops.tnorm(1.0 - s, 1.0 - s) < 1.0 - r ||
                     ops.tconorm(s, s) > r)) {
    s = down(s);
  }
  if (!(s > 0.0)) throw PreconditionError("no positive chaining level");
  return UnitScalar(s);
}

}  // namespace ifms
