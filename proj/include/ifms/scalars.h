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

#ifndef IFMS_SCALARS_H_
#define IFMS_SCALARS_H_

#include <cmath>
#include <compare>
#include <string>

#include "ifms/error.h"

namespace ifms {

// A real number in the closed unit interval.
class UnitScalar {
 public:
  constexpr UnitScalar() = default;
  explicit UnitScalar(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw PreconditionError("unit scalar out of [0,1]: " +
                              std::to_string(value));
    }
  }

  constexpr double value() const { return value_; }
  constexpr operator double() const { return value_; }  // NOLINT

 private:
  double value_ = 0.0;
};

// The positive scale parameter t of every metric and norm evaluation.
class TimeParam {
 public:
  explicit TimeParam(double t) : t_(t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw PreconditionError("time parameter must be finite and > 0, got " +
                              std::to_string(t));
    }
  }

  constexpr double value() const { return t_; }
  constexpr operator double() const { return t_; }  // NOLINT

 private:
  double t_;
};

// Degree of nearness / non-nearness returned by every metric and norm.
struct MembershipPair {
  double m_deg = 1.0;
  double n_deg = 0.0;

  friend bool operator==(const MembershipPair&,
                         const MembershipPair&) = default;
};

}  // namespace ifms

#endif  // IFMS_SCALARS_H_
