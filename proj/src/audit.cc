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

#include "ifms/audit.h"

#include <cmath>

namespace ifms {

std::size_t AuditReport::total_violations() const {
  std::size_t total = 0;
  for (const auto& [axiom, count] : violation_counts) total += count;
  return total;
}

std::vector<Violation> AuditReport::of(std::string_view axiom) const {
  std::vector<Violation> out;
  for (const auto& v : violations) {
    if (v.axiom == axiom) out.push_back(v);
  }
  return out;
}

void AuditRecorder::check(const std::string& axiom, double excess,
                          const Witness& w) {
  check_exact(axiom, excess > options_.tol || std::isnan(excess), excess, w);
}

void AuditRecorder::check_exact(const std::string& axiom, bool violated,
                                double magnitude, const Witness& w) {
  ++report_.checked[axiom];
  if (!violated) return;
  ++report_.violation_counts[axiom];
  auto& bucket = stored_[axiom];
  if (bucket.size() < options_.max_witnesses_per_axiom) {
    bucket.push_back(Violation{axiom, w, magnitude});
  }
}

void AuditRecorder::unchecked(const std::string& axiom, std::string reason) {
  report_.unchecked[axiom] = std::move(reason);
}

AuditReport AuditRecorder::finish() && {
  for (auto& [axiom, bucket] : stored_) {
    for (auto& v : bucket) report_.violations.push_back(std::move(v));
  }
  return std::move(report_);
}

}  // namespace ifms
