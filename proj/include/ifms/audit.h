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

#ifndef IFMS_AUDIT_H_
#define IFMS_AUDIT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ifms {

// Where an axiom failed. Indices are carrier indices for metric audits and
// sample positions for norm audits; unused slots stay empty.
struct Witness {
  std::optional<std::size_t> x;
  std::optional<std::size_t> y;
  std::optional<std::size_t> z;
  std::optional<double> t;
  std::optional<double> s;
  std::optional<double> scale;
};

struct Violation {
  std::string axiom;
  Witness witness;
  // Amount by which the inequality fails (>= 0).
  double magnitude = 0.0;
};

struct AuditOptions {
  double tol = 1e-9;
  // Violations beyond this many per axiom are counted but not stored.
  std::size_t max_witnesses_per_axiom = 64;
  // Continuity probe: |F(t (1 + step)) - F(t)| must stay below jump.
  double continuity_step = 1e-9;
  double continuity_jump = 1e-6;
};

struct AuditReport {
  // Grouped by axiom label, each group in lexicographic witness order.
  std::vector<Violation> violations;
  std::map<std::string, std::size_t> checked;
  std::map<std::string, std::size_t> violation_counts;
  // Axioms the audit could not probe on this input, with the reason.
  std::map<std::string, std::string> unchecked;

  std::size_t total_violations() const;
  bool clean() const { return total_violations() == 0; }
  std::vector<Violation> of(std::string_view axiom) const;
};

// Accumulates checks and violations for one audit run.
class AuditRecorder {
 public:
  explicit AuditRecorder(const AuditOptions& options) : options_(options) {}

  void checked(const std::string& axiom) { ++report_.checked[axiom]; }
  // Tolerance check: violated when `excess` exceeds options.tol. The stored
  // magnitude is the raw excess.
  void check(const std::string& axiom, double excess, const Witness& w);
  // Exact check, no tolerance.
  void check_exact(const std::string& axiom, bool violated, double magnitude,
                   const Witness& w);
  void unchecked(const std::string& axiom, std::string reason);

  AuditReport finish() &&;

 private:
  AuditOptions options_;
  AuditReport report_;
  std::map<std::string, std::vector<Violation>> stored_;
};

}  // namespace ifms

#endif  // IFMS_AUDIT_H_
