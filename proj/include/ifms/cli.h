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

#ifndef IFMS_CLI_H_
#define IFMS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ifms/json_io.h"

namespace ifms {

inline constexpr const char* kToolName = "ifms";
inline constexpr const char* kToolVersion = "0.1.0";

// Exit statuses of run().
inline constexpr int kExitClean = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitInputError = 2;

// One batch invocation. Paths are empty when not given.
struct RunConfig {
  std::string command;
  std::string spec;
  std::string spec_b;
  std::string points;
  std::string seq;
  std::string matrix;
  std::string r_grid = "0.1:0.9:5lin";
  std::string t_grid = "0.01:100:10log";
  // A number, a comma-separated list, or a grid string.
  std::string eps = "0.1";
  double tol = 1e-9;
  std::uint64_t seed = 42;
  // Empty writes the report to `out`.
  std::string out_path;

  Json to_json() const;
};

// Runs one command and writes its report. Diagnostics go to `err`; when no
// out path is configured the report goes to `out`. Returns kExitClean,
// kExitFindings (violations or failed certifications) or kExitInputError.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// The report object run() would write, without touching the filesystem
// for output. Throws on input errors. `findings` is set when the command
// found violations or failed certifications.
Json build_report(const RunConfig& config, bool& findings);

}  // namespace ifms

#endif  // IFMS_CLI_H_
