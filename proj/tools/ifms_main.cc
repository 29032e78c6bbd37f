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

#include <iostream>

#include <CLI11.hpp>

#include "ifms/cli.h"

int main(int argc, char** argv) {
  ifms::RunConfig config;
  CLI::App app{"Intuitionistic fuzzy metric and norm diagnostics"};
  app.add_option("command", config.command,
                 "audit | net | cauchy | norm-audit | equivalence | op-bound | "
                 "graph-norm")
      ->required();
  app.add_option("--spec", config.spec, "metric or norm spec (JSON)");
  app.add_option("--spec-b", config.spec_b, "second norm spec (equivalence)");
  app.add_option("--points", config.points, "point set or vector sample (JSON)");
  app.add_option("--seq", config.seq, "sequence or sequence family (JSON)");
  app.add_option("--matrix", config.matrix, "operator spec (JSON)");
  app.add_option("--r-grid", config.r_grid, "radius grid start:stop:count[log|lin]")
      ->capture_default_str();
  app.add_option("--t-grid", config.t_grid, "time grid start:stop:count[log|lin]")
      ->capture_default_str();
  app.add_option("--eps", config.eps, "eps value, list or grid")->capture_default_str();
  app.add_option("--tol", config.tol, "audit tolerance")->capture_default_str();
  app.add_option("--seed", config.seed, "seed for generated samples")
      ->capture_default_str();
  app.add_option("--out", config.out_path, "report path (stdout if omitted)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ifms::kExitInputError;
  }
  return ifms::run(config, std::cout, std::cerr);
}
