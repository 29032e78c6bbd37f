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

#ifndef IFMS_JSON_IO_H_
#define IFMS_JSON_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "ifms/if_metric.h"
#include "ifms/if_norm.h"
#include "ifms/linear_operator.h"
#include "ifms/point_set.h"
#include "ifms/tnorm.h"

namespace ifms {

using Json = nlohmann::json;

// Reads and parses a JSON file. Throws SchemaError (with the path) when the
// file is missing or malformed.
Json read_json_file(const std::filesystem::path& path);

// Keys sorted, floats with 17 significant digits, two-space indent, trailing
// newline. Non-finite numbers become null.
std::string canonical_dump(const Json& value);

// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents);

// "product" | "min"; t-conorms "capped_sum" | "max" | {"associated_to": T}.
TNorm parse_tnorm(const Json& j);
TConorm parse_tconorm(const Json& j);
// Reads optional "tnorm" / "tconorm" members of `j`, falling back to
// `fallback` for absent keys.
Operators parse_operators(const Json& j, Operators fallback = {});
Json operators_to_json(const Operators& ops);

// {"vectors": [[...], ...], "metric": tag} or {"distance_matrix": [[...]]}.
PointSet parse_point_set(const Json& j);

Eigen::VectorXd parse_vector(const Json& j);
Eigen::MatrixXd parse_matrix(const Json& j);
Json vector_to_json(const Eigen::VectorXd& v);

// Builds a metric from its spec. `points`, when given, replaces the spec's
// own "points" member of the top-level spec (and the "values" of a
// reciprocal_augmented spec, read from its one-dimensional coordinates).
// `validation` applies to parametric specs.
IFMetric parse_metric(const Json& spec,
                      const std::optional<PointSet>& points = std::nullopt,
                      Validation validation = Validation::kValidate);

// The carrier a top-level spec evaluates on, when it is vector-backed
// (standard, parametric, reciprocal_augmented, norm_induced).
std::optional<PointSet> vector_carrier(const Json& spec,
                                       const std::optional<PointSet>& points);

IFNorm parse_norm(const Json& spec);

// {"matrix": [[...]], "domain_norm": {...}, "codomain_norm": {...}}.
OperatorSpec parse_operator(const Json& spec);

}  // namespace ifms

#endif  // IFMS_JSON_IO_H_
