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

#include "ifms/json_io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "ifms/error.h"

namespace ifms {
namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

double number(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number()) {
    throw SchemaError(std::string("field '") + key + "' must be a number");
  }
  return v.get<double>();
}

std::size_t count_field(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw SchemaError(std::string("field '") + key +
                      "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::string text(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_string()) {
    throw SchemaError(std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_array()) {
    throw SchemaError(std::string("field '") + key + "' must be an array");
  }
  return v;
}

std::vector<double> numbers(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw SchemaError("expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<PointIndex> indices(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of indices");
  std::vector<PointIndex> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw SchemaError("expected an array of nonnegative indices");
    }
    out.push_back(v.get<PointIndex>());
  }
  return out;
}

void dump_into(const Json& v, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += ": ";
        dump_into(it.value(), depth + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump_into(v[i], depth + 1, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = v.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      return;
    }
    default:
      out += v.dump();
  }
}

PointSet points_from_values(const std::vector<double>& values) {
  return PointSet::on_line(values);
}

std::vector<double> line_values(const PointSet& points) {
  if (!points.has_coordinates() || points.dimension() != 1) {
    throw SchemaError("reciprocal_augmented needs one-dimensional points");
  }
  std::vector<double> out;
  for (const auto& c : points.coordinates()) out.push_back(c(0));
  return out;
}

MetricTable parse_table(const Json& spec) {
  MetricTable table;
  table.times = numbers(array_field(spec, "times"));
  const Json& m = array_field(spec, "m");
  const Json& n = array_field(spec, "n");
  if (m.size() != table.times.size() || n.size() != table.times.size()) {
    throw SchemaError("tabulated: need one m and one n matrix per time");
  }
  auto matrices = [](const Json& j) {
    std::vector<std::vector<std::vector<double>>> out;
    for (const auto& mat : j) {
      std::vector<std::vector<double>> rows;
      if (!mat.is_array()) throw SchemaError("tabulated: matrix expected");
      for (const auto& row : mat) rows.push_back(numbers(row));
      out.push_back(std::move(rows));
    }
    return out;
  };
  table.m = matrices(m);
  table.n = matrices(n);
  table.size = table.m.empty() ? 0 : table.m.front().size();
  return table;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open input file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw SchemaError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

std::string canonical_dump(const Json& value) {
  std::string out;
  dump_into(value, 0, out);
  out += "\n";
  return out;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw SchemaError("cannot write output file: " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw SchemaError("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw SchemaError("cannot move report into place: " + path.string());
  }
}

TNorm parse_tnorm(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "product") return TNorm::product();
    if (s == "min") return TNorm::minimum();
  }
  throw SchemaError("unknown t-norm: " + j.dump());
}

TConorm parse_tconorm(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "capped_sum") return TConorm::capped_sum();
    if (s == "max") return TConorm::maximum();
  }
  if (j.is_object() && j.size() == 1 && j.contains("associated_to")) {
    return TConorm::associated_to(parse_tnorm(j.at("associated_to")));
  }
  throw SchemaError("unknown t-conorm: " + j.dump());
}

Operators parse_operators(const Json& j, Operators fallback) {
  Operators ops = fallback;
  if (j.contains("tnorm")) ops.tnorm = parse_tnorm(j.at("tnorm"));
  if (j.contains("tconorm")) ops.tconorm = parse_tconorm(j.at("tconorm"));
  return ops;
}

Json operators_to_json(const Operators& ops) {
  Json tconorm = ops.tconorm.name();
  if (ops.tconorm.kind() == TConormKind::kAssociated) {
    tconorm = Json{{"associated_to", ops.tconorm.dual_of().name()}};
  }
  return Json{{"tnorm", ops.tnorm.name()}, {"tconorm", tconorm}};
}

Eigen::VectorXd parse_vector(const Json& j) {
  if (j.is_number()) return Eigen::VectorXd::Constant(1, j.get<double>());
  const auto xs = numbers(j);
  if (xs.empty()) throw SchemaError("empty vector");
  return Eigen::Map<const Eigen::VectorXd>(xs.data(),
                                           static_cast<Eigen::Index>(xs.size()));
}

Eigen::MatrixXd parse_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) throw SchemaError("matrix must be a nonempty array of rows");
  const std::size_t cols = numbers(j.front()).size();
  if (cols == 0) throw SchemaError("matrix rows must be nonempty");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(j.size()),
                    static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto row = numbers(j[r]);
    if (row.size() != cols) throw SchemaError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row[c];
    }
  }
  return m;
}

Json vector_to_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

PointSet parse_point_set(const Json& j) {
  if (!j.is_object()) throw SchemaError("point set must be an object");
  if (j.contains("distance_matrix")) {
    const Json& rows = array_field(j, "distance_matrix");
    std::vector<std::vector<double>> matrix;
    for (const auto& row : rows) matrix.push_back(numbers(row));
    return PointSet::from_distance_matrix(matrix);
  }
  const Json& vs = array_field(j, "vectors");
  std::vector<Eigen::VectorXd> points;
  for (const auto& v : vs) points.push_back(parse_vector(v));
  const std::string tag = j.contains("metric") ? text(j, "metric")
                          : (!points.empty() && points.front().size() == 1)
                              ? "absolute-difference"
                              : "euclidean";
  return PointSet::from_vectors(std::move(points), parse_classical_metric(tag));
}

std::optional<PointSet> vector_carrier(const Json& spec,
                                       const std::optional<PointSet>& points) {
  const std::string type = text(spec, "type");
  if (type == "standard" || type == "parametric" || type == "norm_induced") {
    if (points) return points;
    return parse_point_set(member(spec, "points"));
  }
  if (type == "reciprocal_augmented") {
    if (points) return points;
    return points_from_values(numbers(array_field(spec, "values")));
  }
  return std::nullopt;
}

IFMetric parse_metric(const Json& spec, const std::optional<PointSet>& points,
                      Validation validation) {
  if (!spec.is_object()) throw SchemaError("metric spec must be an object");
  const std::string type = text(spec, "type");
  if (type == "standard") {
    return IFMetric::standard(*vector_carrier(spec, points),
                              parse_operators(spec));
  }
  if (type == "parametric") {
    ParametricWeights w;
    w.nearness_weight = number(spec, "h");
    w.non_nearness_weight = number(spec, "k");
    w.distance_weight = number(spec, "m");
    w.time_exponent = number(spec, "n");
    return IFMetric::parametric(w, *vector_carrier(spec, points),
                                parse_operators(spec), validation);
  }
  if (type == "bounded") {
    return IFMetric::bounded(number(spec, "lambda"), number(spec, "eta"),
                             parse_metric(member(spec, "inner"), points,
                                          validation));
  }
  if (type == "product") {
    std::vector<IFMetric> factors;
    for (const auto& f : array_field(spec, "factors")) {
      factors.push_back(parse_metric(f, std::nullopt, validation));
    }
    std::vector<std::vector<PointIndex>> tuples;
    for (const auto& t : array_field(spec, "tuples")) tuples.push_back(indices(t));
    const std::size_t window =
        spec.contains("tail_window") ? count_field(spec, "tail_window") : 16;
    return IFMetric::product(std::move(factors), std::move(tuples),
                             number(spec, "eps"), count_field(spec, "K"),
                             parse_operators(spec), window);
  }
  if (type == "subspace_graph") {
    const TNorm tnorm =
        spec.contains("tnorm") ? parse_tnorm(spec.at("tnorm")) : TNorm::product();
    return IFMetric::subspace_graph(
        parse_metric(member(spec, "ambient"), points, validation),
        indices(array_field(spec, "complement")), number(spec, "s"), tnorm);
  }
  if (type == "norm_induced") {
    const PointSet carrier = *vector_carrier(spec, points);
    if (!carrier.has_coordinates()) {
      throw SchemaError("norm_induced needs vector points");
    }
    return IFMetric::norm_induced(parse_norm(member(spec, "norm")),
                                  carrier.coordinates());
  }
  if (type == "reciprocal_augmented") {
    return IFMetric::reciprocal_augmented(
        line_values(*vector_carrier(spec, points)),
        parse_operators(spec, {TNorm::minimum(), TConorm::maximum()}));
  }
  if (type == "tabulated") {
    return IFMetric::tabulated(parse_table(spec), parse_operators(spec));
  }
  throw SchemaError("unknown metric type: " + type);
}

IFNorm parse_norm(const Json& spec) {
  if (!spec.is_object()) throw SchemaError("norm spec must be an object");
  const std::string type = text(spec, "type");
  if (type == "standard") {
    const std::size_t dim = count_field(spec, "dimension");
    const std::string tag = spec.contains("norm") ? text(spec, "norm")
                            : dim == 1            ? "abs"
                                                  : "euclidean";
    return IFNorm::standard(
        dim, parse_classical_metric(tag),
        parse_operators(spec));
  }
  if (type == "euclidean_product") {
    return IFNorm::euclidean_product(
        parse_norm(member(spec, "component")), count_field(spec, "dimension"),
        parse_operators(spec, {TNorm::product(), TConorm::maximum()}));
  }
  if (type == "graph") {
    return IFNorm::graph(
        parse_norm(member(spec, "base")), parse_matrix(member(spec, "matrix")),
        parse_norm(member(spec, "codomain")),
        parse_operators(spec, {TNorm::product(), TConorm::maximum()}));
  }
  if (type == "tabulated") {
    std::vector<NormTableEntry> entries;
    for (const auto& e : array_field(spec, "entries")) {
      entries.push_back({parse_vector(member(e, "x")), number(e, "t"),
                         number(e, "mu"), number(e, "nu")});
    }
    return IFNorm::tabulated(count_field(spec, "dimension"), std::move(entries),
                             parse_operators(spec));
  }
  throw SchemaError("unknown norm type: " + type);
}

OperatorSpec parse_operator(const Json& spec) {
  if (!spec.is_object()) throw SchemaError("operator spec must be an object");
  return OperatorSpec(parse_matrix(member(spec, "matrix")),
                      parse_norm(member(spec, "domain_norm")),
                      parse_norm(member(spec, "codomain_norm")));
}

}  // namespace ifms
