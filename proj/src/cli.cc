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

#include "ifms/cli.h"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "ifms/error.h"
#include "ifms/grid.h"
#include "ifms/precompact.h"
#include "ifms/sequence.h"

namespace ifms {
namespace {

constexpr std::size_t kRandomNormSample = 50;
constexpr std::size_t kRandomOperatorSample = 20;

Json optional_json(const std::optional<std::size_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json optional_json(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json witness_json(const Witness& w) {
  Json j = Json::object();
  if (w.x) j["x"] = *w.x;
  if (w.y) j["y"] = *w.y;
  if (w.z) j["z"] = *w.z;
  if (w.t) j["t"] = *w.t;
  if (w.s) j["s"] = *w.s;
  if (w.scale) j["scale"] = *w.scale;
  return j;
}

Json audit_json(const AuditReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"axiom", v.axiom},
                          {"witness", witness_json(v.witness)},
                          {"magnitude", v.magnitude}});
  }
  return {{"violations", violations},
          {"checked", r.checked},
          {"violation_counts", r.violation_counts},
          {"unchecked", r.unchecked},
          {"total_violations", r.total_violations()}};
}

Json prefix_json(const PrefixReport& r) {
  Json j = {{"status", r.certified ? "certified" : "failed"},
            {"n0", r.n0},
            {"prefix_len", r.prefix_len},
            {"label", PrefixReport::kLabel}};
  if (r.worst_first) {
    if (r.worst_second) {
      j["worst_pair"] = {*r.worst_first, *r.worst_second};
    } else {
      j["worst_element"] = *r.worst_first;
    }
    j["deficit"] = r.deficit;
  }
  return j;
}

Json net_json(const NetReport& r) {
  return {{"centers", r.centers},
          {"size", r.size()},
          {"r", r.r},
          {"t", r.t},
          {"all_covered", r.all_covered()}};
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  if (text.find(':') != std::string::npos) return parse_grid(text).values();
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw SchemaError(std::string("malformed ") + what + ": '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw SchemaError(std::string("empty ") + what);
  return out;
}

const std::string& require_path(const std::string& path, const char* flag) {
  if (path.empty()) throw SchemaError(std::string("missing required option ") + flag);
  return path;
}

std::vector<Eigen::VectorXd> vectors_from_file(const std::string& path) {
  const PointSet ps = parse_point_set(read_json_file(path));
  if (!ps.has_coordinates()) throw SchemaError("--points must list vectors here");
  return ps.coordinates();
}

std::vector<Eigen::VectorXd> random_sample(std::size_t count, std::size_t dim,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Eigen::VectorXd> out;
  for (std::size_t i = 0; i < count; ++i) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(dim));
    for (auto& x : v) x = u(rng);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Eigen::VectorXd> sample_or_random(const RunConfig& c, std::size_t count,
                                              std::size_t dim) {
  return c.points.empty() ? random_sample(count, dim, c.seed)
                          : vectors_from_file(c.points);
}

Json vectors_json(const std::vector<Eigen::VectorXd>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

std::optional<PointSet> points_override(const RunConfig& c) {
  if (c.points.empty()) return std::nullopt;
  return parse_point_set(read_json_file(c.points));
}

std::vector<PointIndex> all_points(const IFMetric& m) {
  std::vector<PointIndex> v(m.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

AuditOptions audit_options(const RunConfig& c) {
  AuditOptions opts;
  opts.tol = c.tol;
  return opts;
}

Json cmd_audit(const RunConfig& c, bool& findings) {
  const Json spec = read_json_file(require_path(c.spec, "--spec"));
  const IFMetric metric =
      parse_metric(spec, points_override(c), Validation::kUnchecked);
  const auto grid = parse_grid(c.t_grid).values();
  const auto sample = all_points(metric);
  const AuditReport rep = axiom_audit(metric, sample, grid, audit_options(c));
  findings = !rep.clean();
  return {{"metric", to_string(metric.kind())},
          {"operators", operators_to_json(metric.ops())},
          {"sample_size", sample.size()},
          {"t_grid", grid},
          {"audit", audit_json(rep)}};
}

Json cmd_net(const RunConfig& c, bool& findings) {
  const Json spec = read_json_file(require_path(c.spec, "--spec"));
  const IFMetric metric = parse_metric(spec, points_override(c));
  const auto set = all_points(metric);
  Json runs = Json::array();
  for (double r : parse_grid(c.r_grid).values()) {
    for (double t : parse_grid(c.t_grid).values()) {
      const auto greedy = greedy_net(metric, set, r, TimeParam(t));
      const auto sep = separated_subset(metric, set, r, TimeParam(t));
      Json cell = {{"r", r},
                   {"t", t},
                   {"greedy", net_json(greedy)},
                   {"separated", {{"selected", sep.selected},
                                  {"size", sep.selected.size()}}}};
      if (set.size() <= kExactNetLimit) {
        cell["exact"] = net_json(exact_min_net(metric, set, r, TimeParam(t)));
      } else {
        cell["exact"] = nullptr;
      }
      findings = findings || !greedy.all_covered();
      runs.push_back(std::move(cell));
    }
  }
  return {{"metric", to_string(metric.kind())},
          {"set_size", set.size()},
          {"exact_limit", kExactNetLimit},
          {"runs", runs}};
}

struct LoadedSequence {
  IFMetric metric;
  std::vector<PointIndex> points;
  std::optional<PointIndex> limit;
  std::vector<std::size_t> subsequence;
};

LoadedSequence load_sequence(const RunConfig& c) {
  const Json spec = read_json_file(require_path(c.spec, "--spec"));
  const Json seq = read_json_file(require_path(c.seq, "--seq"));
  if (!seq.is_object()) throw SchemaError("sequence file must be an object");
  std::optional<PointSet> override = points_override(c);
  std::vector<PointIndex> points;
  std::optional<PointIndex> limit;
  if (seq.contains("values")) {
    std::optional<PointSet> carrier = vector_carrier(spec, override);
    if (!carrier) {
      throw SchemaError("sequence values need a vector-backed metric carrier");
    }
    std::vector<Eigen::VectorXd> values;
    if (!seq.at("values").is_array()) throw SchemaError("'values' must be an array");
    for (const auto& v : seq.at("values")) values.push_back(parse_vector(v));
    points = carrier->register_points(values);
    if (seq.contains("limit")) {
      limit = carrier->register_point(parse_vector(seq.at("limit")));
    }
    override = std::move(carrier);
  } else if (seq.contains("indices")) {
    for (const auto& v : seq.at("indices")) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw SchemaError("'indices' must hold nonnegative integers");
      }
      points.push_back(v.get<PointIndex>());
    }
    if (seq.contains("limit")) {
      if (!seq.at("limit").is_number_integer()) {
        throw SchemaError("'limit' must be an index alongside 'indices'");
      }
      limit = seq.at("limit").get<PointIndex>();
    }
  } else {
    throw SchemaError("sequence file needs 'indices' or 'values'");
  }
  std::vector<std::size_t> sub;
  if (seq.contains("subsequence")) {
    for (const auto& v : seq.at("subsequence")) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw SchemaError("'subsequence' must hold nonnegative positions");
      }
      sub.push_back(v.get<std::size_t>());
    }
  }
  IFMetric metric = parse_metric(spec, override);
  if (limit) metric.check_index(*limit);
  return {std::move(metric), std::move(points), limit, std::move(sub)};
}

Json cmd_cauchy(const RunConfig& c, bool& findings) {
  const LoadedSequence loaded = load_sequence(c);
  const SequencePrefix seq(loaded.metric, loaded.points);
  Json runs = Json::array();
  for (double eps : parse_list(c.eps, "eps")) {
    for (double t : parse_grid(c.t_grid).values()) {
      const auto cauchy = cauchy_prefix(seq, eps, TimeParam(t));
      Json cell = {{"eps", eps}, {"t", t}, {"cauchy", prefix_json(cauchy)}};
      findings = findings || !cauchy.certified;
      if (loaded.limit) {
        const auto conv = converges_prefix(seq, *loaded.limit, eps, TimeParam(t));
        cell["convergence"] = prefix_json(conv);
        findings = findings || !conv.certified;
        if (!loaded.subsequence.empty()) {
          const auto cl = cluster_convergence_check(seq, loaded.subsequence,
                                                    *loaded.limit, eps, TimeParam(t));
          cell["cluster"] = {{"status", to_string(cl.status)},
                             {"level", cl.level},
                             {"cauchy", prefix_json(cl.cauchy)},
                             {"subsequence", prefix_json(cl.subsequence)},
                             {"conclusion", prefix_json(cl.conclusion)},
                             {"subsequence_reaches_tail", cl.subsequence_reaches_tail}};
          findings = findings || cl.status == ImplicationStatus::kCounterexample;
        }
      }
      runs.push_back(std::move(cell));
    }
  }
  return {{"metric", to_string(loaded.metric.kind())},
          {"prefix_len", loaded.points.size()},
          {"limit", optional_json(loaded.limit)},
          {"runs", runs}};
}

Json cmd_norm_audit(const RunConfig& c, bool& findings) {
  const IFNorm norm = parse_norm(read_json_file(require_path(c.spec, "--spec")));
  const auto sample = sample_or_random(c, kRandomNormSample, norm.dimension());
  const auto grid = parse_grid(c.t_grid).values();
  NormAuditOptions opts;
  opts.base = audit_options(c);
  const AuditReport rep = norm_axiom_audit(norm, sample, grid, opts);
  findings = !rep.clean();
  return {{"norm", to_string(norm.kind())},
          {"operators", operators_to_json(norm.ops())},
          {"validated", norm.validated()},
          {"validity_note", norm.validity_note()},
          {"sample_size", sample.size()},
          {"sample_source", c.points.empty() ? "random" : "file"},
          {"t_grid", grid},
          {"limit_scale", opts.limit_scale},
          {"limit_tol", opts.limit_tol},
          {"audit", audit_json(rep)}};
}

Json cmd_equivalence(const RunConfig& c, bool& findings) {
  const IFNorm a = parse_norm(read_json_file(require_path(c.spec, "--spec")));
  const IFNorm b = parse_norm(read_json_file(require_path(c.spec_b, "--spec-b")));
  const Json fam = read_json_file(require_path(c.seq, "--seq"));
  if (!fam.is_object() || !fam.contains("sequences") || !fam.at("sequences").is_array()) {
    throw SchemaError("equivalence --seq needs a 'sequences' array");
  }
  std::vector<TestSequence> family;
  for (const auto& s : fam.at("sequences")) {
    if (!s.is_object() || !s.contains("values") || !s.contains("limit")) {
      throw SchemaError("each sequence needs 'values' and 'limit'");
    }
    TestSequence ts;
    for (const auto& v : s.at("values")) ts.values.push_back(parse_vector(v));
    ts.limit = parse_vector(s.at("limit"));
    family.push_back(std::move(ts));
  }
  const auto eps = parse_list(c.eps, "eps");
  const auto grid = parse_grid(c.t_grid).values();
  const auto rep = equivalence_diagnostic(a, b, family, eps, grid);
  Json cells = Json::array();
  for (const auto& cell : rep.cells) {
    cells.push_back({{"sequence", cell.sequence},
                     {"eps", cell.eps},
                     {"t", cell.t},
                     {"certified_a", cell.certified_a},
                     {"certified_b", cell.certified_b},
                     {"n0_a", cell.n0_a},
                     {"n0_b", cell.n0_b},
                     {"agree", cell.agree},
                     {"defect", cell.defect}});
  }
  findings = rep.defects > 0;
  return {{"norm_a", to_string(a.kind())},
          {"norm_b", to_string(b.kind())},
          {"cells", cells},
          {"agreements", rep.agreements},
          {"disagreements", rep.disagreements},
          {"defects", rep.defects},
          {"label", PrefixReport::kLabel}};
}

Json cmd_op_bound(const RunConfig& c, bool& findings) {
  const Json spec = read_json_file(require_path(c.matrix, "--matrix"));
  const OperatorSpec op = parse_operator(spec);
  const auto sample = sample_or_random(c, kRandomOperatorSample, op.domain.dimension());
  const auto grid = parse_grid(c.t_grid).values();
  const auto bounds = default_bound_grid();
  const auto r = fuzzy_bounded_search(op, bounds, bounds, sample, grid);
  Json bound = {{"certified", r.certified},
                {"h", optional_json(r.h)},
                {"k", optional_json(r.k)},
                {"binding_h_sample", optional_json(r.binding_h_sample)},
                {"binding_h_t", optional_json(r.binding_h_t)},
                {"binding_k_sample", optional_json(r.binding_k_sample)},
                {"binding_k_t", optional_json(r.binding_k_t)},
                {"sample", vectors_json(r.sample)},
                {"uniform_in_t", true},
                {"label", BoundSearchResult::kLabel}};
  findings = !r.certified;
  Json report = {{"bound", bound},
                 {"bound_grid", "decade 1e-3..1e3, 50 per decade"},
                 {"t_grid", grid}};
  if (op.matrix.rows() == op.matrix.cols()) {
    SandwichGrids g{bounds, bounds, bounds, bounds};
    try {
      const auto s = topological_isomorphism_check(op, g, sample, grid);
      report["sandwich"] = {{"condition", s.condition},
                            {"a", optional_json(s.a)},
                            {"b", optional_json(s.b)},
                            {"a_prime", optional_json(s.a_prime)},
                            {"b_prime", optional_json(s.b_prime)},
                            {"certified", s.certified},
                            {"inverse_mu", s.inverse_mu},
                            {"inverse_nu_lower", s.inverse_nu_lower},
                            {"inverse_nu_upper", s.inverse_nu_upper},
                            {"sample_size", s.sample_size},
                            {"label", SandwichReport::kLabel}};
    } catch (const PreconditionError& e) {
      report["sandwich"] = {{"skipped", e.what()}};
    }
  } else {
    report["sandwich"] = {{"skipped", "matrix is not square"}};
  }
  return report;
}

Json cmd_graph_norm(const RunConfig& c, bool& findings) {
  const Json spec = read_json_file(require_path(c.matrix, "--matrix"));
  const OperatorSpec op = parse_operator(spec);
  const Operators ops = parse_operators(spec, {TNorm::product(), TConorm::maximum()});
  const IFNorm g = graph_norm(op, ops);
  const auto sample = sample_or_random(c, kRandomNormSample, op.domain.dimension());
  const auto grid = parse_grid(c.t_grid).values();
  NormAuditOptions opts;
  opts.base = audit_options(c);
  const AuditReport rep = norm_axiom_audit(g, sample, grid, opts);
  findings = !rep.clean();
  return {{"operators", operators_to_json(ops)},
          {"validated", g.validated()},
          {"validity_note", g.validity_note()},
          {"sample_size", sample.size()},
          {"sample_source", c.points.empty() ? "random" : "file"},
          {"t_grid", grid},
          {"audit", audit_json(rep)}};
}

using Command = std::function<Json(const RunConfig&, bool&)>;

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table = {
      {"audit", cmd_audit},           {"net", cmd_net},
      {"cauchy", cmd_cauchy},         {"norm-audit", cmd_norm_audit},
      {"equivalence", cmd_equivalence}, {"op-bound", cmd_op_bound},
      {"graph-norm", cmd_graph_norm}};
  return table;
}

}  // namespace

Json RunConfig::to_json() const {
  return {{"command", command}, {"spec", spec},     {"spec_b", spec_b},
          {"points", points},   {"seq", seq},       {"matrix", matrix},
          {"r_grid", r_grid},   {"t_grid", t_grid}, {"eps", eps},
          {"tol", tol},         {"seed", seed},     {"out", out_path}};
}

Json build_report(const RunConfig& config, bool& findings) {
  const auto it = commands().find(config.command);
  if (it == commands().end()) {
    throw SchemaError("unknown command '" + config.command + "'");
  }
  if (!(config.tol > 0.0)) throw SchemaError("--tol must be positive");
  findings = false;
  Json result = it->second(config, findings);
  return {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
          {"config", config.to_json()},
          {"status", findings ? "findings" : "clean"},
          {"result", std::move(result)}};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    bool findings = false;
    const std::string text = canonical_dump(build_report(config, findings));
    if (config.out_path.empty()) {
      out << text;
    } else {
      write_file_atomic(config.out_path, text);
    }
    return findings ? kExitFindings : kExitClean;
  } catch (const SchemaError& e) {
    err << "ifms: input error: " << e.what() << "\n";
  } catch (const AxiomError& e) {
    err << "ifms: rejected specification: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "ifms: invalid input: " << e.what() << "\n";
  } catch (const EvaluationError& e) {
    err << "ifms: evaluation failed: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    err << "ifms: schema mismatch: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "ifms: error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace ifms
