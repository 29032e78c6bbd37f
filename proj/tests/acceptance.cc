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

// Acceptance criteria runner. Prints one PASS/FAIL line per criterion.
//
//   acceptance IFMS_BINARY FIXTURE_DIR [--only N]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "ifms/error.h"
#include "ifms/grid.h"
#include "ifms/if_metric.h"
#include "ifms/if_norm.h"
#include "ifms/linear_operator.h"
#include "ifms/precompact.h"
#include "ifms/sequence.h"

namespace {

using namespace ifms;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Pinned tolerances and budgets.
constexpr double kAuditTol = 1e-9;
constexpr double kCounterexampleTol = 1e-6;
constexpr double kReciprocalBoundTol = 1e-12;
constexpr double kFixtureTol = 1e-12;
constexpr double kNormLimitTol = 1e-2;
constexpr double kAxiomSuiteBudgetSeconds = 10.0;
constexpr double kSuiteBudgetSeconds = 60.0;
constexpr int kBoundPerDecade = 50;
constexpr int kConstantPerDecade = 200;

std::string g_binary;
std::string g_fixtures;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<PointIndex> all_indices(std::size_t n) {
  std::vector<PointIndex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::size_t axiom_violations(const AuditReport& rep) {
  std::size_t n = 0;
  for (const char* ax : {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"}) {
    const auto it = rep.violation_counts.find(ax);
    if (it != rep.violation_counts.end()) n += it->second;
  }
  return n;
}

Outcome criterion1() {
  Outcome o;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Eigen::VectorXd> pts;
  for (int i = 0; i < 50; ++i) pts.push_back(Eigen::Vector3d(u(rng), u(rng), u(rng)));
  const auto grid = parse_grid("0.01:100:10log").values();
  AuditOptions opts;
  opts.tol = kAuditTol;
  const auto sample = all_indices(pts.size());
  const auto start = Clock::now();
  const auto base = PointSet::from_vectors(pts, ClassicalMetric::kEuclidean);
  for (const auto& m : {IFMetric::standard(base), IFMetric::parametric({}, base)}) {
    const auto rep = axiom_audit(m, sample, grid, opts);
    const std::size_t v = axiom_violations(rep);
    o.require(v == 0, to_string(m.kind()) + " has " + std::to_string(v) + " violations");
    o.require(rep.checked.count("e") && rep.checked.count("j"), "triangle axioms not checked");
    o.require(rep.unchecked.empty(), "some axioms unchecked");
  }
  const double secs = seconds_since(start);
  o.require(secs < kAxiomSuiteBudgetSeconds, "runtime " + fmt(secs) + " s");
  o.detail = o.detail.empty() ? "0 violations, " + fmt(secs) + " s" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  ParametricWeights w;
  w.nearness_weight = 10.0;
  w.non_nearness_weight = 0.1;
  const auto m = IFMetric::parametric(w, PointSet::on_line({0.0, 1.0}), {},
                                      Validation::kUnchecked);
  const auto rep = axiom_audit(m, all_indices(2), {0.1, 1.0, 10.0});
  const double expected = 10.0 / 11.0 + 1.0 / 1.1 - 1.0;
  bool found = false;
  double got = 0.0;
  for (const auto& v : rep.of("a")) {
    if (v.witness.t && *v.witness.t == 1.0) {
      found = true;
      got = v.magnitude;
    }
  }
  o.require(found, "no (a) violation at t=1");
  o.require(std::abs(got - expected) <= kCounterexampleTol, "magnitude " + fmt(got));
  if (o.pass) o.detail = "(a) magnitude " + fmt(got);
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::vector<double> v;
  for (int i = 1; i <= 200; ++i) v.push_back(1.0 / i);
  const auto idx = all_indices(200);
  const auto std_metric = IFMetric::standard(PointSet::on_line(v));
  const auto c = cauchy_prefix(SequencePrefix(std_metric, idx), 0.1, TimeParam(1.0));
  o.require(c.certified && c.n0 <= 11, "standard n0 " + std::to_string(c.n0));
  const auto rec = IFMetric::reciprocal_augmented(v);
  const auto r = cauchy_prefix(SequencePrefix(rec, idx), 0.5, TimeParam(1.0));
  o.require(!r.certified, "reciprocal-augmented certified");
  std::size_t checked = 0;
  for (std::size_t n = 1; 2 * n <= 200; ++n) {
    const double md = rec.eval(n - 1, 2 * n - 1, TimeParam(1.0)).m_deg;
    o.require(md <= 1.0 / (1.0 + static_cast<double>(n)) + kReciprocalBoundTol,
              "bound fails at n=" + std::to_string(n));
    ++checked;
  }
  if (o.pass) {
    o.detail = "standard n0=" + std::to_string(c.n0) + ", reciprocal fails, " +
               std::to_string(checked) + " bound pairs";
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coord(-4.0, 4.0);
  std::uniform_int_distribution<int> size(1, 10);
  std::uniform_real_distribution<double> radius(0.05, 0.95);
  std::uniform_real_distribution<double> logt(-1.0, 1.0);
  std::size_t exceptions = 0;
  for (int inst = 0; inst < 200; ++inst) {
    const int n = size(rng);
    std::vector<Eigen::VectorXd> pts;
    for (int i = 0; i < n; ++i) pts.push_back(Eigen::Vector2d(coord(rng), coord(rng)));
    const auto m = IFMetric::standard(PointSet::from_vectors(pts, ClassicalMetric::kEuclidean));
    const auto a = all_indices(pts.size());
    const double r = radius(rng);
    const TimeParam t(std::pow(10.0, logt(rng)));
    const auto g = greedy_net(m, a, r, t);
    const auto e = exact_min_net(m, a, r, t);
    const auto replay = coverage_replay(m, a, g.centers, r, t);
    bool covered = true;
    for (bool b : replay) covered = covered && b;
    if (!covered || !(e.size() <= g.size() && g.size() <= a.size())) ++exceptions;
  }
  o.require(exceptions == 0, std::to_string(exceptions) + " random exceptions");
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
  const auto gm = IFMetric::standard(PointSet::on_line(grid));
  const auto g = greedy_net(gm, all_indices(11), 0.5, TimeParam(1.0));
  const auto e = exact_min_net(gm, all_indices(11), 0.5, TimeParam(1.0));
  o.require(g.size() == 2, "grid greedy size " + std::to_string(g.size()));
  o.require(e.size() == 2, "grid exact size " + std::to_string(e.size()) +
                               " (expected 2)");
  if (o.pass) o.detail = "200 instances, grid greedy=exact=2";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const double lambda = 0.3, eta = 0.2;
  const double eps_cap = std::min(1 - lambda, eta);
  const std::vector<double> eps_grid = {0.01, 0.02, 0.05, 0.1, 0.15, 0.2, 0.3, 0.5};
  const std::vector<double> t_grid = {0.1, 1.0, 10.0};
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::size_t compared = 0, mismatches = 0;
  for (int s = 0; s < 20; ++s) {
    const double limit = 5.0 * u(rng);
    const double rate = 0.6 + 0.35 * std::abs(u(rng));
    std::vector<double> v;
    for (int i = 0; i < 60; ++i) v.push_back(limit + std::pow(rate, i) * (1.5 + u(rng)));
    v.push_back(limit);
    const auto inner = IFMetric::standard(PointSet::on_line(v));
    const auto bounded = IFMetric::bounded(lambda, eta, inner);
    const auto idx = all_indices(60);
    for (double eps : eps_grid) {
      if (eps > eps_cap) continue;
      for (double t : t_grid) {
        const auto a = converges_prefix(SequencePrefix(inner, idx), 60, eps, TimeParam(t));
        const auto b = converges_prefix(SequencePrefix(bounded, idx), 60, eps, TimeParam(t));
        ++compared;
        if (a.certified != b.certified || a.n0 != b.n0) ++mismatches;
      }
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.detail = o.pass ? std::to_string(compared) + " verdicts, 0 mismatches" : o.detail;
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 0.05);
  std::vector<double> v;
  for (int i = 0; i < 40; ++i) v.push_back(u(rng) + 1e-9 * i);
  const auto m = IFMetric::standard(PointSet::on_line(v));
  std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
  std::uniform_int_distribution<std::size_t> level(1, 12);
  std::size_t exceptions = 0, composed_hits = 0;
  for (int s = 0; s < 500; ++s) {
    const PointIndex x = pick(rng), y = pick(rng), z = pick(rng);
    const std::size_t n = level(rng);
    if (uniformity_member(m, x, y, n + 1) && !uniformity_member(m, x, y, n)) ++exceptions;
    if (uniformity_member(m, x, y, n) != uniformity_member(m, y, x, n)) ++exceptions;
    const std::size_t mm = composition_level(m.ops(), n);
    if (uniformity_member(m, x, y, mm) && uniformity_member(m, y, z, mm)) {
      ++composed_hits;
      if (!uniformity_member(m, x, z, n)) ++exceptions;
    }
  }
  o.require(exceptions == 0, std::to_string(exceptions) + " exceptions");
  o.require(composed_hits > 0, "composition never exercised");
  if (o.pass) o.detail = "500 samples, " + std::to_string(composed_hits) + " composed";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto comp = IFNorm::standard(1, ClassicalMetric::kAbsolute);
  const auto prod = IFNorm::euclidean_product(comp, 2, {TNorm::product(), TConorm::maximum()});
  const auto standard = IFNorm::standard(2, ClassicalMetric::kEuclidean);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Eigen::VectorXd> sample;
  for (int i = 0; i < 50; ++i) sample.push_back(Eigen::Vector2d(u(rng), u(rng)));
  NormAuditOptions opts;
  opts.base.tol = kAuditTol;
  opts.limit_tol = kNormLimitTol;
  const auto grid = parse_grid("0.01:100:10log").values();
  for (const auto& n : {standard, prod}) {
    const auto rep = norm_axiom_audit(n, sample, grid, opts);
    o.require(rep.clean(), to_string(n.kind()) + " has " +
                               std::to_string(rep.total_violations()) + " violations");
  }
  std::size_t over = 0;
  std::uniform_real_distribution<double> lt(-2.0, 2.0);
  for (int i = 0; i < 10000; ++i) {
    const auto p = prod.eval(Eigen::Vector2d(u(rng), u(rng)), TimeParam(std::pow(10.0, lt(rng))));
    if (p.m_deg + p.n_deg > 1.0) ++over;
  }
  o.require(over == 0, std::to_string(over) + " samples with sum > 1");
  const auto p = prod.eval(Eigen::Vector2d(3.0, 4.0), TimeParam(1.0));
  o.require(std::abs(p.m_deg - 0.05) <= kFixtureTol && std::abs(p.n_deg - 0.8) <= kFixtureTol,
            "fixture (" + fmt(p.m_deg) + ", " + fmt(p.n_deg) + ")");
  if (o.pass) o.detail = "audits clean, 10000 samples in triangle, fixture (0.05, 0.8)";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto n2 = IFNorm::standard(2, ClassicalMetric::kEuclidean);
  const auto grid = decade_grid(-3, 3, kBoundPerDecade);
  const double step = std::pow(10.0, 1.0 / kBoundPerDecade);
  const std::vector<double> times = {0.1, 1.0, 10.0};
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Eigen::VectorXd> sample;
  for (int i = 0; i < 20; ++i) sample.push_back(Eigen::Vector2d(u(rng), u(rng)));
  Eigen::Matrix2d d23;
  d23 << 2.0, 0.0, 0.0, 3.0;
  const auto r = fuzzy_bounded_search(OperatorSpec(d23, n2, n2), grid, grid, sample, times);
  auto near3 = [&](const std::optional<double>& v) {
    return v && *v >= 3.0 / step && *v <= 3.0 * step;
  };
  o.require(r.certified && near3(r.h) && near3(r.k),
            "diag(2,3) h=" + fmt(r.h.value_or(0)) + " k=" + fmt(r.k.value_or(0)));
  const OperatorSpec id(Eigen::Matrix2d::Identity(), n2, n2);
  const auto ri = fuzzy_bounded_search(id, grid, grid, sample, times);
  o.require(ri.certified && ri.h == 1.0 && ri.k == 1.0, "identity not exactly 1");
  const auto g = graph_norm(id, {TNorm::product(), TConorm::maximum()});
  const auto rep = norm_axiom_audit(g, sample, parse_grid("0.01:100:10log").values());
  o.require(rep.clean(), "graph norm audit has " + std::to_string(rep.total_violations()) +
                             " violations");
  if (o.pass) o.detail = "h=" + fmt(*r.h) + " k=" + fmt(*r.k) + ", identity 1, graph clean";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto n2 = IFNorm::standard(2, ClassicalMetric::kEuclidean);
  const double step = std::pow(10.0, 1.0 / kConstantPerDecade);
  const std::vector<double> times = {0.1, 1.0, 10.0};
  auto within = [&](double v, double target) {
    return v >= target / step && v <= target * step;
  };
  for (const auto& [col, target] : {std::pair{Eigen::Vector2d(0.6, 0.8), 1.0},
                                    std::pair{Eigen::Vector2d(0.0, 2.0), 2.0}}) {
    const Eigen::MatrixXd basis = col;
    const auto k = basis_equivalence_constants(basis, n2, times);
    o.require(within(k.c, target) && within(k.d, target),
              "target " + fmt(target) + " got c=" + fmt(k.c) + " d=" + fmt(k.d));
  }
  Eigen::Matrix2d deficient;
  deficient << 1.0, -1.0, 1.0, -1.0;
  bool threw = false;
  try {
    basis_equivalence_constants(deficient, n2, times);
  } catch (const PreconditionError&) {
    threw = true;
  }
  o.require(threw, "rank-deficient basis accepted");
  if (o.pass) o.detail = "c=d=1 and c=d=2 within one grid step, rank check raises";
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::function<Outcome()>> criteria_1_to_9() {
  return {criterion1, criterion2, criterion3, criterion4, criterion5,
          criterion6, criterion7, criterion8, criterion9};
}

Outcome criterion10() {
  Outcome o;
  const auto start = Clock::now();
  const fs::path dir = fs::temp_directory_path() / ("ifms_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string f = g_fixtures + "/";
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"audit", "--spec " + f + "standard_line.json"},
      {"net", "--spec " + f + "unit_grid.json --r-grid 0.2:0.8:4lin --t-grid 0.5:2:3log"},
      {"cauchy", "--spec " + f + "origin_line.json --seq " + f + "harmonic_seq.json --eps 0.1,0.19"},
      {"norm-audit", "--spec " + f + "norm_product2.json"},
      {"equivalence", "--spec " + f + "norm_standard2.json --spec-b " + f +
                          "norm_product2.json --seq " + f + "equivalence_family.json --eps 0.1,0.3"},
      {"op-bound", "--matrix " + f + "op_diag23.json"},
      {"graph-norm", "--matrix " + f + "op_identity.json"}};
  for (const auto& [cmd, args] : runs) {
    std::string reports[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path out = dir / (cmd + ".json");
      const std::string line = g_binary + " " + cmd + " " + args + " --seed 42 --out " +
                               out.string() + " 2>/dev/null";
      const int status = std::system(line.c_str());
      if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) == 2) {
        o.require(false, cmd + " failed to run");
      }
      reports[rep] = slurp(out);
    }
    o.require(!reports[0].empty() && reports[0] == reports[1], cmd + " reports differ");
  }
  fs::remove_all(dir);
  // The rest of the suite, timed together with the CLI runs.
  for (const auto& c : criteria_1_to_9()) c();
  const double secs = seconds_since(start);
  o.require(secs < kSuiteBudgetSeconds, "suite took " + fmt(secs) + " s");
  if (o.pass) o.detail = "7 commands byte-identical, suite " + fmt(secs) + " s";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s IFMS_BINARY FIXTURE_DIR [--only N]\n", argv[0]);
    return 2;
  }
  g_binary = argv[1];
  g_fixtures = argv[2];
  int only = 0;
  if (argc == 5 && std::string(argv[3]) == "--only") only = std::atoi(argv[4]);
  auto all = criteria_1_to_9();
  all.push_back(criterion10);
  bool ok = true;
  for (int i = 1; i <= static_cast<int>(all.size()); ++i) {
    if (only != 0 && i != only) continue;
    Outcome o;
    try {
      o = all[static_cast<std::size_t>(i - 1)]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", i, o.detail.c_str());
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
