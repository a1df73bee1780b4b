// Copyright 2026 The rpdlp authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>
#include <string>

#include "oracle.hpp"
#include "rpdlp/instance_gen.hpp"
#include "rpdlp/solver.hpp"

namespace rpdlp {
namespace {

// Column-stochastic link matrix with dangling self-loops, dense, for use as
// an independent reference against BuildPagerankLp.
std::vector<std::vector<double>> DenseLinkMatrix(const EdgeList& edges,
                                                 Index n) {
  std::vector<std::set<Index>> out(n);
  for (const auto& [src, dst] : edges) out[src].insert(dst);
  for (Index j = 0; j < n; ++j) {
    if (out[j].empty()) out[j].insert(j);
  }
  std::vector<std::vector<double>> s(n, std::vector<double>(n, 0.0));
  for (Index j = 0; j < n; ++j) {
    for (Index i : out[j]) s[i][j] = 1.0 / double(out[j].size());
  }
  return s;
}

TEST_CASE("pagerank instances have n + 1 rows") {
  for (Index n : {10, 100, 1000}) {
    const LpProblem p = GenPagerank({n, 0.85, 3, 7});
    CHECK(p.g.rows() == n);
    CHECK(p.a.rows() == 1);
    CHECK(p.g.cols() == n);
    const auto [k, q] = StackK(p);
    CHECK(k.rows() == n + 1);
    CHECK(k.cols() == n);
    CHECK(std::all_of(p.c.begin(), p.c.end(),
                      [](double v) { return v == 0.0; }));
  }
}

TEST_CASE("five-node cycle: the uniform vector is feasible and optimal") {
  EdgeList cycle;
  for (Index i = 0; i < 5; ++i) cycle.emplace_back(i, (i + 1) % 5);
  const LpProblem p = BuildPagerankLp(cycle, 5, 0.85);

  const std::vector<double> uniform(5, 0.2);
  std::vector<double> y(6, 0.0);
  const auto d = oracle::ComputeDenseResiduals(p, uniform, y);
  CHECK(d.primal_res <= 1e-15);

  SolverParams params;
  params.eps = 1e-8;
  const SolveResult r = Solve(p, params);
  REQUIRE(r.status == SolveStatus::kOptimal);
  for (double v : r.x) CHECK(v == doctest::Approx(0.2).epsilon(1e-5));
}

TEST_CASE("power iteration vector is feasible for the generated LP") {
  const PagerankConfig cfg{400, 0.85, 3, 11};
  const EdgeList edges = GenPagerankGraph(cfg);
  const Index n = cfg.n_nodes;
  const auto s = DenseLinkMatrix(edges, n);
  const LpProblem p = BuildPagerankLp(edges, n, cfg.damping);

  std::vector<double> x(n, 1.0 / double(n));
  for (int sweep = 0; sweep < 200; ++sweep) {
    std::vector<double> next(n, (1.0 - cfg.damping) / double(n));
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) next[i] += cfg.damping * s[i][j] * x[j];
    }
    x.swap(next);
  }
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<double> y(n + 1, 0.0);
  const auto d = oracle::ComputeDenseResiduals(p, x, y);
  CHECK(d.primal_res <= 1e-10);
}

TEST_CASE("graph generation is deterministic and well formed") {
  const PagerankConfig cfg{300, 0.85, 4, 23};
  const EdgeList a = GenPagerankGraph(cfg);
  const EdgeList b = GenPagerankGraph(cfg);
  CHECK(a == b);
  std::set<std::pair<Index, Index>> seen;
  for (const auto& [src, dst] : a) {
    CHECK(src >= 0);
    CHECK(src < cfg.n_nodes);
    CHECK(dst >= 0);
    CHECK(dst < cfg.n_nodes);
    CHECK(seen.insert({src, dst}).second);  // no duplicate edges
  }
  const EdgeList c = GenPagerankGraph({300, 0.85, 4, 24});
  CHECK(a != c);
}

TEST_CASE("random lp witness is feasible by construction") {
  for (std::uint64_t seed : {1, 2, 3, 98}) {
    std::vector<double> witness;
    const LpProblem p = GenRandomLp(8, 6, 0.4, seed, &witness);
    REQUIRE(witness.size() == 6);
    for (double v : witness) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    const auto g = oracle::ToDense(p.g);
    for (Index i = 0; i < p.g.rows(); ++i) {
      double row = 0.0;
      for (Index j = 0; j < p.g.cols(); ++j) row += g[i][j] * witness[j];
      CHECK(row >= p.h[i] - 1e-12);
    }
    // Every row has at least one entry.
    const auto triplets = p.g.ToTriplets();
    std::set<Index> rows;
    for (const auto& t : triplets) rows.insert(t.row);
    CHECK(rows.size() == size_t(p.g.rows()));
  }
}

TEST_CASE("random lp generation is deterministic") {
  const LpProblem a = GenRandomLp(7, 9, 0.5, 42);
  const LpProblem b = GenRandomLp(7, 9, 0.5, 42);
  CHECK(a.g == b.g);
  CHECK(a.c == b.c);
  CHECK(a.h == b.h);
  CHECK(a.name == b.name);
}

TEST_CASE("edge list reader compacts sparse node ids") {
  const std::string path = "edges_test_tmp.txt";
  {
    std::ofstream out(path);
    out << "# comment line\n";
    out << "10 30\n";
    out << "30 50\n";
    out << "\n";
    out << "50 10\n";
  }
  Index n = 0;
  const EdgeList edges = ReadEdgeList(path, &n);
  std::remove(path.c_str());
  CHECK(n == 3);
  REQUIRE(edges.size() == 3);
  for (const auto& [src, dst] : edges) {
    CHECK(src >= 0);
    CHECK(src < 3);
    CHECK(dst >= 0);
    CHECK(dst < 3);
  }
  CHECK(edges[0] == std::make_pair(Index{0}, Index{1}));
  CHECK(edges[2] == std::make_pair(Index{2}, Index{0}));
}

}  // namespace
}  // namespace rpdlp
