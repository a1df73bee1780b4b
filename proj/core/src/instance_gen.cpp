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

#include "rpdlp/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace rpdlp {

EdgeList GenPagerankGraph(const PagerankConfig& cfg) {
  if (cfg.n_nodes < cfg.attachment + 1) {
    throw std::invalid_argument("n_nodes must be at least attachment + 1");
  }
  if (!(cfg.damping > 0.0 && cfg.damping < 1.0)) {
    throw std::invalid_argument("damping must lie in (0, 1)");
  }
  std::mt19937_64 rng(cfg.seed);
  EdgeList edges;
  edges.reserve(static_cast<size_t>(cfg.n_nodes * cfg.attachment));

  // Seed core: a directed cycle over the first attachment+1 nodes.
  const Index core = cfg.attachment + 1;
  for (Index i = 0; i < core; ++i) edges.push_back({i, (i + 1) % core});

  // Attachment targets drawn proportionally to in-degree + 1, via a pool
  // where node j appears in_degree(j) + 1 times.
  std::vector<Index> pool;
  pool.reserve(2 * static_cast<size_t>(cfg.n_nodes * cfg.attachment));
  for (Index i = 0; i < core; ++i) pool.push_back(i);
  for (auto& [src, dst] : edges) pool.push_back(dst);
  for (Index i = core; i < cfg.n_nodes; ++i) {
    std::vector<Index> targets;
    while (static_cast<Index>(targets.size()) < cfg.attachment) {
      std::uniform_int_distribution<size_t> dist(0, pool.size() - 1);
      const Index pick = pool[dist(rng)];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
        targets.push_back(pick);
      }
    }
    for (Index t : targets) {
      edges.push_back({i, t});
      pool.push_back(t);
    }
    pool.push_back(i);
  }
  return edges;
}

EdgeList ReadEdgeList(const std::string& path, Index* n_nodes) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  EdgeList edges;
  std::map<Index, Index> compact;
  auto id = [&compact](Index raw) {
    return compact.try_emplace(raw, static_cast<Index>(compact.size()))
        .first->second;
  };
  std::string line;
  while (std::getline(in, line)) {
    const size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream iss(line);
    Index src, dst;
    if (!(iss >> src >> dst)) {
      throw std::runtime_error("malformed edge line: " + line);
    }
    edges.push_back({id(src), id(dst)});
  }
  if (n_nodes != nullptr) *n_nodes = static_cast<Index>(compact.size());
  return edges;
}

LpProblem BuildPagerankLp(const EdgeList& edges, Index n_nodes,
                          double damping) {
  if (n_nodes < 1) throw std::invalid_argument("empty graph");
  std::vector<Index> out_degree(static_cast<size_t>(n_nodes), 0);
  for (auto& [src, dst] : edges) {
    if (src < 0 || src >= n_nodes || dst < 0 || dst >= n_nodes) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    ++out_degree[src];
  }
  // Dangling nodes become self-loops so S stays column-stochastic.
  std::vector<Index> dangling;
  for (Index j = 0; j < n_nodes; ++j) {
    if (out_degree[j] == 0) {
      dangling.push_back(j);
      out_degree[j] = 1;
    }
  }

  // Row i: x_i - damping * sum_j S_ij x_j >= (1 - damping) / n.
  std::vector<Triplet> ineq;
  ineq.reserve(edges.size() + 2 * static_cast<size_t>(n_nodes));
  for (Index i = 0; i < n_nodes; ++i) ineq.push_back({i, i, 1.0});
  for (auto& [src, dst] : edges) {
    ineq.push_back({dst, src, -damping / out_degree[src]});
  }
  for (Index j : dangling) {
    ineq.push_back({j, j, -damping});
  }

  LpProblem p;
  p.name = "pagerank";
  p.g = SparseMatrix::FromTriplets(n_nodes, n_nodes, std::move(ineq));
  p.h.assign(static_cast<size_t>(n_nodes),
             (1.0 - damping) / static_cast<double>(n_nodes));
  p.a = SparseMatrix::FromTriplets(
      1, n_nodes, [n_nodes] {
        std::vector<Triplet> ones;
        for (Index j = 0; j < n_nodes; ++j) ones.push_back({0, j, 1.0});
        return ones;
      }());
  p.b = {1.0};
  p.c.assign(static_cast<size_t>(n_nodes), 0.0);
  p.l.assign(static_cast<size_t>(n_nodes), 0.0);
  p.u.assign(static_cast<size_t>(n_nodes), kInf);
  p.Validate();
  return p;
}

LpProblem GenPagerank(const PagerankConfig& cfg) {
  return BuildPagerankLp(GenPagerankGraph(cfg), cfg.n_nodes, cfg.damping);
}

LpProblem GenRandomLp(Index m, Index n, double density, std::uint64_t seed,
                      std::vector<double>* witness) {
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be >= 1");
  if (!(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in (0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);

  std::vector<double> x_hat(static_cast<size_t>(n));
  for (double& v : x_hat) v = unit(rng);

  std::vector<Triplet> entries;
  for (Index i = 0; i < m; ++i) {
    Index row_nnz = 0;
    for (Index j = 0; j < n; ++j) {
      if (unit(rng) < density) {
        entries.push_back({i, j, sym(rng)});
        ++row_nnz;
      }
    }
    if (row_nnz == 0) {
      // Empty rows would be vacuous constraints; give each row at least one.
      const Index j = static_cast<Index>(rng() % static_cast<uint64_t>(n));
      entries.push_back({i, j, sym(rng)});
    }
  }

  LpProblem p;
  p.name = "rand_" + std::to_string(m) + "x" + std::to_string(n) + "_s" +
           std::to_string(seed);
  p.g = SparseMatrix::FromTriplets(m, n, std::move(entries));
  p.a = SparseMatrix::FromTriplets(0, n, {});
  std::vector<double> gx(static_cast<size_t>(m));
  p.g.Multiply(x_hat, gx);
  p.h.resize(static_cast<size_t>(m));
  for (Index i = 0; i < m; ++i) p.h[i] = gx[i] - std::abs(0.3 * sym(rng));
  p.c.resize(static_cast<size_t>(n));
  for (double& v : p.c) v = sym(rng);
  p.l.assign(static_cast<size_t>(n), 0.0);
  p.u.assign(static_cast<size_t>(n), 1.0);
  p.Validate();
  if (witness != nullptr) *witness = std::move(x_hat);
  return p;
}

}  // namespace rpdlp
