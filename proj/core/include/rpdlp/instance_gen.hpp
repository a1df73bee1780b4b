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

#ifndef RPDLP_INSTANCE_GEN_HPP_
#define RPDLP_INSTANCE_GEN_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rpdlp/lp_problem.hpp"

namespace rpdlp {

struct PagerankConfig {
  Index n_nodes = 0;
  double damping = 0.85;
  Index attachment = 3;  // out-edges per node in the random digraph
  std::uint64_t seed = 0;
};

// Directed edge list, src -> dst.
using EdgeList = std::vector<std::pair<Index, Index>>;

// Preferential-attachment random digraph with ~attachment out-edges per
// node. Deterministic per seed.
EdgeList GenPagerankGraph(const PagerankConfig& cfg);

// Reads whitespace-separated "src dst" pairs, one per line; '#' starts a
// comment line. Node ids may be sparse; they are compacted to 0..n-1.
EdgeList ReadEdgeList(const std::string& path, Index* n_nodes);

// Feasibility LP for the stationary equation x = damping*S x + (1-damping)/n:
// one >= row per node, one equality row sum(x) = 1, zero objective, x >= 0.
// Dangling nodes receive a self-loop before S is built, so S is
// column-stochastic. Row count is n_nodes + 1.
LpProblem BuildPagerankLp(const EdgeList& edges, Index n_nodes,
                          double damping);

LpProblem GenPagerank(const PagerankConfig& cfg);

// Bounded-feasible random LP: G is m x n with the given density, a feasible
// witness x_hat in [0,1]^n is sampled first and h = G x_hat - |noise|, so
// feasibility holds by construction; l = 0, u = 1, random c.
// If `witness` is non-null it receives x_hat.
LpProblem GenRandomLp(Index m, Index n, double density, std::uint64_t seed,
                      std::vector<double>* witness = nullptr);

}  // namespace rpdlp

#endif  // RPDLP_INSTANCE_GEN_HPP_
