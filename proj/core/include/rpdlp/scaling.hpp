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

#ifndef RPDLP_SCALING_HPP_
#define RPDLP_SCALING_HPP_

#include <span>
#include <vector>

#include "rpdlp/lp_problem.hpp"
#include "rpdlp/sparse_matrix.hpp"

namespace rpdlp {

// Positive diagonal scales for the stacked constraint matrix K = [A; G].
// The scaled problem has K' = D_r K D_c, q' = D_r q, c' = D_c c,
// l' = D_c^{-1} l, u' = D_c^{-1} u. A scaled iterate (x', y') maps back to
// the original space as x = D_c x', y = D_r y'.
struct ScalingInfo {
  std::vector<double> row_scale;  // length m1 + m2
  std::vector<double> col_scale;  // length n

  static ScalingInfo Identity(Index n_rows, Index n_cols);
  ScalingInfo Composed(const ScalingInfo& other) const;  // entrywise product

  void UnscaleIterate(std::span<double> x, std::span<double> y) const;
};

struct ScalingConfig {
  bool enabled = true;
  int ruiz_iters = 10;
  double pc_alpha = 1.0;
};

// Iterated infinity-norm equilibration: each sweep divides every row and
// column by the square root of its current infinity norm. Empty rows and
// columns keep scale 1.
ScalingInfo RuizEquilibrate(const SparseMatrix& k, int iters);

// row_scale_i = 1/sqrt(sum_j |K_ij|^(2-alpha)),
// col_scale_j = 1/sqrt(sum_i |K_ij|^alpha); empty slices keep scale 1.
ScalingInfo PockChambolleScale(const SparseMatrix& k, double alpha);

// Default pipeline: Ruiz sweeps followed by one Pock-Chambolle pass on the
// Ruiz-scaled matrix, composed into one ScalingInfo.
ScalingInfo ComputeScaling(const SparseMatrix& k, const ScalingConfig& config);

LpProblem ApplyScaling(const LpProblem& problem, const ScalingInfo& info);

}  // namespace rpdlp

#endif  // RPDLP_SCALING_HPP_
