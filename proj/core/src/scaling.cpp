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

#include "rpdlp/scaling.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace rpdlp {

ScalingInfo ScalingInfo::Identity(Index n_rows, Index n_cols) {
  return {std::vector<double>(static_cast<size_t>(n_rows), 1.0),
          std::vector<double>(static_cast<size_t>(n_cols), 1.0)};
}

ScalingInfo ScalingInfo::Composed(const ScalingInfo& other) const {
  assert(row_scale.size() == other.row_scale.size());
  assert(col_scale.size() == other.col_scale.size());
  ScalingInfo out = *this;
  for (size_t i = 0; i < out.row_scale.size(); ++i) {
    out.row_scale[i] *= other.row_scale[i];
  }
  for (size_t j = 0; j < out.col_scale.size(); ++j) {
    out.col_scale[j] *= other.col_scale[j];
  }
  return out;
}

void ScalingInfo::UnscaleIterate(std::span<double> x,
                                 std::span<double> y) const {
  assert(x.size() == col_scale.size());
  assert(y.size() == row_scale.size());
  for (size_t j = 0; j < x.size(); ++j) x[j] *= col_scale[j];
  for (size_t i = 0; i < y.size(); ++i) y[i] *= row_scale[i];
}

ScalingInfo RuizEquilibrate(const SparseMatrix& k, int iters) {
  ScalingInfo info = ScalingInfo::Identity(k.rows(), k.cols());
  SparseMatrix work = k;
  for (int sweep = 0; sweep < iters; ++sweep) {
    const std::vector<double> row_norms = work.RowInfNorms();
    const std::vector<double> col_norms = work.ColInfNorms();
    std::vector<double> dr(row_norms.size(), 1.0);
    std::vector<double> dc(col_norms.size(), 1.0);
    for (size_t i = 0; i < dr.size(); ++i) {
      if (row_norms[i] > 0.0) dr[i] = 1.0 / std::sqrt(row_norms[i]);
    }
    for (size_t j = 0; j < dc.size(); ++j) {
      if (col_norms[j] > 0.0) dc[j] = 1.0 / std::sqrt(col_norms[j]);
    }
    work = work.Scaled(dr, dc);
    for (size_t i = 0; i < dr.size(); ++i) info.row_scale[i] *= dr[i];
    for (size_t j = 0; j < dc.size(); ++j) info.col_scale[j] *= dc[j];
  }
  return info;
}

ScalingInfo PockChambolleScale(const SparseMatrix& k, double alpha) {
  if (alpha < 0.0 || alpha > 2.0) {
    throw std::invalid_argument("pock-chambolle alpha must lie in [0, 2]");
  }
  ScalingInfo info = ScalingInfo::Identity(k.rows(), k.cols());
  const std::vector<double> row_sums = k.RowPowerSums(2.0 - alpha);
  const std::vector<double> col_sums = k.ColPowerSums(alpha);
  for (size_t i = 0; i < row_sums.size(); ++i) {
    if (row_sums[i] > 0.0) info.row_scale[i] = 1.0 / std::sqrt(row_sums[i]);
  }
  for (size_t j = 0; j < col_sums.size(); ++j) {
    if (col_sums[j] > 0.0) info.col_scale[j] = 1.0 / std::sqrt(col_sums[j]);
  }
  return info;
}

ScalingInfo ComputeScaling(const SparseMatrix& k, const ScalingConfig& config) {
  if (!config.enabled) return ScalingInfo::Identity(k.rows(), k.cols());
  ScalingInfo ruiz = RuizEquilibrate(k, config.ruiz_iters);
  SparseMatrix scaled = k.Scaled(ruiz.row_scale, ruiz.col_scale);
  return ruiz.Composed(PockChambolleScale(scaled, config.pc_alpha));
}

LpProblem ApplyScaling(const LpProblem& problem, const ScalingInfo& info) {
  const Index m1 = problem.num_eq_rows();
  const Index m2 = problem.num_ineq_rows();
  if (static_cast<Index>(info.row_scale.size()) != m1 + m2 ||
      static_cast<Index>(info.col_scale.size()) != problem.num_vars()) {
    throw std::invalid_argument("scaling dimensions do not match problem");
  }
  std::span<const double> eq_scale(info.row_scale.data(),
                                   static_cast<size_t>(m1));
  std::span<const double> ineq_scale(info.row_scale.data() + m1,
                                     static_cast<size_t>(m2));
  LpProblem out = problem;
  out.a = problem.a.Scaled(eq_scale, info.col_scale);
  out.g = problem.g.Scaled(ineq_scale, info.col_scale);
  for (Index i = 0; i < m1; ++i) out.b[i] = problem.b[i] * eq_scale[i];
  for (Index i = 0; i < m2; ++i) out.h[i] = problem.h[i] * ineq_scale[i];
  for (size_t j = 0; j < out.c.size(); ++j) {
    out.c[j] = problem.c[j] * info.col_scale[j];
    // Infinities pass through division untouched.
    out.l[j] = problem.l[j] / info.col_scale[j];
    out.u[j] = problem.u[j] / info.col_scale[j];
  }
  return out;
}

}  // namespace rpdlp
