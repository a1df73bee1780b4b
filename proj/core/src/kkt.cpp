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

#include "rpdlp/kkt.hpp"

#include <cassert>
#include <cmath>

namespace rpdlp {
namespace {

double Norm2(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

double ProjectReducedCost(double value, BoundClass tag) {
  switch (tag) {
    case BoundClass::kFree:
      return 0.0;
    case BoundClass::kUpperOnly:
      return std::min(value, 0.0);
    case BoundClass::kLowerOnly:
      return std::max(value, 0.0);
    case BoundClass::kBoxed:
      return value;
  }
  return 0.0;
}

}  // namespace

ResidualEvaluator::ResidualEvaluator(const LpProblem& problem)
    : problem_(problem),
      bound_class_(ClassifyBounds(problem)),
      c_norm_(Norm2(problem.c)),
      ax_(problem.b.size()),
      gx_(problem.h.size()),
      kty_(problem.c.size()) {
  double q_sq = 0.0;
  for (double v : problem.b) q_sq += v * v;
  for (double v : problem.h) q_sq += v * v;
  q_norm_ = std::sqrt(q_sq);
}

ResidualReport ResidualEvaluator::Evaluate(std::span<const double> x,
                                           std::span<const double> y) const {
  const Index m1 = problem_.num_eq_rows();
  const Index m2 = problem_.num_ineq_rows();
  const Index n = problem_.num_vars();
  assert(static_cast<Index>(x.size()) == n);
  assert(static_cast<Index>(y.size()) == m1 + m2);

  ResidualReport report;

  problem_.a.Multiply(x, ax_);
  problem_.g.Multiply(x, gx_);
  double primal_sq = 0.0;
  for (Index i = 0; i < m1; ++i) {
    const double r = ax_[i] - problem_.b[i];
    primal_sq += r * r;
  }
  for (Index i = 0; i < m2; ++i) {
    const double r = std::max(problem_.h[i] - gx_[i], 0.0);
    primal_sq += r * r;
  }
  report.primal_res = std::sqrt(primal_sq);

  // K'y = A'y_eq + G'y_ineq, then lambda = proj(c - K'y).
  problem_.a.MultiplyTranspose(y.first(static_cast<size_t>(m1)), kty_);
  problem_.g.MultiplyTransposeAdd(1.0, y.subspan(static_cast<size_t>(m1)),
                                  kty_);
  double dual_sq = 0.0;
  double bound_term = 0.0;
  for (Index j = 0; j < n; ++j) {
    const double reduced = problem_.c[j] - kty_[j];
    const double lambda = ProjectReducedCost(reduced, bound_class_[j]);
    const double r = reduced - lambda;
    dual_sq += r * r;
    // A positive multiplier against an infinite bound would make the dual
    // objective -inf; the projection rules make that impossible.
    if (lambda > 0.0) {
      assert(std::isfinite(problem_.l[j]));
      bound_term += problem_.l[j] * lambda;
    } else if (lambda < 0.0) {
      assert(std::isfinite(problem_.u[j]));
      bound_term += problem_.u[j] * lambda;
    }
  }
  report.dual_res = std::sqrt(dual_sq);

  double primal_obj = problem_.objective_offset;
  for (Index j = 0; j < n; ++j) primal_obj += problem_.c[j] * x[j];
  double dual_obj = problem_.objective_offset + bound_term;
  for (Index i = 0; i < m1; ++i) dual_obj += problem_.b[i] * y[i];
  for (Index i = 0; i < m2; ++i) dual_obj += problem_.h[i] * y[m1 + i];
  report.primal_obj = primal_obj;
  report.dual_obj = dual_obj;
  report.gap_abs = std::abs(dual_obj - primal_obj);

  report.rel_primal = report.primal_res / (1.0 + q_norm_);
  report.rel_dual = report.dual_res / (1.0 + c_norm_);
  report.rel_gap =
      report.gap_abs / (1.0 + std::abs(dual_obj) + std::abs(primal_obj));
  return report;
}

double ResidualEvaluator::KktOmega(std::span<const double> x,
                                   std::span<const double> y,
                                   double omega) const {
  const ResidualReport r = Evaluate(x, y);
  return KktError(r.primal_res, r.dual_res, r.gap_abs, omega);
}

std::vector<double> DeriveLambda(const LpProblem& problem,
                                 std::span<const double> y) {
  const Index m1 = problem.num_eq_rows();
  const Index n = problem.num_vars();
  assert(static_cast<Index>(y.size()) == m1 + problem.num_ineq_rows());
  std::vector<double> lambda(static_cast<size_t>(n));
  problem.a.MultiplyTranspose(y.first(static_cast<size_t>(m1)), lambda);
  problem.g.MultiplyTransposeAdd(1.0, y.subspan(static_cast<size_t>(m1)),
                                 lambda);
  for (Index j = 0; j < n; ++j) {
    lambda[j] = ProjectReducedCost(problem.c[j] - lambda[j],
                                   ClassifyBound(problem.l[j], problem.u[j]));
  }
  return lambda;
}

ResidualReport ComputeResiduals(const LpProblem& problem, const Iterate& z) {
  return ResidualEvaluator(problem).Evaluate(z.x, z.y);
}

bool CheckTermination(const ResidualReport& report, double eps) {
  assert(eps > 0.0);
  return report.rel_primal <= eps && report.rel_dual <= eps &&
         report.rel_gap <= eps;
}

double KktError(double primal_res, double dual_res, double gap, double omega) {
  assert(omega > 0.0);
  return std::sqrt(omega * omega * primal_res * primal_res +
                   dual_res * dual_res / (omega * omega) + gap * gap);
}

double KktOmega(const LpProblem& problem, const Iterate& z, double omega) {
  return ResidualEvaluator(problem).KktOmega(z.x, z.y, omega);
}

}  // namespace rpdlp
