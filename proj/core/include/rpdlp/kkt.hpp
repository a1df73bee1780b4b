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

#ifndef RPDLP_KKT_HPP_
#define RPDLP_KKT_HPP_

#include <vector>

#include "rpdlp/lp_problem.hpp"

namespace rpdlp {

// A primal-dual point z = (x, y); y stacks the equality multipliers first.
struct Iterate {
  std::vector<double> x;
  std::vector<double> y;

  bool operator==(const Iterate& other) const = default;
};

struct ResidualReport {
  double primal_res = 0.0;  // ||(Ax - b, [h - Gx]+)||_2
  double dual_res = 0.0;    // ||c - K'y - lambda||_2
  double gap_abs = 0.0;     // |dual_obj - primal_obj|
  double primal_obj = 0.0;
  double dual_obj = 0.0;
  double rel_primal = 0.0;  // primal_res / (1 + ||q||)
  double rel_dual = 0.0;    // dual_res / (1 + ||c||)
  double rel_gap = 0.0;     // gap_abs / (1 + |dual_obj| + |primal_obj|)
};

// Reduced costs: lambda = proj_Lambda(c - K'y), projected per variable onto
// the set determined by its bound class.
std::vector<double> DeriveLambda(const LpProblem& problem,
                                 std::span<const double> y);

ResidualReport ComputeResiduals(const LpProblem& problem, const Iterate& z);

// True iff all three relative measures are at most eps.
bool CheckTermination(const ResidualReport& report, double eps);

// sqrt(omega^2 p^2 + d^2 / omega^2 + g^2) on absolute residuals.
double KktError(double primal_res, double dual_res, double gap, double omega);
double KktOmega(const LpProblem& problem, const Iterate& z, double omega);

// Stateful evaluator: precomputes the norm denominators and bound classes
// and reuses scratch buffers, for use inside the iteration loop.
class ResidualEvaluator {
 public:
  explicit ResidualEvaluator(const LpProblem& problem);

  ResidualReport Evaluate(std::span<const double> x,
                          std::span<const double> y) const;
  double KktOmega(std::span<const double> x, std::span<const double> y,
                  double omega) const;

  double q_norm() const { return q_norm_; }
  double c_norm() const { return c_norm_; }

 private:
  const LpProblem& problem_;
  std::vector<BoundClass> bound_class_;
  double q_norm_;
  double c_norm_;
  mutable std::vector<double> ax_, gx_, kty_;
};

}  // namespace rpdlp

#endif  // RPDLP_KKT_HPP_
