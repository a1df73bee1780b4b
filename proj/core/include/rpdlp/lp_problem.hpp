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

#ifndef RPDLP_LP_PROBLEM_HPP_
#define RPDLP_LP_PROBLEM_HPP_

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rpdlp/sparse_matrix.hpp"

namespace rpdlp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// min c'x  s.t.  Ax = b,  Gx >= h,  l <= x <= u.
//
// All inequality information lives in G; <=-rows and ranged rows are
// normalized to this form at ingestion time.
struct LpProblem {
  SparseMatrix a;  // m1 x n equality rows
  SparseMatrix g;  // m2 x n inequality rows (>=)
  std::vector<double> c;
  std::vector<double> b;
  std::vector<double> h;
  std::vector<double> l;  // -inf allowed
  std::vector<double> u;  // +inf allowed
  double objective_offset = 0.0;
  // True when the source was a maximization problem; c was negated at parse
  // time and reported objective values must be negated back.
  bool negated_objective = false;
  std::string name;

  Index num_vars() const { return static_cast<Index>(c.size()); }
  Index num_eq_rows() const { return a.rows(); }
  Index num_ineq_rows() const { return g.rows(); }
  Index num_rows() const { return a.rows() + g.rows(); }

  // Throws std::invalid_argument on dimension mismatch, NaN entries or
  // crossed bounds (l_i > u_i).
  void Validate() const;

  bool operator==(const LpProblem& other) const = default;
};

// Per-variable classification of the bound interval [l_i, u_i]. Determines
// the set the reduced cost is projected onto: Free -> {0},
// UpperOnly -> (-inf, 0], LowerOnly -> [0, inf), Boxed -> all reals.
enum class BoundClass { kFree, kUpperOnly, kLowerOnly, kBoxed };

BoundClass ClassifyBound(double lower, double upper);
std::vector<BoundClass> ClassifyBounds(const LpProblem& problem);

// K = [A; G] (equality rows first) and q = (b, h). The result shares no
// storage with the problem.
std::pair<SparseMatrix, std::vector<double>> StackK(const LpProblem& problem);

}  // namespace rpdlp

#endif  // RPDLP_LP_PROBLEM_HPP_
