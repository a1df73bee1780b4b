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

#include "rpdlp/lp_problem.hpp"

#include <cmath>
#include <stdexcept>

namespace rpdlp {

void LpProblem::Validate() const {
  const Index n = num_vars();
  if (a.cols() != n || g.cols() != n) {
    throw std::invalid_argument("matrix column count does not match c");
  }
  if (static_cast<Index>(b.size()) != a.rows()) {
    throw std::invalid_argument("b length does not match A row count");
  }
  if (static_cast<Index>(h.size()) != g.rows()) {
    throw std::invalid_argument("h length does not match G row count");
  }
  if (static_cast<Index>(l.size()) != n || static_cast<Index>(u.size()) != n) {
    throw std::invalid_argument("bound vector length does not match c");
  }
  auto check_finite = [](const std::vector<double>& v, const char* what) {
    for (double x : v) {
      if (std::isnan(x)) {
        throw std::invalid_argument(std::string("NaN in ") + what);
      }
    }
  };
  check_finite(c, "c");
  check_finite(b, "b");
  check_finite(h, "h");
  for (double x : c) {
    if (std::isinf(x)) throw std::invalid_argument("infinite entry in c");
  }
  for (Index i = 0; i < n; ++i) {
    if (std::isnan(l[i]) || std::isnan(u[i])) {
      throw std::invalid_argument("NaN bound");
    }
    if (l[i] > u[i]) {
      throw std::invalid_argument("crossed bounds: l > u at index " +
                                  std::to_string(i));
    }
  }
}

BoundClass ClassifyBound(double lower, double upper) {
  const bool lo = std::isfinite(lower);
  const bool hi = std::isfinite(upper);
  if (!lo && !hi) return BoundClass::kFree;
  if (!lo && hi) return BoundClass::kUpperOnly;
  if (lo && !hi) return BoundClass::kLowerOnly;
  return BoundClass::kBoxed;
}

std::vector<BoundClass> ClassifyBounds(const LpProblem& problem) {
  std::vector<BoundClass> tags;
  tags.reserve(problem.l.size());
  for (size_t i = 0; i < problem.l.size(); ++i) {
    tags.push_back(ClassifyBound(problem.l[i], problem.u[i]));
  }
  return tags;
}

std::pair<SparseMatrix, std::vector<double>> StackK(const LpProblem& problem) {
  SparseMatrix k = SparseMatrix::VStack(problem.a, problem.g);
  std::vector<double> q = problem.b;
  q.insert(q.end(), problem.h.begin(), problem.h.end());
  return {std::move(k), std::move(q)};
}

}  // namespace rpdlp
