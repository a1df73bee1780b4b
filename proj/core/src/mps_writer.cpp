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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "rpdlp/mps.hpp"

namespace rpdlp {
namespace {

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

// Free-format writer. Equality rows come out as E rows, inequality rows as
// G rows; every column appears with at least its objective coefficient so
// that empty columns survive a round trip.
void WriteMps(const LpProblem& problem, std::ostream& out) {
  problem.Validate();
  const Index m1 = problem.num_eq_rows();
  const Index m2 = problem.num_ineq_rows();
  const Index n = problem.num_vars();
  auto eq_name = [](Index i) { return "E" + std::to_string(i); };
  auto ineq_name = [](Index i) { return "G" + std::to_string(i); };
  auto col_name = [](Index j) { return "X" + std::to_string(j); };

  out << "NAME " << (problem.name.empty() ? "LP" : problem.name) << "\n";
  if (problem.negated_objective) out << "OBJSENSE\n MAX\n";
  out << "ROWS\n N OBJ\n";
  for (Index i = 0; i < m1; ++i) out << " E " << eq_name(i) << "\n";
  for (Index i = 0; i < m2; ++i) out << " G " << ineq_name(i) << "\n";

  const double sign = problem.negated_objective ? -1.0 : 1.0;
  out << "COLUMNS\n";
  for (Index j = 0; j < n; ++j) {
    const std::string name = col_name(j);
    out << " " << name << " OBJ " << Num(sign * problem.c[j]) << "\n";
    const auto& a = problem.a;
    for (Index k = a.col_ptr()[j]; k < a.col_ptr()[j + 1]; ++k) {
      out << " " << name << " " << eq_name(a.row_idx()[k]) << " "
          << Num(a.csc_values()[k]) << "\n";
    }
    const auto& g = problem.g;
    for (Index k = g.col_ptr()[j]; k < g.col_ptr()[j + 1]; ++k) {
      out << " " << name << " " << ineq_name(g.row_idx()[k]) << " "
          << Num(g.csc_values()[k]) << "\n";
    }
  }

  out << "RHS\n";
  if (problem.objective_offset != 0.0) {
    out << " RHS OBJ " << Num(sign * -problem.objective_offset) << "\n";
  }
  for (Index i = 0; i < m1; ++i) {
    if (problem.b[i] != 0.0) {
      out << " RHS " << eq_name(i) << " " << Num(problem.b[i]) << "\n";
    }
  }
  for (Index i = 0; i < m2; ++i) {
    if (problem.h[i] != 0.0) {
      out << " RHS " << ineq_name(i) << " " << Num(problem.h[i]) << "\n";
    }
  }

  out << "BOUNDS\n";
  for (Index j = 0; j < n; ++j) {
    const double l = problem.l[j];
    const double u = problem.u[j];
    if (l == 0.0 && u == kInf) continue;
    const std::string name = col_name(j);
    if (std::isinf(l) && std::isinf(u)) {
      out << " FR BND " << name << "\n";
      continue;
    }
    if (l == u) {
      out << " FX BND " << name << " " << Num(l) << "\n";
      continue;
    }
    if (std::isinf(l)) {
      out << " MI BND " << name << "\n";
    } else if (l != 0.0) {
      out << " LO BND " << name << " " << Num(l) << "\n";
    }
    if (!std::isinf(u)) {
      out << " UP BND " << name << " " << Num(u) << "\n";
    }
  }
  out << "ENDATA\n";
}

void WriteMpsFile(const LpProblem& problem, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  WriteMps(problem, out);
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace rpdlp
