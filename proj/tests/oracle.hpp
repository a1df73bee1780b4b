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

// Test-only reference implementations: dense residual computation, vertex
// enumeration, and a dense two-phase simplex. Deliberately naive and kept
// independent of the sparse/solver code paths they are used to check.

#ifndef RPDLP_TESTS_ORACLE_HPP_
#define RPDLP_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rpdlp/kkt.hpp"
#include "rpdlp/lp_problem.hpp"

namespace rpdlp::oracle {

using Dense = std::vector<std::vector<double>>;

inline Dense ToDense(const SparseMatrix& m) {
  Dense out(static_cast<size_t>(m.rows()),
            std::vector<double>(static_cast<size_t>(m.cols()), 0.0));
  for (const Triplet& t : m.ToTriplets()) out[t.row][t.col] = t.value;
  return out;
}

inline std::vector<double> DenseMatVec(const Dense& m,
                                       const std::vector<double>& x) {
  std::vector<double> y(m.size(), 0.0);
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  }
  return y;
}

// Dense re-derivation of the three termination residuals, independent of
// ResidualEvaluator.
struct DenseResiduals {
  double primal_res;
  double dual_res;
  double gap_abs;
  double primal_obj;
  double dual_obj;
  double rel_primal;
  double rel_dual;
  double rel_gap;
};

inline DenseResiduals ComputeDenseResiduals(const LpProblem& p,
                                            const std::vector<double>& x,
                                            const std::vector<double>& y) {
  const size_t m1 = p.b.size();
  const size_t m2 = p.h.size();
  const size_t n = p.c.size();
  const Dense a = ToDense(p.a);
  const Dense g = ToDense(p.g);
  const std::vector<double> ax = DenseMatVec(a, x);
  const std::vector<double> gx = DenseMatVec(g, x);

  double primal_sq = 0.0;
  for (size_t i = 0; i < m1; ++i) {
    primal_sq += (ax[i] - p.b[i]) * (ax[i] - p.b[i]);
  }
  for (size_t i = 0; i < m2; ++i) {
    const double v = std::max(p.h[i] - gx[i], 0.0);
    primal_sq += v * v;
  }

  std::vector<double> kty(n, 0.0);
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < m1; ++i) kty[j] += a[i][j] * y[i];
    for (size_t i = 0; i < m2; ++i) kty[j] += g[i][j] * y[m1 + i];
  }
  double dual_sq = 0.0;
  double bound_term = 0.0;
  for (size_t j = 0; j < n; ++j) {
    const double reduced = p.c[j] - kty[j];
    double lambda;
    const bool lo = std::isfinite(p.l[j]);
    const bool hi = std::isfinite(p.u[j]);
    if (!lo && !hi) {
      lambda = 0.0;
    } else if (!lo) {
      lambda = std::min(reduced, 0.0);
    } else if (!hi) {
      lambda = std::max(reduced, 0.0);
    } else {
      lambda = reduced;
    }
    dual_sq += (reduced - lambda) * (reduced - lambda);
    if (lambda > 0.0) bound_term += p.l[j] * lambda;
    if (lambda < 0.0) bound_term += p.u[j] * lambda;
  }

  double primal_obj = p.objective_offset;
  for (size_t j = 0; j < n; ++j) primal_obj += p.c[j] * x[j];
  double dual_obj = p.objective_offset + bound_term;
  for (size_t i = 0; i < m1; ++i) dual_obj += p.b[i] * y[i];
  for (size_t i = 0; i < m2; ++i) dual_obj += p.h[i] * y[m1 + i];

  double q_norm_sq = 0.0;
  for (double v : p.b) q_norm_sq += v * v;
  for (double v : p.h) q_norm_sq += v * v;
  double c_norm_sq = 0.0;
  for (double v : p.c) c_norm_sq += v * v;

  DenseResiduals r;
  r.primal_res = std::sqrt(primal_sq);
  r.dual_res = std::sqrt(dual_sq);
  r.primal_obj = primal_obj;
  r.dual_obj = dual_obj;
  r.gap_abs = std::abs(dual_obj - primal_obj);
  r.rel_primal = r.primal_res / (1.0 + std::sqrt(q_norm_sq));
  r.rel_dual = r.dual_res / (1.0 + std::sqrt(c_norm_sq));
  r.rel_gap =
      r.gap_abs / (1.0 + std::abs(dual_obj) + std::abs(primal_obj));
  return r;
}

struct OracleSolution {
  bool feasible = false;
  double objective = 0.0;
  std::vector<double> x;
};

// Gaussian elimination with partial pivoting; empty result when singular.
inline std::optional<std::vector<double>> SolveDense(Dense m,
                                                     std::vector<double> rhs) {
  const size_t n = rhs.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    for (size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (std::abs(m[pivot][col]) < 1e-11) return std::nullopt;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      if (f == 0.0) continue;
      for (size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  for (size_t j = 0; j < n; ++j) rhs[j] /= m[j][j];
  return rhs;
}

// Exhaustive vertex enumeration for tiny LPs. Every basic solution is
// formed by activating n constraints: all equality rows plus a subset of
// inequality rows and finite bounds. Infeasible and singular active sets
// are skipped; the best feasible vertex wins.
inline OracleSolution EnumerateVertices(const LpProblem& p,
                                        double feas_tol = 1e-7) {
  const size_t n = p.c.size();
  const Dense a = ToDense(p.a);
  const Dense g = ToDense(p.g);

  // Constraint rows as (coefficients, rhs): equality rows first, then
  // Gx >= h rows, then finite bounds.
  Dense rows;
  std::vector<double> rhs;
  const size_t n_eq = p.b.size();
  for (size_t i = 0; i < n_eq; ++i) {
    rows.push_back(a[i]);
    rhs.push_back(p.b[i]);
  }
  for (size_t i = 0; i < p.h.size(); ++i) {
    rows.push_back(g[i]);
    rhs.push_back(p.h[i]);
  }
  for (size_t j = 0; j < n; ++j) {
    if (std::isfinite(p.l[j])) {
      std::vector<double> e(n, 0.0);
      e[j] = 1.0;
      rows.push_back(e);
      rhs.push_back(p.l[j]);
    }
    if (std::isfinite(p.u[j])) {
      std::vector<double> e(n, 0.0);
      e[j] = 1.0;
      rows.push_back(e);
      rhs.push_back(p.u[j]);
    }
  }
  if (n_eq > n) throw std::invalid_argument("more equalities than variables");

  auto feasible = [&](const std::vector<double>& x) {
    const std::vector<double> ax = DenseMatVec(a, x);
    for (size_t i = 0; i < ax.size(); ++i) {
      if (std::abs(ax[i] - p.b[i]) > feas_tol) return false;
    }
    const std::vector<double> gx = DenseMatVec(g, x);
    for (size_t i = 0; i < gx.size(); ++i) {
      if (gx[i] < p.h[i] - feas_tol) return false;
    }
    for (size_t j = 0; j < n; ++j) {
      if (x[j] < p.l[j] - feas_tol || x[j] > p.u[j] + feas_tol) return false;
    }
    return true;
  };

  OracleSolution best;
  const size_t n_free_pick = n - n_eq;
  const size_t n_choices = rows.size() - n_eq;
  if (n_choices < n_free_pick) return best;
  std::vector<size_t> pick(n_free_pick);
  // Lexicographic enumeration of n_free_pick-subsets of the non-equality
  // constraints.
  for (size_t j = 0; j < n_free_pick; ++j) pick[j] = j;
  while (true) {
    Dense m;
    std::vector<double> r;
    for (size_t i = 0; i < n_eq; ++i) {
      m.push_back(rows[i]);
      r.push_back(rhs[i]);
    }
    for (size_t j : pick) {
      m.push_back(rows[n_eq + j]);
      r.push_back(rhs[n_eq + j]);
    }
    if (auto x = SolveDense(std::move(m), std::move(r));
        x.has_value() && feasible(*x)) {
      double obj = p.objective_offset;
      for (size_t j = 0; j < n; ++j) obj += p.c[j] * (*x)[j];
      if (!best.feasible || obj < best.objective) {
        best.feasible = true;
        best.objective = obj;
        best.x = *x;
      }
    }
    // Next combination.
    if (n_free_pick == 0) break;
    bool advanced = false;
    for (size_t j = n_free_pick; j-- > 0;) {
      if (pick[j] + (n_free_pick - j) < n_choices) {
        ++pick[j];
        for (size_t k = j + 1; k < n_free_pick; ++k) pick[k] = pick[k - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return best;
}

// Dense two-phase tableau simplex with Bland's rule, for instances too big
// to enumerate. Requires finite lower bounds and no equality rows (the
// shape GenRandomLp produces).
inline OracleSolution SimplexSolve(const LpProblem& p) {
  if (p.b.size() != 0) throw std::invalid_argument("simplex: equality rows");
  const size_t m = p.h.size();
  const size_t n = p.c.size();
  for (size_t j = 0; j < n; ++j) {
    if (!std::isfinite(p.l[j])) {
      throw std::invalid_argument("simplex: infinite lower bound");
    }
  }
  const Dense g = ToDense(p.g);

  // Shift x by l. Rows: G x' - s = h - G l; x'_j + w_j = u_j - l_j for
  // finite u. Columns: x' (n), surplus s (m), slacks w.
  std::vector<size_t> ub_rows;
  for (size_t j = 0; j < n; ++j) {
    if (std::isfinite(p.u[j])) ub_rows.push_back(j);
  }
  const size_t n_rows = m + ub_rows.size();
  const size_t n_cols = n + m + ub_rows.size();
  Dense a(n_rows, std::vector<double>(n_cols, 0.0));
  std::vector<double> rhs(n_rows, 0.0);
  for (size_t i = 0; i < m; ++i) {
    double shift = 0.0;
    for (size_t j = 0; j < n; ++j) {
      a[i][j] = g[i][j];
      shift += g[i][j] * p.l[j];
    }
    a[i][n + i] = -1.0;
    rhs[i] = p.h[i] - shift;
  }
  for (size_t k = 0; k < ub_rows.size(); ++k) {
    const size_t j = ub_rows[k];
    a[m + k][j] = 1.0;
    a[m + k][n + m + k] = 1.0;
    rhs[m + k] = p.u[j] - p.l[j];
  }
  for (size_t i = 0; i < n_rows; ++i) {
    if (rhs[i] < 0.0) {
      for (double& v : a[i]) v = -v;
      rhs[i] = -rhs[i];
    }
  }

  // Tableau with one artificial per row appended.
  const size_t total = n_cols + n_rows;
  Dense t(n_rows, std::vector<double>(total + 1, 0.0));
  std::vector<size_t> basis(n_rows);
  for (size_t i = 0; i < n_rows; ++i) {
    for (size_t j = 0; j < n_cols; ++j) t[i][j] = a[i][j];
    t[i][n_cols + i] = 1.0;
    t[i][total] = rhs[i];
    basis[i] = n_cols + i;
  }

  auto pivot = [&](size_t row, size_t col) {
    const double piv = t[row][col];
    for (double& v : t[row]) v /= piv;
    for (size_t i = 0; i < n_rows; ++i) {
      if (i == row || t[i][col] == 0.0) continue;
      const double f = t[i][col];
      for (size_t j = 0; j <= total; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  };

  // Runs Bland's-rule simplex on objective vector `cost` over the columns
  // [0, limit); returns false on unboundedness.
  auto optimize = [&](const std::vector<double>& cost, size_t limit) {
    std::vector<double> reduced(limit);
    while (true) {
      // Duals via basis costs, then reduced costs.
      std::vector<double> basic_cost(n_rows);
      for (size_t i = 0; i < n_rows; ++i) basic_cost[i] = cost[basis[i]];
      size_t entering = limit;
      for (size_t j = 0; j < limit; ++j) {
        double r = cost[j];
        for (size_t i = 0; i < n_rows; ++i) r -= basic_cost[i] * t[i][j];
        reduced[j] = r;
        if (r < -1e-9) {
          entering = j;  // Bland: first improving column
          break;
        }
      }
      if (entering == limit) return true;
      size_t leaving = n_rows;
      double best_ratio = 0.0;
      for (size_t i = 0; i < n_rows; ++i) {
        if (t[i][entering] > 1e-9) {
          const double ratio = t[i][total] / t[i][entering];
          if (leaving == n_rows || ratio < best_ratio - 1e-12 ||
              (std::abs(ratio - best_ratio) <= 1e-12 &&
               basis[i] < basis[leaving])) {
            leaving = i;
            best_ratio = ratio;
          }
        }
      }
      if (leaving == n_rows) return false;  // unbounded direction
      pivot(leaving, entering);
    }
  };

  // Phase 1: minimize the sum of artificials.
  std::vector<double> phase1_cost(total, 0.0);
  for (size_t j = n_cols; j < total; ++j) phase1_cost[j] = 1.0;
  if (!optimize(phase1_cost, total)) {
    throw std::runtime_error("simplex: phase 1 unbounded");
  }
  double art_sum = 0.0;
  for (size_t i = 0; i < n_rows; ++i) {
    if (basis[i] >= n_cols) art_sum += t[i][total];
  }
  OracleSolution out;
  if (art_sum > 1e-7) return out;  // infeasible
  // Kick any degenerate artificials out of the basis where possible.
  for (size_t i = 0; i < n_rows; ++i) {
    if (basis[i] < n_cols) continue;
    for (size_t j = 0; j < n_cols; ++j) {
      if (std::abs(t[i][j]) > 1e-9) {
        pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 over structural columns only.
  std::vector<double> phase2_cost(total, 0.0);
  for (size_t j = 0; j < n; ++j) phase2_cost[j] = p.c[j];
  if (!optimize(phase2_cost, n_cols)) return out;  // unbounded, not reported

  out.feasible = true;
  out.x.assign(n, 0.0);
  for (size_t i = 0; i < n_rows; ++i) {
    if (basis[i] < n) out.x[basis[i]] = t[i][total];
  }
  for (size_t j = 0; j < n; ++j) out.x[j] += p.l[j];
  out.objective = p.objective_offset;
  for (size_t j = 0; j < n; ++j) out.objective += p.c[j] * out.x[j];
  return out;
}

}  // namespace rpdlp::oracle

#endif  // RPDLP_TESTS_ORACLE_HPP_
