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

#ifndef RPDLP_SOLVER_HPP_
#define RPDLP_SOLVER_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpdlp/kkt.hpp"
#include "rpdlp/lp_problem.hpp"
#include "rpdlp/scaling.hpp"
#include "rpdlp/sparse_matrix.hpp"

namespace rpdlp {

struct SolverParams {
  double eps = 1e-4;
  double time_limit = 3600.0;  // seconds
  Index iter_limit = std::numeric_limits<Index>::max();

  // Restart constants: sufficient decay, necessary decay, long-loop fraction.
  double sufficient_decay = 0.2;
  double necessary_decay = 0.8;
  double long_loop_frac = 0.36;
  bool restart_enabled = true;

  Index check_every = 64;
  ScalingConfig scaling;
  std::uint64_t seed = 0;
  // Experimental one-pass adaptive step size; default off so that runs are
  // governed by the fixed eta = 0.9 / ||K|| policy.
  bool adaptive_step = false;

  // Progress logging cadence in iterations; 0 disables. Lines are
  // machine-parsable key=value pairs.
  Index log_every = 0;

  void Validate() const;
};

enum class SolveStatus { kOptimal, kIterLimit, kTimeLimit };

std::string ToString(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::kIterLimit;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> lambda;
  ResidualReport report;  // on the original (unscaled) problem
  Index iterations = 0;
  Index restarts = 0;
  double solve_seconds = 0.0;    // iteration loop only
  double scaling_seconds = 0.0;  // equilibration + problem rescale
};

// Thrown when NaN/Inf contaminates an iterate.
class NumericalFailure : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Power-iteration estimate of ||K||_2. Returns a value never exceeding the
// true norm (it is ||K v|| for a unit vector v); 0 for an all-zero matrix.
// Deterministic for a fixed seed.
double EstimateOpNorm(const SparseMatrix& k, int iters, std::uint64_t seed);

// proj_X(x - (eta/omega) (c - K'y)) with X = [l, u].
std::vector<double> PrimalStep(const LpProblem& problem,
                               std::span<const double> x,
                               std::span<const double> y, double eta,
                               double omega);

// proj_Y(y + eta*omega (q - K (2 x_new - x_old))); the first m1 components
// are unconstrained, the rest are clamped at 0 from below.
std::vector<double> DualStep(const LpProblem& problem,
                             std::span<const double> x_new,
                             std::span<const double> x_old,
                             std::span<const double> y, double eta,
                             double omega);

// Uniform running mean of the iterates of the current inner loop.
class RunningAverage {
 public:
  explicit RunningAverage(Index n, Index m) : x_(n, 0.0), y_(m, 0.0) {}

  void Add(std::span<const double> x, std::span<const double> y);
  void Reset();
  double weight() const { return weight_; }
  const std::vector<double>& x() const { return x_; }
  const std::vector<double>& y() const { return y_; }

 private:
  std::vector<double> x_, y_;
  double weight_ = 0.0;
};

// z_cur wins on a strictly smaller KKT error; ties go to the average.
Iterate ChooseRestartCandidate(const LpProblem& problem, const Iterate& z_cur,
                               const Iterate& z_avg, double omega);

// The three restart conditions: sufficient decay; necessary decay with no
// local progress; long inner loop (t >= frac * k).
bool ShouldRestart(const SolverParams& params, Index t, Index k,
                   double kkt_candidate, double kkt_loop_start,
                   double kkt_prev_candidate);

// Log-space smoothing toward dy/dx; unchanged when either movement is
// below 1e-10.
double UpdatePrimalWeight(double omega, double dx_norm, double dy_norm);

// Per-evaluation snapshot, offered to SolverParams-independent observers
// (progress log, tests, benchmark probes).
struct EvalInfo {
  Index iteration = 0;
  Index inner_iteration = 0;
  Index restarts = 0;
  double omega = 0.0;
  double eta = 0.0;
  double kkt_candidate = 0.0;   // scaled problem
  double kkt_loop_start = 0.0;  // scaled problem
  bool candidate_is_current = false;
  bool restarted = false;
  ResidualReport original_report;  // best of current/average this check
  double seconds = 0.0;
};

using EvalObserver = std::function<void(const EvalInfo&)>;

SolveResult Solve(const LpProblem& problem, const SolverParams& params,
                  const EvalObserver& observer = nullptr);

}  // namespace rpdlp

#endif  // RPDLP_SOLVER_HPP_
